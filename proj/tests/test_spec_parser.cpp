#include "doctest.h"

#include "divtop/errors.hpp"
#include "divtop/harness.hpp"
#include "divtop/spec_parser.hpp"

using namespace divtop;

TEST_CASE("module specs parse") {
  CHECK(parse_module_spec("Zn:12").module() == ModuleDescriptor::cyclic(12));
  const auto ab = parse_module_spec("ab:2^2x3").module();
  CHECK(ab.order() == 12);
  CHECK(ab.moduli() == std::vector<std::uint64_t>{4, 3});
  CHECK(parse_module_spec("vs:p=3,d=2").module() == ModuleDescriptor::vector_space(3, 2));
  CHECK(parse_module_spec("vs:d=2,p=3") == parse_module_spec("vs:p=3,d=2"));
  CHECK(parse_module_spec("sym:Z,N=100").family == SymbolicFamily::integers(100));
  CHECK(parse_module_spec("sym:Q,B=10").family == SymbolicFamily::rationals(10));
  CHECK(parse_module_spec("sym:E,p=2,D=8").family == SymbolicFamily::prufer(2, 8));
  CHECK(parse_module_spec("triv:n=4,m=2").ring() == RingDescriptor::trivial_extension(4, 2));
}

TEST_CASE("round trip parse, render, parse") {
  for (const char* text : {"Zn:12", "Zn:2", "ab:2^2x3", "ab:3x2^2", "ab:2x2x2", "vs:p=3,d=2", "vs:p=2,d=5",
                           "sym:Z,N=100", "sym:Q,B=10", "sym:E,p=2,D=8", "triv:n=4,m=2", "triv:n=12,m=6"}) {
    CAPTURE(text);
    const auto s = parse_module_spec(text);
    const auto r = render_module_spec(s);
    CHECK(parse_module_spec(r) == s);
    CHECK(render_module_spec(parse_module_spec(r)) == r);
  }
  for (std::uint64_t n = 2; n <= 100; ++n)
    for (const auto& m : abelian_groups_of_order(n)) {
      const auto s = parse_module_spec(spec_for(m));
      CHECK(isomorphic(s.module(), m));
      CHECK(render_module_spec(s) == spec_for(m));
    }
}

TEST_CASE("parse errors name the bad token") {
  auto token_of = [](const std::string& text) -> std::string {
    try {
      (void)parse_module_spec(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  CHECK(token_of("Zn:abc").find("'abc'") != std::string::npos);
  CHECK(token_of("ab:4").find("'4'") != std::string::npos);
  CHECK(token_of("vs:p=4,d=2").find("p=4") != std::string::npos);
  CHECK(token_of("vs:p=3,q=2").find("q=2") != std::string::npos);
  CHECK(token_of("triv:n=4,m=3").find("m=3") != std::string::npos);
  CHECK(token_of("foo:1").find("'foo'") != std::string::npos);
  CHECK(token_of("Zn12").find("Zn12") != std::string::npos);
  CHECK(token_of("sym:W,N=3").find("'W'") != std::string::npos);
  CHECK(token_of("Zn:1") != "no error");
}
