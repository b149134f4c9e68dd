#include "doctest.h"

#include "json.hpp"

#include "divtop/errors.hpp"
#include "divtop/algebra.hpp"
#include "divtop/harness.hpp"
#include "divtop/spec_parser.hpp"
#include "oracles.hpp"

using namespace divtop;

TEST_CASE("family enumeration") {
  CHECK(enumerate_family(FamilySpec::cyclic(10)).size() == 9);
  CHECK(abelian_groups_of_order(8).size() == 3);
  const auto upto4 = enumerate_family(FamilySpec::abelian(4));
  CHECK(upto4.size() == 4);  // Z2, Z3, Z4, Z2+Z2
  bool has_klein = false;
  for (const auto& m : upto4) has_klein = has_klein || (m.moduli() == std::vector<std::uint64_t>{2, 2});
  CHECK(has_klein);
  CHECK(enumerate_family(FamilySpec::vector_spaces(9)).size() == 7);  // F2^1..3, F3^1..2, F5, F7
}

TEST_CASE("oracle: abelian group counts and no duplicates up to isomorphism") {
  for (std::uint64_t n = 2; n <= 512; ++n) {
    const auto gs = abelian_groups_of_order(n);
    CHECK(gs.size() == oracle::abelian_group_count(n));
    std::set<std::vector<PrimePower>> seen;
    for (const auto& g : gs) {
      CHECK(g.order() == n);
      CHECK(seen.insert(g.primary_factors()).second);
    }
  }
}

TEST_CASE("trivial extension family") {
  const auto inst = enumerate_instances(FamilySpec::trivial_extensions(2000));
  std::uint64_t count = 0;
  for (std::uint64_t m = 2; m <= 2000; ++m)
    for (std::uint64_t n = m; n * m <= 2000; n += m) ++count;
  CHECK(inst.size() == count);
  CHECK(inst.size() == 1226);
}

TEST_CASE("registry") {
  const std::vector<std::string> required{
      "main-equivalence", "fgPS", "pseudoZn", "nested-uniserial", "isolated-irreducible", "tcom-counts",
      "tfinitelycog", "homo-stability", "cfac", "tdir", "tdir2", "ttri", "hausdorff-star", "t5-uniserial",
      "completely-normal", "bezout-star", "gcd-intersection", "tcom"};
  std::set<std::string> ids;
  for (const auto& t : theorem_registry()) CHECK(ids.insert(t.id).second);
  for (const auto& r : required) CHECK(ids.count(r));
  CHECK_THROWS_AS(theorem_info("no-such-theorem"), UnknownTheorem);
  CHECK_THROWS_AS(verify("no-such-theorem"), UnknownTheorem);
}

TEST_CASE("sweeps with zero failures") {
  const auto r = verify("pseudoZn", FamilySpec::cyclic(1000));
  CHECK(r.instances == 999);
  CHECK(r.failed == 0);
  CHECK(r.passed == 999);
  CHECK(verify("main-equivalence", FamilySpec::abelian(100)).failed == 0);
  for (const char* id : {"nested-uniserial", "isolated-irreducible", "hausdorff-star", "tfinitelycog",
                         "completely-normal", "t5-uniserial", "bezout-star", "gcd-intersection", "t0-alexandrov",
                         "quotient-colon", "cfac", "homo-stability", "tdir", "tdir2"}) {
    CAPTURE(id);
    const auto rep = verify(id, FamilySpec{theorem_info(id).default_family.shape,
                                           std::min<std::uint64_t>(theorem_info(id).default_family.bound, 64)});
    CHECK(rep.failed == 0);
    CHECK(rep.passed + rep.out_of_hypothesis == rep.instances);
  }
}

TEST_CASE("implication-shaped theorems only count the forward direction") {
  // Z_8 is uniserial and T5; Z_2+Z_2 is not uniserial yet T5 as well.
  const auto r = verify("t5-uniserial", FamilySpec::abelian(8));
  CHECK(r.failed == 0);
  CHECK(theorem_info("t5-uniserial").shape == Shape::Implication);
}

TEST_CASE("symbolic compactness is FLAGGED, not FAILED") {
  const auto r = verify("tcom");
  CHECK(r.failed == 0);
  CHECK(r.flagged == 2);
  CHECK(r.passed == 2);
  for (const auto& c : r.flagged_cases) {
    CHECK(c.witness_confirmed);
    CHECK(c.outcome == Outcome::Flagged);
  }
}

TEST_CASE("stability and direct sums") {
  CHECK(verify_stability(StabilityKind::Submodule, FamilySpec::abelian(100)).failed == 0);
  CHECK(verify_stability(StabilityKind::Quotient, FamilySpec::abelian(100)).failed == 0);
  CHECK_THROWS_AS(verify_stability(StabilityKind::Submodule, FamilySpec::abelian(600)), BoundExceeded);

  const auto r = verify_stability(StabilityKind::DirectSumCyclic, FamilySpec::pairs(64));
  CHECK(r.failed == 0);
  CHECK(r.passed > 0);
  CHECK(verify_stability(StabilityKind::DirectSumNoncyclic, FamilySpec::pairs(128)).failed == 0);
  CHECK(parse_stability("direct_sum_cyclic") == StabilityKind::DirectSumCyclic);
  CHECK_FALSE(parse_stability("sideways"));
}

TEST_CASE("fgPS sweep reports confirmed witnesses for Z_{p^2}") {
  const auto r = verify("fgPS", FamilySpec::abelian(50));
  std::set<std::string> failing;
  for (const auto& c : r.failures) {
    failing.insert(c.instance);
    CHECK(c.witness_confirmed);
    CHECK(c.lhs);
    CHECK_FALSE(c.rhs);
  }
  CHECK(failing == std::set<std::string>{"Zn:4", "Zn:9", "Zn:25", "Zn:49"});
}

TEST_CASE("reports are deterministic and serialize") {
  HarnessOptions one;
  one.threads = 1;
  HarnessOptions many;
  many.threads = 4;
  const auto a = verify("fgPS", FamilySpec::abelian(60), one);
  const auto b = verify("fgPS", FamilySpec::abelian(60), many);
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    for (auto& r : j["reports"]) r.erase("wall_seconds");
    return j.dump();
  };
  CHECK(strip(reports_to_json({a})) == strip(reports_to_json({b})));

  const auto j = nlohmann::json::parse(reports_to_json({a}));
  CHECK(j["schema"] == "divtop.sweep");
  CHECK(j["schema_version"] == kSweepSchemaVersion);
  CHECK(j["registry"].size() == theorem_registry().size());
  CHECK(j["reports"][0]["failures"].size() == a.failures.size());
}

TEST_CASE("failures reproduce from their descriptors") {
  const auto r = verify("fgPS", FamilySpec::abelian(30));
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& c : r.failures) {
    const auto m = parse_module_spec(c.instance).module();
    CHECK(is_pseudo_simple(m) == c.lhs);
  }
}

TEST_CASE("families that do not fit a theorem are rejected") {
  CHECK_THROWS_AS(verify("ttri", FamilySpec::abelian(10)), InvalidArgument);
  CHECK_THROWS_AS(verify("pseudoZn", FamilySpec::pairs(10)), InvalidArgument);
}
