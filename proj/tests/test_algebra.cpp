#include "doctest.h"

#include "divtop/algebra.hpp"
#include "divtop/errors.hpp"
#include "divtop/harness.hpp"
#include "divtop/trivial_extension.hpp"
#include "oracles.hpp"

using namespace divtop;

namespace {

Element el(std::initializer_list<std::uint64_t> c) { return Element{std::vector<std::uint64_t>(c)}; }
Element z(std::uint64_t v) { return el({v}); }

std::vector<std::uint64_t> zn_values(const std::vector<Element>& es) {
  std::vector<std::uint64_t> out;
  for (const auto& e : es) out.push_back(e.coords[0]);
  return out;
}

std::vector<std::uint64_t> members(const ModuleDescriptor& m, const Submodule& s) {
  std::vector<std::uint64_t> out;
  for (ElementIndex i = 0; i < m.order(); ++i)
    if (s.contains(i)) out.push_back(m.element_at(i).coords[0]);
  return out;
}

const ModuleDescriptor Z6 = ModuleDescriptor::cyclic(6);
const ModuleDescriptor Z12 = ModuleDescriptor::cyclic(12);
const ModuleDescriptor V4 = ModuleDescriptor::from_moduli({2, 2});

}  // namespace

TEST_CASE("sharp elements") {
  CHECK(zn_values(sharp_elements(Z6)) == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(zn_values(sharp_elements(Z12)) == std::vector<std::uint64_t>{2, 3, 4, 6, 8, 9, 10});
  CHECK(sharp_elements(ModuleDescriptor::cyclic(7)).empty());
  CHECK(sharp_elements(ModuleDescriptor::vector_space(3, 2)).size() == 8);
}

TEST_CASE("cyclic submodules and divisibility") {
  CHECK(members(Z6, cyclic_submodule(Z6, z(2))) == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(members(Z12, cyclic_submodule(Z12, z(8))) == std::vector<std::uint64_t>{0, 4, 8});
  const auto s = cyclic_submodule(V4, el({1, 1}));
  CHECK(s.size() == 2);
  CHECK(s.contains(V4.index_of(el({1, 1}))));

  CHECK(divides(Z12, z(2), z(4)));
  CHECK_FALSE(divides(Z12, z(4), z(2)));
  CHECK_FALSE(divides(V4, el({1, 0}), el({0, 1})));
}

TEST_CASE("annihilators and maximal ideals") {
  CHECK(annihilator(Z6, z(2)) == IdealDescriptor::multiples(3));
  CHECK(annihilator(Z12, z(3)) == IdealDescriptor::multiples(4));
  const auto vs = ModuleDescriptor::vector_space(5, 2);
  CHECK(annihilator(vs, el({1, 3})) == IdealDescriptor::field(true));

  CHECK(is_maximal_ideal(RingDescriptor::integers(), IdealDescriptor::multiples(3)));
  CHECK_FALSE(is_maximal_ideal(RingDescriptor::integers(), IdealDescriptor::multiples(4)));
  CHECK(is_maximal_ideal(RingDescriptor::prime_field(7), IdealDescriptor::field(true)));
  CHECK_THROWS_AS(RingDescriptor::prime_field(8), InvalidArgument);
}

TEST_CASE("pseudo simple examples") {
  CHECK(is_pseudo_simple(Z6));
  CHECK_FALSE(is_pseudo_simple(Z12));
  CHECK(is_pseudo_simple(V4));
  CHECK(is_pseudo_simple(ModuleDescriptor::cyclic(5)));  // M# empty
}

TEST_CASE("gcd and lcm up to associates") {
  auto g = gcd_elements(Z12, z(4), z(6));
  REQUIRE(g);
  CHECK(are_associates(Z12, *g, z(2)));
  for (std::uint64_t v : {2, 3, 4, 6}) {
    auto s = gcd_elements(Z12, z(v), z(v));
    REQUIRE(s);
    CHECK(are_associates(Z12, *s, z(v)));
  }
  // Z2+Z2 is not cyclic, so nothing has both (1,0) and (0,1) in its span
  CHECK_FALSE(gcd_elements(V4, el({1, 0}), el({0, 1})));
  const auto v8 = ModuleDescriptor::cyclic(8);
  auto u = gcd_elements(v8, z(4), z(6));
  REQUIRE(u);
  CHECK(are_associates(v8, *u, z(2)));
}

TEST_CASE("submodule lattice") {
  CHECK(submodules_all(Z6).size() == 4);
  CHECK(submodules_all(ModuleDescriptor::cyclic(7)).size() == 2);
  CHECK(submodules_all(V4).size() == 5);

  const auto simples = simple_submodules(Z12);
  REQUIRE(simples.size() == 2);
  std::set<std::size_t> sizes{simples[0].size(), simples[1].size()};
  CHECK(sizes == std::set<std::size_t>{2, 3});

  const auto z9 = ModuleDescriptor::cyclic(9);
  REQUIRE(simple_submodules(z9).size() == 1);
  CHECK(members(z9, simple_submodules(z9)[0]) == std::vector<std::uint64_t>{0, 3, 6});
  CHECK(simple_submodules(ModuleDescriptor::vector_space(2, 2)).size() == 3);

  CHECK(socle(Z12) == cyclic_submodule(Z12, z(2)));
  CHECK(is_essential(z9, cyclic_submodule(z9, z(3))));
  CHECK(is_finitely_cogenerated(Z6));
  CHECK_THROWS_AS(submodules_all(ModuleDescriptor::cyclic(1024), 512), BoundExceeded);
}

TEST_CASE("uniserial, star, irreducibles") {
  CHECK(is_uniserial(ModuleDescriptor::cyclic(27)));
  CHECK_FALSE(is_uniserial(Z6));
  CHECK_FALSE(is_uniserial(V4));

  CHECK(satisfies_star(ModuleDescriptor::vector_space(3, 3)));
  CHECK(satisfies_star(ModuleDescriptor::cyclic(15)));
  const auto sv = star_violation(CyclicStructure(Z12));
  REQUIRE(sv);
  CHECK(divides(Z12, sv->x, sv->m1));
  CHECK(divides(Z12, sv->x, sv->m2));
  CHECK(is_sharp(Z12, sv->x));

  CHECK(is_irreducible_on_sharp(Z6, z(2)));
  CHECK(is_irreducible_on_sharp(Z6, z(4)));
  CHECK_FALSE(is_irreducible_on_sharp(Z12, z(6)));
  CHECK_FALSE(is_irreducible_on_sharp(ModuleDescriptor::cyclic(8), z(4)));
  CHECK_THROWS_AS(is_irreducible_on_sharp(Z6, z(1)), NotInSharp);
}

TEST_CASE("multiplication and Bezout") {
  for (std::uint64_t n = 2; n <= 30; ++n) CHECK(is_multiplication(ModuleDescriptor::cyclic(n)));
  CHECK_FALSE(is_multiplication(V4));
  CHECK(is_bezout(ModuleDescriptor::cyclic(32)));
  // two-generator reduction against full enumeration
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (const auto& m : abelian_groups_of_order(n)) CHECK(is_bezout(m) == is_bezout_by_enumeration(m));
}

TEST_CASE("constructions") {
  CHECK(isomorphic(direct_sum(ModuleDescriptor::cyclic(2), ModuleDescriptor::cyclic(3)).module, Z6));
  const auto q = quotient_module(Z12, cyclic_submodule(Z12, z(4)));
  CHECK(isomorphic(q.module, ModuleDescriptor::cyclic(4)));
  CHECK(isomorphic(quotient_module(Z12, zero_submodule(Z12)).module, Z12));
  const auto sub = submodule_as_module(Z12, cyclic_submodule(Z12, z(2)));
  CHECK(isomorphic(sub.module, Z6));
}

TEST_CASE("trivial extensions") {
  const TrivialExtensionRing r(4, 2);
  CHECK(is_pseudo_simple_ring(r) == local_criterion(RingDescriptor::trivial_extension(4, 2)));
  CHECK(is_pseudo_simple_ring(r) == oracle::TrivExt(4, 2).pseudo_simple());
  CHECK_THROWS_AS(RingDescriptor::trivial_extension(4, 3), InvalidPair);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    CHECK(is_pseudo_simple_ring(TrivialExtensionRing(p, p)));
    CHECK(oracle::TrivExt(p, p).pseudo_simple());
  }
}

TEST_CASE("oracle: trivial extensions by definition, n*m <= 128") {
  for (std::uint64_t m = 2; m * m <= 128; ++m)
    for (std::uint64_t n = m; n * m <= 128; n += m) {
      CAPTURE(n);
      CAPTURE(m);
      const TrivialExtensionRing ring(n, m);
      const oracle::TrivExt o(n, m);
      for (std::uint32_t x = 0; x < ring.size(); ++x) {
        const oracle::TrivExt::E e{ring.base_part(x), ring.module_part(x)};
        CHECK(ring.is_unit(x) == o.unit(e));
        CHECK(ring.is_unit(x) == ring.is_unit_by_search(x));
        CHECK(ring.annihilator(x).count() == o.ann(e).size());
      }
      CHECK(is_pseudo_simple_ring(ring) == o.pseudo_simple());
      CHECK(is_pseudo_simple_ring_by_definition(ring) == o.pseudo_simple());
    }
}

TEST_CASE("oracle: divisibility, spans and pseudo simplicity, abelian groups of order <= 48") {
  for (std::uint64_t n = 2; n <= 48; ++n)
    for (const auto& m : abelian_groups_of_order(n)) {
      CAPTURE(m.name());
      const oracle::Group g(m.moduli());
      REQUIRE(g.order() == m.order());
      for (ElementIndex a = 0; a < m.order(); ++a) {
        const auto ea = m.element_at(a);
        REQUIRE(ea.coords == g.elems[a]);
        CHECK(is_sharp(m, ea) == g.is_sharp(g.elems[a]));
        const auto span = cyclic_submodule(m, ea);
        for (ElementIndex b = 0; b < m.order(); ++b) {
          const bool d = divides(m, ea, m.element_at(b));
          CHECK(d == g.divides(g.elems[a], g.elems[b]));
          CHECK(d == span.contains(b));
        }
      }
      const CyclicStructure cs(m);
      CHECK(is_pseudo_simple(m) == oracle::pseudo_simple(g));
      CHECK(is_pseudo_simple_by_annihilators(cs) == is_pseudo_simple_by_definition(cs));
      CHECK(satisfies_star(m) == oracle::star(g));
      if (n <= 32) {
        CHECK(is_uniserial(m) == oracle::uniserial(g));
        CHECK(submodules_all(m).size() == oracle::subgroups(g).size());
      }
    }
}

TEST_CASE("divisibility is a preorder and matches span inclusion") {
  for (std::uint64_t n : {8, 12, 18, 24, 36}) {
    for (const auto& m : abelian_groups_of_order(n)) {
      const auto sharp = sharp_elements(m);
      for (const auto& a : sharp) {
        CHECK(divides(m, a, a));
        for (const auto& b : sharp) {
          const auto ra = cyclic_submodule(m, a), rb = cyclic_submodule(m, b);
          CHECK(divides(m, a, b) == rb.elements.is_subset_of(ra.elements));
          if (!divides(m, a, b)) continue;
          for (const auto& c : sharp)
            if (divides(m, b, c)) CHECK(divides(m, a, c));
        }
      }
    }
  }
}

TEST_CASE("pseudo simple on Z_n matches the Omega(n) <= 2 count") {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    CAPTURE(n);
    CHECK(is_pseudo_simple(ModuleDescriptor::cyclic(n)) == (oracle::big_omega(n) <= 2));
  }
}

TEST_CASE("degenerate: simple modules have empty M#") {
  for (std::uint64_t p : {2, 3, 13}) {
    const auto m = ModuleDescriptor::cyclic(p);
    CHECK(sharp_elements(m).empty());
    CHECK(is_pseudo_simple(m));
    CHECK(satisfies_star(m));
    CHECK(is_uniserial(m));
  }
}
