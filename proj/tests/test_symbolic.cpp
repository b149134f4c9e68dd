#include "doctest.h"

#include <random>

#include "divtop/errors.hpp"
#include "divtop/symbolic.hpp"
#include "oracles.hpp"

using namespace divtop;

namespace {

SymbolicClass Q(std::uint64_t a, std::uint64_t b) { return SymbolicClass::fraction(a, b); }
SymbolicClass I(std::uint64_t n) { return SymbolicClass::integer(n); }

std::set<std::string> labels(const TopologySnapshot& t, const ClassSet& s) {
  std::set<std::string> out;
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) out.insert(t.label(i));
  return out;
}

}  // namespace

TEST_CASE("symbolic divisibility") {
  const auto Z = SymbolicFamily::integers(100);
  const auto Qf = SymbolicFamily::rationals(10);
  const auto E = SymbolicFamily::prufer(2, 8);
  CHECK(divides_symbolic(Z, I(3), I(12)));
  CHECK_FALSE(divides_symbolic(Z, I(12), I(3)));
  CHECK(divides_symbolic(E, SymbolicClass::level(3), SymbolicClass::level(1)));
  CHECK_FALSE(divides_symbolic(E, SymbolicClass::level(1), SymbolicClass::level(3)));
  CHECK(divides_symbolic(Qf, Q(1, 2), Q(3, 2)));
  CHECK_FALSE(divides_symbolic(Qf, Q(1, 2), Q(1, 3)));
  CHECK(Q(4, 6) == Q(2, 3));
  CHECK_THROWS_AS(SymbolicClass::fraction(0, 3), InvalidArgument);
}

TEST_CASE("oracle: rational divisibility over a window") {
  const auto f = SymbolicFamily::rationals(12);
  const auto cs = f.window_classes();
  for (const auto& a : cs)
    for (const auto& b : cs) CHECK(divides_symbolic(f, a, b) == oracle::rational_divides(a.num, a.den, b.num, b.den));
}

TEST_CASE("compactness verdicts") {
  const auto e = compactness_verdict_symbolic(SymbolicFamily::prufer(3, 6));
  CHECK(e.verdict.holds);
  CHECK(e.simple_submodules == 1);
  CHECK_FALSE(e.flagged);

  for (const auto& f : {SymbolicFamily::integers(100), SymbolicFamily::rationals(10)}) {
    const auto c = compactness_verdict_symbolic(f);
    CHECK_FALSE(c.verdict.holds);
    CHECK(c.simple_submodules == 0);
    REQUIRE(c.refuter);
    for (const auto& x : c.cover) CHECK_FALSE(divides_symbolic(f, *c.refuter, x));
    CHECK(c.flagged);
  }
}

TEST_CASE("refuting finite subcovers") {
  const auto Z = SymbolicFamily::integers(1000);
  CHECK(refute_finite_subcover(Z, {I(6), I(10), I(15)}) == I(17));
  CHECK(refute_finite_subcover(Z, {I(2)}) == I(3));

  const auto Qf = SymbolicFamily::rationals(100);
  const auto r = refute_finite_subcover(Qf, {Q(1, 2), Q(2, 3)});
  CHECK_FALSE(divides_symbolic(Qf, r, Q(1, 2)));
  CHECK_FALSE(divides_symbolic(Qf, r, Q(2, 3)));

  // The (1/q)-scaled product lands inside U_{2/3}.
  const auto naive = reciprocal_prime_candidate({Q(1, 2), Q(2, 3)});
  CHECK(naive == Q(1, 15));
  CHECK(divides_symbolic(Qf, naive, Q(2, 3)));

  CHECK_THROWS_AS(refute_finite_subcover(SymbolicFamily::prufer(2, 4), {SymbolicClass::level(1)}), UnsupportedFamily);
  CHECK_THROWS_AS(refute_finite_subcover(Z, {}), InvalidArgument);
}

TEST_CASE("property: refuters never divide their inputs") {
  std::mt19937 rng(7);
  const auto Z = SymbolicFamily::integers(1u << 20);
  const auto Qf = SymbolicFamily::rationals(1u << 20);
  for (int round = 0; round < 300; ++round) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<SymbolicClass> zs, qs;
    for (int i = 0; i < k; ++i) {
      zs.push_back(I(2 + rng() % 500));
      qs.push_back(Q(1 + rng() % 30, 1 + rng() % 30));
    }
    const auto rz = refute_finite_subcover(Z, zs);
    for (const auto& c : zs) CHECK(c.num % rz.num != 0);
    try {
      const auto rq = refute_finite_subcover(Qf, qs);
      for (const auto& c : qs) CHECK_FALSE(oracle::rational_divides(rq.num, rq.den, c.num, c.den));
    } catch (const BoundExceeded&) {
      // product overflowed 64 bits; reported, not guessed
    }
  }
}

TEST_CASE("window snapshots") {
  const auto t = window_snapshot(SymbolicFamily::integers(12));
  CHECK(t.size() == 11);
  CHECK(t.truncated());
  CHECK(labels(t, t.basic_open(*t.find("12"))) == std::set<std::string>{"2", "3", "4", "6", "12"});

  const auto e = window_snapshot(SymbolicFamily::prufer(2, 4));
  REQUIRE(e.size() == 4);
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    const auto& a = e.basic_open(i);
    const auto& b = e.basic_open(i + 1);
    CHECK((a.is_proper_subset_of(b) || b.is_proper_subset_of(a)));
  }

  const auto q = window_snapshot(SymbolicFamily::rationals(3));
  std::set<std::string> all;
  for (std::size_t i = 0; i < q.size(); ++i) all.insert(q.label(i));
  CHECK(all == std::set<std::string>{"1", "1/2", "1/3", "2", "2/3", "3", "3/2"});
}

TEST_CASE("oracle: integer window opens are divisor sets") {
  const auto t = window_snapshot(SymbolicFamily::integers(300));
  for (std::uint64_t n = 2; n <= 300; ++n) {
    std::set<std::string> want;
    for (std::uint64_t d = 2; d <= n; ++d)
      if (n % d == 0) want.insert(std::to_string(d));
    CHECK(labels(t, t.basic_open(n - 2)) == want);
  }
}

TEST_CASE("T5 refutation in Z") {
  const auto w = t5_refutation_witness_integers(2, 3, 5);
  CHECK(w.first == I(10));
  CHECK(w.second == I(15));
  CHECK(w.common == I(5));
  CHECK(w.valid());
  const auto v = t5_refutation_witness_integers(2, 3, 2);
  CHECK(v.first == I(4));
  CHECK(v.second == I(6));
  CHECK(v.valid());
  CHECK_THROWS_AS(t5_refutation_witness_integers(2, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(t5_refutation_witness_integers(2, 3, 5, 12), WindowTooSmall);
}

TEST_CASE("Noetherian chain in Z") {
  const auto c = noetherian_chain_integers(3, 5);
  CHECK(c.generators == std::vector<std::uint64_t>{3, 6, 12, 24, 48, 96});
  CHECK(c.strictly_ascending);
  for (std::size_t i = 0; i < c.opens.size(); ++i) {
    std::vector<std::uint64_t> want;
    for (std::uint64_t d = 2; d <= c.generators[i]; ++d)
      if (c.generators[i] % d == 0) want.push_back(d);
    CHECK(c.opens[i] == want);
  }
  for (unsigned l = 0; l <= 20; ++l) CHECK(noetherian_chain_integers(3, l).strictly_ascending);
}

TEST_CASE("density in windowed Z") {
  for (std::uint64_t n : {10, 100, 1000}) {
    const auto r = density_report_integers(n);
    std::uint64_t primes = 0;
    for (std::uint64_t k = 2; k <= n; ++k) primes += oracle::is_prime(k);
    CHECK(r.primes == primes);
    CHECK(r.classes == n - 1);
    CHECK(r.primes_dense);
    CHECK(r.dense_open_contains_primes);
    CHECK(r.dense_open_is_dense);
    CHECK(r.baire);
  }
}

TEST_CASE("rationals are never Hausdorff") {
  for (std::uint64_t b = 1; b <= 8; ++b) {
    const auto h = hausdorff_failure_rationals(SymbolicFamily::rationals(b));
    CHECK(h.every_pair_meets);
  }
  const auto h = hausdorff_failure_rationals(SymbolicFamily::rationals(4));
  REQUIRE(h.first_pair);
  REQUIRE(h.first_common);
  const auto f = SymbolicFamily::rationals(h.enlargement);
  CHECK(divides_symbolic(f, *h.first_common, h.first_pair->first));
  CHECK(divides_symbolic(f, *h.first_common, h.first_pair->second));
}
