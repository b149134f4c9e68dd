#include "divtop/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "divtop/arith.hpp"
#include "divtop/errors.hpp"

namespace divtop {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const u128 r = u128{a} * b;
  if (r > std::numeric_limits<std::uint64_t>::max())
    throw BoundExceeded("product overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

void require_class(const SymbolicFamily& f, const SymbolicClass& c) {
  if (!f.is_class(c)) throw InvalidArgument(f.format(c) + " is not a class of " + f.name());
}

std::vector<std::uint64_t> divisor_classes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (d >= 2) out.push_back(d);
    if (n / d != d && n / d >= 2) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SymbolicClass SymbolicClass::fraction(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw InvalidArgument("fraction parts must be positive");
  const auto g = std::gcd(a, b);
  return {a / g, b / g};
}

SymbolicFamily SymbolicFamily::integers(std::uint64_t window) {
  if (window < 2) throw InvalidArgument("integer window must be >= 2");
  SymbolicFamily f;
  f.kind_ = FamilyKind::Integers;
  f.bound_ = window;
  return f;
}

SymbolicFamily SymbolicFamily::rationals(std::uint64_t bound) {
  if (bound < 1) throw InvalidArgument("rational bound must be >= 1");
  SymbolicFamily f;
  f.kind_ = FamilyKind::Rationals;
  f.bound_ = bound;
  return f;
}

SymbolicFamily SymbolicFamily::prufer(std::uint64_t p, std::uint64_t depth) {
  if (!is_prime(p)) throw InvalidArgument("E(p) needs a prime, got " + std::to_string(p));
  if (depth < 1) throw InvalidArgument("E(p) depth must be >= 1");
  SymbolicFamily f;
  f.kind_ = FamilyKind::Prufer;
  f.bound_ = depth;
  f.p_ = p;
  return f;
}

std::string SymbolicFamily::name() const {
  switch (kind_) {
    case FamilyKind::Integers: return "Z[2.." + std::to_string(bound_) + "]";
    case FamilyKind::Rationals: return "Q[max(a,b)<=" + std::to_string(bound_) + "]";
    case FamilyKind::Prufer:
      return "E(" + std::to_string(p_) + ")[depth " + std::to_string(bound_) + "]";
  }
  return "?";
}

bool SymbolicFamily::is_class(const SymbolicClass& c) const {
  switch (kind_) {
    case FamilyKind::Integers: return c.den == 1 && c.num >= 2;
    case FamilyKind::Rationals: return c.num >= 1 && c.den >= 1 && std::gcd(c.num, c.den) == 1;
    case FamilyKind::Prufer: return c.den == 1 && c.num >= 1;
  }
  return false;
}

bool SymbolicFamily::in_window(const SymbolicClass& c) const {
  if (!is_class(c)) return false;
  if (kind_ == FamilyKind::Rationals) return std::max(c.num, c.den) <= bound_;
  return c.num <= bound_;
}

std::vector<SymbolicClass> SymbolicFamily::window_classes() const {
  std::vector<SymbolicClass> out;
  switch (kind_) {
    case FamilyKind::Integers:
      for (std::uint64_t n = 2; n <= bound_; ++n) out.push_back(SymbolicClass::integer(n));
      break;
    case FamilyKind::Rationals:
      for (std::uint64_t a = 1; a <= bound_; ++a)
        for (std::uint64_t b = 1; b <= bound_; ++b)
          if (std::gcd(a, b) == 1) out.push_back({a, b});
      break;
    case FamilyKind::Prufer:
      for (std::uint64_t k = 1; k <= bound_; ++k) out.push_back(SymbolicClass::level(k));
      break;
  }
  return out;
}

std::string SymbolicFamily::format(const SymbolicClass& c) const {
  switch (kind_) {
    case FamilyKind::Integers: return std::to_string(c.num);
    case FamilyKind::Rationals:
      return c.den == 1 ? std::to_string(c.num) : std::to_string(c.num) + "/" + std::to_string(c.den);
    case FamilyKind::Prufer:
      return c.num == 1 ? "1/" + std::to_string(p_)
                        : "1/" + std::to_string(p_) + "^" + std::to_string(c.num);
  }
  return "?";
}

bool divides_symbolic(const SymbolicFamily& f, const SymbolicClass& a, const SymbolicClass& b) {
  require_class(f, a);
  require_class(f, b);
  switch (f.kind()) {
    case FamilyKind::Integers: return b.num % a.num == 0;
    case FamilyKind::Rationals:
      // b / a = (b.num a.den) / (b.den a.num) is an integer.
      return (u128{b.num} * a.den) % (u128{b.den} * a.num) == 0;
    case FamilyKind::Prufer: return b.num <= a.num;
  }
  return false;
}

SymbolicClass refute_finite_subcover(const SymbolicFamily& f, const std::vector<SymbolicClass>& opens) {
  if (f.kind() == FamilyKind::Prufer)
    throw UnsupportedFamily("E(p) is compact; no finite family can be refuted");
  if (opens.empty()) throw InvalidArgument("refuter needs at least one open");
  for (const auto& c : opens) require_class(f, c);

  SymbolicClass x;
  if (f.kind() == FamilyKind::Integers) {
    std::uint64_t top = 0;
    for (const auto& c : opens) top = std::max(top, c.num);
    x = SymbolicClass::integer(next_prime_above(top));
  } else {
    std::uint64_t top = 0;
    for (const auto& c : opens) top = std::max({top, c.num, c.den});
    const auto q = next_prime_above(top);
    x = SymbolicClass::fraction(q, 1);
    for (const auto& c : opens) {
      const auto g1 = std::gcd(x.num, c.den), g2 = std::gcd(c.num, x.den);
      x = SymbolicClass::fraction(checked_mul(x.num / g1, c.num / g2), checked_mul(x.den / g2, c.den / g1));
    }
  }
  for (const auto& c : opens)
    if (divides_symbolic(f, x, c))
      throw std::logic_error("refuter " + f.format(x) + " divides " + f.format(c));
  return x;
}

SymbolicClass reciprocal_prime_candidate(const std::vector<SymbolicClass>& opens) {
  if (opens.empty()) throw InvalidArgument("refuter needs at least one open");
  std::uint64_t top = 0;
  for (const auto& c : opens) top = std::max({top, c.num, c.den});
  SymbolicClass x{1, next_prime_above(top)};
  for (const auto& c : opens) {
    const auto g1 = std::gcd(x.num, c.den), g2 = std::gcd(c.num, x.den);
    x = SymbolicClass::fraction(checked_mul(x.num / g1, c.num / g2), checked_mul(x.den / g2, c.den / g1));
  }
  return x;
}

SymbolicCompactness compactness_verdict_symbolic(const SymbolicFamily& f) {
  SymbolicCompactness out;
  auto& v = out.verdict;
  v.property = "compact";

  if (f.kind() == FamilyKind::Prufer) {
    // [1/p] lies only in U_[1/p], and U_[1/p] is the whole space.
    const auto top = SymbolicClass::level(1);
    bool whole = true, only = true;
    for (const auto& c : f.window_classes()) {
      whole = whole && divides_symbolic(f, c, top);
      if (c != top) only = only && !divides_symbolic(f, top, c);
    }
    v.holds = whole && only;
    out.cover = {top};
    out.simple_submodules = 1;
    out.criterion_agrees = v.holds;
    v.notes.push_back("only U_[" + f.format(top) + "] contains [" + f.format(top) + "] and it is the whole space");
  } else {
    // Integers and rationals have no simple submodules: mZ contains 2mZ and
    // Zx contains Z(x/2).
    const auto cover_family = f.kind() == FamilyKind::Integers
                                  ? SymbolicFamily::integers(std::min<std::uint64_t>(f.bound(), 30))
                                  : SymbolicFamily::rationals(std::min<std::uint64_t>(f.bound(), 4));
    out.cover = cover_family.window_classes();
    out.refuter = refute_finite_subcover(f, out.cover);
    v.holds = false;
    out.simple_submodules = 0;
    // Finitely many (zero) simple submodules, yet not compact.
    out.criterion_agrees = false;
    out.flagged = true;
    v.notes.push_back("refuter " + f.format(*out.refuter) + " lies outside the union of " +
                      std::to_string(out.cover.size()) + " basic opens");
    v.notes.push_back("no minimal cyclic submodules: the finite-simple-submodule criterion would "
                      "predict compactness");
  }
  v.counts.emplace_back("simple_submodules", out.simple_submodules);
  v.counts.emplace_back("cover_size", static_cast<std::int64_t>(out.cover.size()));
  return out;
}

TopologySnapshot window_snapshot(const SymbolicFamily& f) {
  const auto classes = f.window_classes();
  const auto n = classes.size();
  std::vector<std::string> labels;
  std::vector<ClassSet> rows(n, ClassSet(n));
  for (const auto& c : classes) labels.push_back(f.format(c));
  if (f.kind() == FamilyKind::Integers) {
    // Class n sits at index n - 2.
    for (std::uint64_t a = 2; a <= f.bound(); ++a)
      for (std::uint64_t b = a; b <= f.bound(); b += a) rows[a - 2].set(b - 2);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (divides_symbolic(f, classes[i], classes[j])) rows[i].set(j);
  }
  return TopologySnapshot(f.name(), std::move(labels), std::move(rows), true);
}

T5Refutation t5_refutation_witness_integers(std::uint64_t m1, std::uint64_t m2, std::uint64_t m,
                                            std::uint64_t window) {
  if (m1 < 1 || m2 < 1 || m < 2) throw InvalidArgument("need m1, m2 >= 1 and m >= 2");
  if (m2 % m1 == 0 || m1 % m2 == 0)
    throw InvalidArgument(std::to_string(m1) + " and " + std::to_string(m2) +
                          " are comparable under divisibility");
  const auto a = checked_mul(m, m1), b = checked_mul(m, m2);
  if (std::max(a, b) > window)
    throw WindowTooSmall("window 2.." + std::to_string(window) + " cannot hold " +
                         std::to_string(std::max(a, b)));
  const auto f = SymbolicFamily::integers(window);
  T5Refutation r{SymbolicClass::integer(a), SymbolicClass::integer(b), SymbolicClass::integer(m)};
  // Closure of a point is its multiples in the window.
  r.separated = !divides_symbolic(f, r.first, r.second) && !divides_symbolic(f, r.second, r.first);
  r.common_in_both = divides_symbolic(f, r.common, r.first) && divides_symbolic(f, r.common, r.second);
  return r;
}

NoetherianChain noetherian_chain_integers(std::uint64_t m, unsigned length) {
  if (m < 2) throw InvalidArgument("chain base must be >= 2");
  if (length > 40) throw BoundExceeded("chain length above 40");
  NoetherianChain c;
  std::uint64_t g = m;
  for (unsigned k = 0; k <= length; ++k) {
    if (k) g = checked_mul(g, 2);
    c.generators.push_back(g);
    c.opens.push_back(divisor_classes(g));
  }
  c.strictly_ascending = true;
  for (std::size_t k = 1; k < c.opens.size(); ++k) {
    const auto& lo = c.opens[k - 1];
    const auto& hi = c.opens[k];
    c.strictly_ascending = c.strictly_ascending && lo.size() < hi.size() &&
                           std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
  }
  return c;
}

DensityReport density_report_integers(std::uint64_t window) {
  if (window < 2) throw InvalidArgument("integer window must be >= 2");
  if (window > 10'000'000) throw BoundExceeded("density window above 10^7");
  DensityReport r;
  r.window = window;
  r.classes = window - 1;

  std::vector<bool> composite(window + 1, false);
  for (std::uint64_t p = 2; p * p <= window; ++p)
    if (!composite[p])
      for (std::uint64_t q = p * p; q <= window; q += p) composite[q] = true;

  // Closure of the prime classes: everything some prime divides.
  std::vector<bool> covered(window + 1, false);
  for (std::uint64_t p = 2; p <= window; ++p) {
    if (composite[p]) continue;
    ++r.primes;
    for (std::uint64_t q = p; q <= window; q += p) covered[q] = true;
  }
  r.primes_dense = std::all_of(covered.begin() + 2, covered.end(), [](bool b) { return b; });

  std::vector<bool> squarefree(window + 1, true);
  for (std::uint64_t d = 2; d * d <= window; ++d)
    for (std::uint64_t q = d * d; q <= window; q += d * d) squarefree[q] = false;

  // Open set generated by U_n for squarefree n, then its window closure.
  std::vector<bool> open(window + 1, false);
  for (std::uint64_t d = 2; d <= window; ++d)
    for (std::uint64_t q = d; q <= window; q += d)
      if (squarefree[q]) {
        open[d] = true;
        break;
      }
  std::vector<bool> reach(window + 1, false);
  for (std::uint64_t d = 2; d <= window; ++d) {
    if (!open[d]) continue;
    ++r.dense_open_size;
    for (std::uint64_t q = d; q <= window; q += d) reach[q] = true;
  }
  r.dense_open_is_dense = std::all_of(reach.begin() + 2, reach.end(), [](bool b) { return b; });
  r.dense_open_contains_primes = true;
  for (std::uint64_t p = 2; p <= window; ++p)
    if (!composite[p] && !open[p]) r.dense_open_contains_primes = false;
  // A prime class is only in its own closure, so every dense open holds all
  // primes; intersections of dense opens then stay dense.
  r.baire = r.primes_dense && r.dense_open_contains_primes && r.dense_open_is_dense;
  return r;
}

HausdorffFailure hausdorff_failure_rationals(const SymbolicFamily& f) {
  if (f.kind() != FamilyKind::Rationals) throw UnsupportedFamily("Hausdorff refutation is for Q");
  HausdorffFailure h;
  h.every_pair_meets = true;
  const auto classes = f.window_classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const auto& x = classes[i];
      const auto& y = classes[j];
      const auto common = SymbolicClass::fraction(std::gcd(x.num, y.num), std::lcm(x.den, y.den));
      ++h.pairs_checked;
      const bool meets = divides_symbolic(f, common, x) && divides_symbolic(f, common, y);
      h.every_pair_meets = h.every_pair_meets && meets;
      h.enlargement = std::max({h.enlargement, common.num, common.den});
      if (!h.first_pair) {
        h.first_pair = std::make_pair(x, y);
        h.first_common = common;
      }
    }
  return h;
}

}  // namespace divtop
