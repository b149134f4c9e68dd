#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtop/topology.hpp"

namespace divtop {

enum class FamilyKind { Integers, Rationals, Prufer };

/// A class of one of the infinite families. Integers use num = n >= 2,
/// rationals a reduced positive num/den, Prufer levels num = k >= 1 for
/// [1/p^k + Z].
struct SymbolicClass {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static SymbolicClass integer(std::uint64_t n) { return {n, 1}; }
  /// Reduced; both parts must be positive.
  static SymbolicClass fraction(std::uint64_t a, std::uint64_t b);
  static SymbolicClass level(std::uint64_t k) { return {k, 1}; }

  auto operator<=>(const SymbolicClass&) const = default;
};

/// Z with window 2..N, Q with fractions max(a,b) <= B, or E(p) to depth D.
class SymbolicFamily {
 public:
  static SymbolicFamily integers(std::uint64_t window);
  static SymbolicFamily rationals(std::uint64_t bound);
  static SymbolicFamily prufer(std::uint64_t p, std::uint64_t depth);

  FamilyKind kind() const { return kind_; }
  std::uint64_t bound() const { return bound_; }
  std::uint64_t prime() const { return p_; }
  std::string name() const;

  /// Inside the window as well as a well-formed class of the family.
  bool in_window(const SymbolicClass& c) const;
  bool is_class(const SymbolicClass& c) const;
  std::vector<SymbolicClass> window_classes() const;
  std::string format(const SymbolicClass& c) const;

  bool operator==(const SymbolicFamily&) const = default;

 private:
  FamilyKind kind_ = FamilyKind::Integers;
  std::uint64_t bound_ = 0;
  std::uint64_t p_ = 0;
};

bool divides_symbolic(const SymbolicFamily& f, const SymbolicClass& a, const SymbolicClass& b);

struct SymbolicCompactness {
  PropertyVerdict verdict;
  std::vector<SymbolicClass> cover;       // finite family the refuter was run against
  std::optional<SymbolicClass> refuter;   // class outside the union of their opens
  std::int64_t simple_submodules = 0;
  bool criterion_agrees = true;           // compact iff finitely many simple submodules
  bool flagged = false;
};

SymbolicCompactness compactness_verdict_symbolic(const SymbolicFamily& f);

/// A class outside U_{c_1} ∪ ... ∪ U_{c_k}. Integers: smallest prime above
/// every c_i. Rationals: q·∏ c_i with q the smallest prime above every
/// numerator and denominator. Throws UnsupportedFamily for E(p).
SymbolicClass refute_finite_subcover(const SymbolicFamily& f, const std::vector<SymbolicClass>& opens);

/// (1/q)·∏ c_i, the other candidate for rationals. It can lie inside the
/// union (for {1/2, 2/3} it gives 1/15, which divides 2/3).
SymbolicClass reciprocal_prime_candidate(const std::vector<SymbolicClass>& opens);

/// Window of the family as a finite snapshot. Basic opens are exact,
/// closures are window-relative, and the snapshot is marked truncated.
TopologySnapshot window_snapshot(const SymbolicFamily& f);

struct T5Refutation {
  SymbolicClass first;   // [m·m1]
  SymbolicClass second;  // [m·m2]
  SymbolicClass common;  // [m]
  bool separated = false;
  bool common_in_both = false;

  bool valid() const { return separated && common_in_both; }
};

/// Throws InvalidArgument if m1 | m2 or m2 | m1, WindowTooSmall when the
/// products leave the window 2..window.
T5Refutation t5_refutation_witness_integers(std::uint64_t m1, std::uint64_t m2, std::uint64_t m,
                                            std::uint64_t window = 10000);

struct NoetherianChain {
  std::vector<std::uint64_t> generators;          // 2^k·m, k = 0..L
  std::vector<std::vector<std::uint64_t>> opens;  // exact divisor classes of each
  bool strictly_ascending = false;
};

/// U_m ⊊ U_{2m} ⊊ ... ⊊ U_{2^L m} in Z.
NoetherianChain noetherian_chain_integers(std::uint64_t m, unsigned length);

struct DensityReport {
  std::uint64_t window = 0;
  std::uint64_t classes = 0;
  std::uint64_t primes = 0;
  bool primes_dense = false;               // closure of prime classes is the window
  bool dense_open_contains_primes = false;  // open generated by squarefree classes
  bool dense_open_is_dense = false;
  std::uint64_t dense_open_size = 0;
  bool baire = false;
};

DensityReport density_report_integers(std::uint64_t window);

struct HausdorffFailure {
  std::uint64_t pairs_checked = 0;
  bool every_pair_meets = false;
  std::uint64_t enlargement = 0;  // bound B' with every common class inside max(a,b) <= B'
  std::optional<std::pair<SymbolicClass, SymbolicClass>> first_pair;
  std::optional<SymbolicClass> first_common;
};

/// For every two classes a/b, c/d of the window, gcd(a,c)/lcm(b,d) lies in
/// both minimal neighbourhoods.
HausdorffFailure hausdorff_failure_rationals(const SymbolicFamily& f);

}  // namespace divtop
