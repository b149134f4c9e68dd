#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divtop/module.hpp"

namespace divtop {

inline constexpr std::uint64_t kDefaultRingBound = 10000;

/// The finite ring Z_n ⋉ Z_m = Z_n ⊕ Z_m with (a,x)(b,y) = (ab, ay + bx).
/// Element (a,x) has index a*m + x.
class TrivialExtensionRing {
 public:
  /// Throws InvalidPair unless m >= 2 and m | n, BoundExceeded above bound.
  TrivialExtensionRing(std::uint64_t n, std::uint64_t m,
                       std::uint64_t bound = kDefaultRingBound);
  explicit TrivialExtensionRing(const RingDescriptor& r,
                                std::uint64_t bound = kDefaultRingBound);

  RingDescriptor descriptor() const { return RingDescriptor::trivial_extension(n_, m_); }
  std::uint64_t base_modulus() const { return n_; }
  std::uint64_t module_modulus() const { return m_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(n_ * m_); }

  std::uint32_t index(std::uint64_t a, std::uint64_t x) const {
    return static_cast<std::uint32_t>((a % n_) * m_ + x % m_);
  }
  std::uint64_t base_part(std::uint32_t r) const { return r / m_; }
  std::uint64_t module_part(std::uint32_t r) const { return r % m_; }
  std::uint32_t one() const { return index(1, 0); }

  std::uint32_t add(std::uint32_t r, std::uint32_t s) const;
  std::uint32_t mul(std::uint32_t r, std::uint32_t s) const;
  bool is_unit(std::uint32_t r) const;
  /// Same answer by scanning every s for rs = 1.
  bool is_unit_by_search(std::uint32_t r) const;

  /// Rr = {s r}.
  ElementSet principal_ideal(std::uint32_t r) const;
  /// ann(r) = {s : s r = 0}.
  ElementSet annihilator(std::uint32_t r) const;
  /// I ≠ R and I + Rr = R for every r ∉ I.
  bool is_maximal_ideal(const ElementSet& ideal) const;

  std::string format(std::uint32_t r) const;

 private:
  std::uint64_t n_;
  std::uint64_t m_;
};

RingDescriptor trivial_extension_ring(std::uint64_t n, std::uint64_t m);

/// R as a module over itself: ann(r) maximal for every nonzero nonunit r.
bool is_pseudo_simple_ring(const RingDescriptor& r, std::uint64_t bound = kDefaultRingBound);
bool is_pseudo_simple_ring(const TrivialExtensionRing& ring);
/// Rr simple (no proper nonzero ideal inside) for every nonzero nonunit r.
bool is_pseudo_simple_ring_by_definition(const TrivialExtensionRing& ring);

/// Base ring Z_n is local, its maximal ideal is ann(Z_m), and ann(r) =
/// ann(Z_m) for every nonzero nonunit r of Z_n. Evaluated on Z_n directly.
bool local_criterion(const RingDescriptor& r);

}  // namespace divtop
