#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "divtop/arith.hpp"

namespace divtop {

/// Dense index of an element inside a finite module (mixed radix, first
/// coordinate most significant, so index order is lexicographic order).
using ElementIndex = std::uint32_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Hard ceiling on the order of any module whose elements get enumerated.
inline constexpr std::uint64_t kMaxEnumerableOrder = std::uint64_t{1} << 22;

enum class RingKind { Integers, PrimeField, TrivialExtension };

class RingDescriptor {
 public:
  static RingDescriptor integers();
  /// Throws InvalidArgument unless p is prime.
  static RingDescriptor prime_field(std::uint64_t p);
  /// Z_n ⋉ Z_m; throws InvalidPair unless m >= 2 and m | n.
  static RingDescriptor trivial_extension(std::uint64_t n, std::uint64_t m);

  RingKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t base_modulus() const { return n_; }
  std::uint64_t module_modulus() const { return m_; }
  std::string name() const;

  bool operator==(const RingDescriptor&) const = default;

 private:
  RingKind kind_ = RingKind::Integers;
  std::uint64_t p_ = 0;
  std::uint64_t n_ = 0;
  std::uint64_t m_ = 0;
};

enum class ShapeKind { FiniteAbelian, VectorSpace };

struct Element {
  std::vector<std::uint64_t> coords;

  auto operator<=>(const Element&) const = default;
};

/// A finite module: a direct sum of cyclic groups Z_{n_1} ⊕ ... ⊕ Z_{n_k}
/// over Z, or F_p^d over the prime field F_p.
class ModuleDescriptor {
 public:
  /// Z_n with residues 0..n-1 as elements.
  static ModuleDescriptor cyclic(std::uint64_t n);
  /// Direct sum of Z_{p^k} in the given factor order.
  static ModuleDescriptor finite_abelian(const std::vector<PrimePower>& factors);
  /// Direct sum of Z_{n_i} for arbitrary moduli n_i >= 2.
  static ModuleDescriptor from_moduli(std::vector<std::uint64_t> moduli);
  static ModuleDescriptor vector_space(std::uint64_t p, unsigned dim);

  const RingDescriptor& ring() const { return ring_; }
  ShapeKind shape() const { return shape_; }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }
  bool is_vector_space() const { return shape_ == ShapeKind::VectorSpace; }

  /// Sorted multiset of prime-power cyclic factors; two Z-modules are
  /// isomorphic iff these agree.
  std::vector<PrimePower> primary_factors() const;
  /// True iff the additive group is cyclic.
  bool is_cyclic_group() const;
  std::string name() const;

  bool is_valid(const Element& e) const;
  /// Throws InvalidArgument on a malformed element.
  ElementIndex index_of(const Element& e) const;
  Element element_at(ElementIndex i) const;
  Element zero() const;
  /// Unit vector e_i.
  Element basis_element(std::size_t i) const;

  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex sub(ElementIndex a, ElementIndex b) const;
  ElementIndex scale(std::uint64_t k, ElementIndex a) const;
  std::uint64_t additive_order(ElementIndex a) const;
  std::uint64_t exponent() const;

  std::string format(const Element& e) const;
  std::string format(ElementIndex i) const { return format(element_at(i)); }

  bool operator==(const ModuleDescriptor&) const = default;

 private:
  ModuleDescriptor(RingDescriptor ring, ShapeKind shape,
                   std::vector<std::uint64_t> moduli);

  RingDescriptor ring_;
  ShapeKind shape_ = ShapeKind::FiniteAbelian;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

/// Throws BoundExceeded when the module is too large to enumerate.
void require_enumerable(const ModuleDescriptor& m, std::uint64_t bound);

struct Submodule {
  ElementSet elements;
  std::vector<Element> generators;

  std::size_t size() const { return elements.count(); }
  bool contains(ElementIndex i) const { return elements.test(i); }
  bool operator==(const Submodule& o) const { return elements == o.elements; }
};

enum class IdealKind { IntegerMultiples, FieldZeroOrUnit, Explicit };

/// An ideal of the coefficient ring: dZ, the zero/unit ideal of F_p, or an
/// explicit member set of a finite ring.
struct IdealDescriptor {
  IdealKind kind = IdealKind::IntegerMultiples;
  std::uint64_t generator = 0;  // dZ; 0 is the zero ideal, 1 the whole ring
  bool is_zero = false;         // F_p: zero ideal vs unit ideal
  ElementSet members;           // finite ring: indices of members

  static IdealDescriptor multiples(std::uint64_t d);
  static IdealDescriptor field(bool zero);
  static IdealDescriptor explicit_set(ElementSet members);

  std::string to_string() const;
  bool operator==(const IdealDescriptor&) const = default;
};

}  // namespace divtop
