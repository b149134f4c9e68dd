#include "divtop/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divtop/errors.hpp"

namespace divtop {

RingDescriptor RingDescriptor::integers() { return RingDescriptor{}; }

RingDescriptor RingDescriptor::prime_field(std::uint64_t p) {
  if (!is_prime(p))
    throw InvalidArgument("prime field needs a prime, got " + std::to_string(p));
  RingDescriptor r;
  r.kind_ = RingKind::PrimeField;
  r.p_ = p;
  return r;
}

RingDescriptor RingDescriptor::trivial_extension(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || m < 2 || n % m != 0)
    throw InvalidPair("trivial extension Z_" + std::to_string(n) + " ⋉ Z_" +
                      std::to_string(m) + " needs m >= 2 and m | n");
  RingDescriptor r;
  r.kind_ = RingKind::TrivialExtension;
  r.n_ = n;
  r.m_ = m;
  return r;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::PrimeField:
      return "F_" + std::to_string(p_);
    case RingKind::TrivialExtension:
      return "triv(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
  }
  return "?";
}

ModuleDescriptor::ModuleDescriptor(RingDescriptor ring, ShapeKind shape,
                                   std::vector<std::uint64_t> moduli)
    : ring_(ring), shape_(shape), moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InvalidArgument("module needs at least one cyclic factor");
  for (auto n : moduli_) {
    if (n < 2) throw InvalidArgument("cyclic factor modulus must be >= 2");
    if (order_ > (std::uint64_t{1} << 40) / n)
      throw BoundExceeded("module order too large to represent");
    order_ *= n;
  }
  strides_.assign(moduli_.size(), 1);
  for (std::size_t i = moduli_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * moduli_[i];
}

ModuleDescriptor ModuleDescriptor::cyclic(std::uint64_t n) {
  return ModuleDescriptor(RingDescriptor::integers(), ShapeKind::FiniteAbelian, {n});
}

ModuleDescriptor ModuleDescriptor::finite_abelian(const std::vector<PrimePower>& factors) {
  std::vector<std::uint64_t> moduli;
  for (const auto& f : factors) {
    if (!is_prime(f.prime) || f.exponent == 0)
      throw InvalidArgument("factor must be a positive power of a prime");
    moduli.push_back(f.value());
  }
  return ModuleDescriptor(RingDescriptor::integers(), ShapeKind::FiniteAbelian,
                          std::move(moduli));
}

ModuleDescriptor ModuleDescriptor::from_moduli(std::vector<std::uint64_t> moduli) {
  return ModuleDescriptor(RingDescriptor::integers(), ShapeKind::FiniteAbelian,
                          std::move(moduli));
}

ModuleDescriptor ModuleDescriptor::vector_space(std::uint64_t p, unsigned dim) {
  if (dim == 0) throw InvalidArgument("vector space dimension must be >= 1");
  return ModuleDescriptor(RingDescriptor::prime_field(p), ShapeKind::VectorSpace,
                          std::vector<std::uint64_t>(dim, p));
}

std::vector<PrimePower> ModuleDescriptor::primary_factors() const {
  std::vector<PrimePower> out;
  for (auto n : moduli_)
    for (const auto& pp : factorize(n)) out.push_back(pp);
  std::sort(out.begin(), out.end());
  return out;
}

bool ModuleDescriptor::is_cyclic_group() const {
  auto f = primary_factors();
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i].prime == f[i - 1].prime) return false;
  return true;
}

std::string ModuleDescriptor::name() const {
  if (is_vector_space())
    return "F_" + std::to_string(ring_.characteristic()) + "^" + std::to_string(rank());
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += "+";
    s += "Z_" + std::to_string(moduli_[i]);
  }
  return s;
}

bool ModuleDescriptor::is_valid(const Element& e) const {
  if (e.coords.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (e.coords[i] >= moduli_[i]) return false;
  return true;
}

ElementIndex ModuleDescriptor::index_of(const Element& e) const {
  if (!is_valid(e)) throw InvalidArgument("element " + format(e) + " not in " + name());
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) idx += e.coords[i] * strides_[i];
  return static_cast<ElementIndex>(idx);
}

Element ModuleDescriptor::element_at(ElementIndex i) const {
  Element e;
  e.coords.resize(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k) e.coords[k] = (i / strides_[k]) % moduli_[k];
  return e;
}

Element ModuleDescriptor::zero() const { return Element{std::vector<std::uint64_t>(rank(), 0)}; }

Element ModuleDescriptor::basis_element(std::size_t i) const {
  Element e = zero();
  e.coords.at(i) = 1;
  return e;
}

ElementIndex ModuleDescriptor::add(ElementIndex a, ElementIndex b) const {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    auto x = (a / strides_[k]) % moduli_[k];
    auto y = (b / strides_[k]) % moduli_[k];
    idx += ((x + y) % moduli_[k]) * strides_[k];
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex ModuleDescriptor::sub(ElementIndex a, ElementIndex b) const {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    auto x = (a / strides_[k]) % moduli_[k];
    auto y = (b / strides_[k]) % moduli_[k];
    idx += ((x + moduli_[k] - y) % moduli_[k]) * strides_[k];
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex ModuleDescriptor::scale(std::uint64_t k, ElementIndex a) const {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    auto x = (a / strides_[j]) % moduli_[j];
    idx += ((k % moduli_[j]) * x % moduli_[j]) * strides_[j];
  }
  return static_cast<ElementIndex>(idx);
}

std::uint64_t ModuleDescriptor::additive_order(ElementIndex a) const {
  std::uint64_t ord = 1;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    auto x = (a / strides_[k]) % moduli_[k];
    ord = std::lcm(ord, moduli_[k] / std::gcd(x, moduli_[k]));
  }
  return ord;
}

std::uint64_t ModuleDescriptor::exponent() const {
  std::uint64_t e = 1;
  for (auto n : moduli_) e = std::lcm(e, n);
  return e;
}

std::string ModuleDescriptor::format(const Element& e) const {
  if (e.coords.size() == 1) return std::to_string(e.coords[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? "," : "") << e.coords[i];
  os << ')';
  return os.str();
}

void require_enumerable(const ModuleDescriptor& m, std::uint64_t bound) {
  if (m.order() > bound || m.order() > kMaxEnumerableOrder)
    throw BoundExceeded(m.name() + " has order " + std::to_string(m.order()) +
                        ", above the enumeration bound " + std::to_string(bound));
}

IdealDescriptor IdealDescriptor::multiples(std::uint64_t d) {
  IdealDescriptor i;
  i.kind = IdealKind::IntegerMultiples;
  i.generator = d;
  return i;
}

IdealDescriptor IdealDescriptor::field(bool zero) {
  IdealDescriptor i;
  i.kind = IdealKind::FieldZeroOrUnit;
  i.is_zero = zero;
  return i;
}

IdealDescriptor IdealDescriptor::explicit_set(ElementSet members) {
  IdealDescriptor i;
  i.kind = IdealKind::Explicit;
  i.members = std::move(members);
  return i;
}

std::string IdealDescriptor::to_string() const {
  switch (kind) {
    case IdealKind::IntegerMultiples:
      return std::to_string(generator) + "Z";
    case IdealKind::FieldZeroOrUnit:
      return is_zero ? "0" : "(1)";
    case IdealKind::Explicit: {
      std::ostringstream os;
      os << '{';
      bool first = true;
      for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
        os << (first ? "" : ",") << i;
        first = false;
      }
      os << '}';
      return os.str();
    }
  }
  return "?";
}

}  // namespace divtop
