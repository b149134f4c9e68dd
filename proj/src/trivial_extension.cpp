#include "divtop/trivial_extension.hpp"

#include <unordered_map>

#include "divtop/errors.hpp"

namespace divtop {

TrivialExtensionRing::TrivialExtensionRing(std::uint64_t n, std::uint64_t m, std::uint64_t bound)
    : n_(n), m_(m) {
  (void)RingDescriptor::trivial_extension(n, m);  // validates the pair
  if (n * m > bound)
    throw BoundExceeded("Z_" + std::to_string(n) + " ⋉ Z_" + std::to_string(m) + " has " +
                        std::to_string(n * m) + " elements, above the bound " +
                        std::to_string(bound));
}

TrivialExtensionRing::TrivialExtensionRing(const RingDescriptor& r, std::uint64_t bound)
    : TrivialExtensionRing(r.base_modulus(), r.module_modulus(), bound) {
  if (r.kind() != RingKind::TrivialExtension)
    throw InvalidArgument("not a trivial extension ring: " + r.name());
}

std::uint32_t TrivialExtensionRing::add(std::uint32_t r, std::uint32_t s) const {
  return index(base_part(r) + base_part(s), module_part(r) + module_part(s));
}

std::uint32_t TrivialExtensionRing::mul(std::uint32_t r, std::uint32_t s) const {
  const auto a = base_part(r), x = module_part(r);
  const auto b = base_part(s), y = module_part(s);
  return index(a * b, (a % m_) * y + (b % m_) * x);
}

bool TrivialExtensionRing::is_unit(std::uint32_t r) const {
  // (a,x)(b,y) = (1,0) needs ab = 1 in Z_n; a is then a unit mod m too and
  // ay + bx = 0 is solvable for y.
  const auto a = base_part(r);
  for (std::uint64_t b = 0; b < n_; ++b)
    if (a * b % n_ == 1 % n_) return true;
  return false;
}

bool TrivialExtensionRing::is_unit_by_search(std::uint32_t r) const {
  for (std::uint32_t s = 0; s < size(); ++s)
    if (mul(r, s) == one()) return true;
  return false;
}

ElementSet TrivialExtensionRing::principal_ideal(std::uint32_t r) const {
  ElementSet out(size());
  for (std::uint32_t s = 0; s < size(); ++s) out.set(mul(s, r));
  return out;
}

ElementSet TrivialExtensionRing::annihilator(std::uint32_t r) const {
  const auto a = base_part(r), x = module_part(r);
  ElementSet out(size());
  for (std::uint64_t b = 0; b < n_; ++b) {
    if (a * b % n_ != 0) continue;
    for (std::uint64_t y = 0; y < m_; ++y)
      if (((a % m_) * y + (b % m_) * x) % m_ == 0) out.set(index(b, y));
  }
  return out;
}

bool TrivialExtensionRing::is_maximal_ideal(const ElementSet& ideal) const {
  if (ideal.size() != size()) throw InvalidArgument("ideal does not belong to this ring");
  if (ideal.test(one())) return false;
  // R/I is a field: every r ∉ I has some s with rs - 1 ∈ I. Both r and s
  // only matter modulo I, so one representative per coset suffices.
  std::vector<std::uint32_t> members;
  for (auto i = ideal.find_first(); i != ElementSet::npos; i = ideal.find_next(i))
    members.push_back(static_cast<std::uint32_t>(i));
  std::vector<bool> seen(size(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t r = 0; r < size(); ++r) {
    if (seen[r]) continue;
    reps.push_back(r);
    for (auto i : members) seen[add(r, i)] = true;
  }
  const auto minus_one = index(n_ - 1, 0);
  for (auto r : reps) {
    if (ideal.test(r)) continue;
    bool invertible = false;
    for (auto it = reps.begin(); it != reps.end() && !invertible; ++it)
      invertible = ideal.test(add(mul(r, *it), minus_one));
    if (!invertible) return false;
  }
  return true;
}

std::string TrivialExtensionRing::format(std::uint32_t r) const {
  return "(" + std::to_string(base_part(r)) + "," + std::to_string(module_part(r)) + ")";
}

RingDescriptor trivial_extension_ring(std::uint64_t n, std::uint64_t m) {
  return RingDescriptor::trivial_extension(n, m);
}

bool is_pseudo_simple_ring(const TrivialExtensionRing& ring) {
  std::unordered_map<ElementSet, bool> maximal;
  for (std::uint32_t r = 1; r < ring.size(); ++r) {
    if (ring.is_unit(r)) continue;
    auto ann = ring.annihilator(r);
    auto it = maximal.find(ann);
    if (it == maximal.end()) it = maximal.emplace(ann, ring.is_maximal_ideal(ann)).first;
    if (!it->second) return false;
  }
  return true;
}

bool is_pseudo_simple_ring(const RingDescriptor& r, std::uint64_t bound) {
  return is_pseudo_simple_ring(TrivialExtensionRing(r, bound));
}

bool is_pseudo_simple_ring_by_definition(const TrivialExtensionRing& ring) {
  for (std::uint32_t r = 1; r < ring.size(); ++r) {
    if (ring.is_unit(r)) continue;
    const auto cyc = ring.principal_ideal(r);
    for (auto y = cyc.find_next(0); y != ElementSet::npos; y = cyc.find_next(y))
      if (ring.principal_ideal(static_cast<std::uint32_t>(y)) != cyc) return false;
  }
  return true;
}

namespace {

// Z_n with explicit subsets of {0..n-1}.
struct BaseRing {
  std::uint64_t n;

  ElementSet principal(std::uint64_t a) const {
    ElementSet s(n);
    for (std::uint64_t t = 0; t < n; ++t) s.set(a * t % n);
    return s;
  }
  bool is_unit(std::uint64_t a) const {
    for (std::uint64_t t = 0; t < n; ++t)
      if (a * t % n == 1 % n) return true;
    return false;
  }
  bool is_maximal(const ElementSet& ideal) const {
    if (ideal.test(1 % n)) return false;
    for (std::uint64_t r = 0; r < n; ++r) {
      if (ideal.test(r)) continue;
      bool inv = false;
      for (std::uint64_t s = 0; s < n && !inv; ++s) inv = ideal.test((r * s + n - 1) % n);
      if (!inv) return false;
    }
    return true;
  }
  ElementSet annihilator(std::uint64_t a) const {
    ElementSet s(n);
    for (std::uint64_t t = 0; t < n; ++t)
      if (a * t % n == 0) s.set(t);
    return s;
  }
};

}  // namespace

bool local_criterion(const RingDescriptor& r) {
  if (r.kind() != RingKind::TrivialExtension)
    throw InvalidArgument("local criterion applies to trivial extensions, got " + r.name());
  const BaseRing base{r.base_modulus()};
  const auto m = r.module_modulus();

  // Every ideal of Z_n is principal.
  std::vector<ElementSet> maximal;
  for (std::uint64_t a = 0; a < base.n; ++a) {
    auto ideal = base.principal(a);
    if (!base.is_maximal(ideal)) continue;
    bool seen = false;
    for (const auto& mx : maximal) seen = seen || mx == ideal;
    if (!seen) maximal.push_back(ideal);
  }
  if (maximal.size() != 1) return false;

  ElementSet ann_module(base.n);
  for (std::uint64_t a = 0; a < base.n; ++a) {
    bool kills = true;
    for (std::uint64_t x = 0; x < m && kills; ++x) kills = (a % m) * x % m == 0;
    if (kills) ann_module.set(a);
  }
  if (ann_module != maximal.front()) return false;

  for (std::uint64_t a = 1; a < base.n; ++a)
    if (!base.is_unit(a) && base.annihilator(a) != ann_module) return false;
  return true;
}

}  // namespace divtop
