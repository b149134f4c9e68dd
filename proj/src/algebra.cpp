#include "divtop/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "divtop/errors.hpp"
#include "divtop/trivial_extension.hpp"

namespace divtop {

namespace {

// Bits held by all class bitsets together.
constexpr std::uint64_t kMaxStructureBits = std::uint64_t{1} << 30;

// S + Rg for a submodule S (as a set) and an element g.
ElementSet extend_by(const ModuleDescriptor& m, const ElementSet& s, ElementIndex g) {
  ElementSet out = s;
  std::vector<ElementIndex> members;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    members.push_back(static_cast<ElementIndex>(i));
  ElementIndex shift = g;
  while (!s.test(shift)) {
    for (auto x : members) out.set(m.add(x, shift));
    shift = m.add(shift, g);
  }
  return out;
}

ElementSet singleton_zero(const ModuleDescriptor& m) {
  ElementSet s(m.order());
  s.set(0);
  return s;
}

bool has_nonzero(const ElementSet& s) {
  auto first = s.find_first();
  if (first == ElementSet::npos) return false;
  return first != 0 || s.find_next(0) != ElementSet::npos;
}

ElementSet multiples_of(const ModuleDescriptor& m, ElementIndex e) {
  ElementSet s(m.order());
  ElementIndex x = 0;
  do {
    s.set(x);
    x = m.add(x, e);
  } while (x != 0);
  return s;
}

}  // namespace

CyclicStructure::CyclicStructure(ModuleDescriptor module) : module_(std::move(module)) {
  require_enumerable(module_, kMaxEnumerableOrder);
  const auto n = module_.order();
  orders_.resize(n);
  class_of_.assign(n, -1);
  for (ElementIndex i = 0; i < n; ++i) orders_[i] = module_.additive_order(i);
  for (ElementIndex i = 1; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    if ((classes_.size() + 1) * n > kMaxStructureBits)
      throw BoundExceeded("too many cyclic submodules in " + module_.name());
    const int id = static_cast<int>(classes_.size());
    AssociateClass c;
    c.representative = i;
    c.cyclic_order = orders_[i];
    c.generates = c.cyclic_order == n;
    c.cyclic.resize(n);
    ElementIndex x = 0;
    for (std::uint64_t k = 0; k < c.cyclic_order; ++k) {
      c.cyclic.set(x);
      if (std::gcd(k, c.cyclic_order) == 1) class_of_[x] = id;
      x = module_.add(x, i);
    }
    if (!c.generates) sharp_.push_back(classes_.size());
    classes_.push_back(std::move(c));
  }
}

std::vector<Element> sharp_elements(const ModuleDescriptor& m) {
  require_enumerable(m, kMaxEnumerableOrder);
  std::vector<Element> out;
  for (ElementIndex i = 1; i < m.order(); ++i)
    if (m.additive_order(i) < m.order()) out.push_back(m.element_at(i));
  return out;
}

bool is_sharp(const ModuleDescriptor& m, const Element& e) {
  auto i = m.index_of(e);
  return i != 0 && m.additive_order(i) < m.order();
}

Submodule cyclic_submodule(const ModuleDescriptor& m, const Element& e) {
  require_enumerable(m, kMaxEnumerableOrder);
  return Submodule{multiples_of(m, m.index_of(e)), {e}};
}

bool divides(const ModuleDescriptor& m, const Element& a, const Element& b) {
  const auto ia = m.index_of(a);
  const auto ib = m.index_of(b);
  ElementIndex x = 0;
  do {
    if (x == ib) return true;
    x = m.add(x, ia);
  } while (x != 0);
  return false;
}

bool are_associates(const ModuleDescriptor& m, const Element& a, const Element& b) {
  return divides(m, a, b) && divides(m, b, a);
}

Element canonical_representative(const ModuleDescriptor& m, const Element& e) {
  const auto i = m.index_of(e);
  const auto ord = m.additive_order(i);
  ElementIndex best = i;
  for (std::uint64_t k = 1; k < ord; ++k)
    if (std::gcd(k, ord) == 1) best = std::min(best, m.scale(k, i));
  return m.element_at(best);
}

namespace {

// Zero plus one representative per class, with its cyclic submodule.
struct Candidate {
  ElementIndex rep;
  const ElementSet* cyclic;
};

std::vector<Candidate> all_candidates(const CyclicStructure& cs, const ElementSet& zero) {
  std::vector<Candidate> out{{0, &zero}};
  for (const auto& c : cs.classes()) out.push_back({c.representative, &c.cyclic});
  return out;
}

}  // namespace

std::optional<ElementIndex> gcd_elements(const CyclicStructure& cs, ElementIndex a, ElementIndex b) {
  const ElementSet zero = singleton_zero(cs.module());
  std::vector<Candidate> common;
  for (const auto& c : all_candidates(cs, zero))
    if (c.cyclic->test(a) && c.cyclic->test(b)) common.push_back(c);
  for (const auto& g : common) {
    bool greatest = std::all_of(common.begin(), common.end(),
                                [&](const Candidate& d) { return d.cyclic->test(g.rep); });
    if (greatest) return g.rep;
  }
  return std::nullopt;
}

std::optional<ElementIndex> lcm_elements(const CyclicStructure& cs, ElementIndex a, ElementIndex b) {
  const auto& m = cs.module();
  const ElementSet common = multiples_of(m, a) & multiples_of(m, b);
  const ElementSet zero = singleton_zero(m);
  for (const auto& c : all_candidates(cs, zero))
    if (common.test(c.rep) && common.is_subset_of(*c.cyclic)) return c.rep;
  return std::nullopt;
}

std::optional<Element> gcd_elements(const ModuleDescriptor& m, const Element& a,
                                    const Element& b) {
  auto g = gcd_elements(CyclicStructure(m), m.index_of(a), m.index_of(b));
  if (!g) return std::nullopt;
  return m.element_at(*g);
}

std::optional<Element> lcm_elements(const ModuleDescriptor& m, const Element& a,
                                    const Element& b) {
  auto l = lcm_elements(CyclicStructure(m), m.index_of(a), m.index_of(b));
  if (!l) return std::nullopt;
  return m.element_at(*l);
}

IdealDescriptor annihilator(const ModuleDescriptor& m, const Element& e) {
  const auto i = m.index_of(e);
  if (m.ring().kind() == RingKind::PrimeField) return IdealDescriptor::field(i != 0);
  return IdealDescriptor::multiples(m.additive_order(i));
}

IdealDescriptor module_annihilator(const ModuleDescriptor& m) {
  if (m.ring().kind() == RingKind::PrimeField) return IdealDescriptor::field(true);
  return IdealDescriptor::multiples(m.exponent());
}

bool is_maximal_ideal(const RingDescriptor& r, const IdealDescriptor& ideal) {
  switch (r.kind()) {
    case RingKind::Integers:
      if (ideal.kind != IdealKind::IntegerMultiples)
        throw InvalidArgument("ideal kind does not match the ring Z");
      return is_prime(ideal.generator);
    case RingKind::PrimeField:
      if (ideal.kind != IdealKind::FieldZeroOrUnit)
        throw InvalidArgument("ideal kind does not match a prime field");
      return ideal.is_zero;
    case RingKind::TrivialExtension:
      if (ideal.kind != IdealKind::Explicit)
        throw InvalidArgument("ideal of a finite ring must be explicit");
      return TrivialExtensionRing(r).is_maximal_ideal(ideal.members);
  }
  return false;
}

bool is_pseudo_simple_by_annihilators(const CyclicStructure& cs) {
  const auto& m = cs.module();
  for (auto c : cs.sharp_classes()) {
    const auto rep = m.element_at(cs.classes()[c].representative);
    if (!is_maximal_ideal(m.ring(), annihilator(m, rep))) return false;
  }
  return true;
}

bool is_pseudo_simple_by_definition(const CyclicStructure& cs) {
  for (auto c : cs.sharp_classes()) {
    const auto& cyc = cs.classes()[c].cyclic;
    for (auto y = cyc.find_next(0); y != ElementSet::npos; y = cyc.find_next(y))
      if (cs.class_of(static_cast<ElementIndex>(y)) != static_cast<int>(c)) return false;
  }
  return true;
}

bool is_pseudo_simple(const CyclicStructure& cs) {
  const bool by_ann = is_pseudo_simple_by_annihilators(cs);
  if (by_ann != is_pseudo_simple_by_definition(cs))
    throw std::logic_error("pseudo-simple paths disagree on " + cs.module().name());
  return by_ann;
}

bool is_pseudo_simple(const ModuleDescriptor& m) { return is_pseudo_simple(CyclicStructure(m)); }

bool is_simple_module(const ModuleDescriptor& m) { return is_prime(m.order()); }

Submodule zero_submodule(const ModuleDescriptor& m) { return Submodule{singleton_zero(m), {}}; }

Submodule whole_module(const ModuleDescriptor& m) {
  Submodule s{ElementSet(m.order()), {}};
  s.elements.set();
  for (std::size_t i = 0; i < m.rank(); ++i) s.generators.push_back(m.basis_element(i));
  return s;
}

Submodule generated_submodule(const ModuleDescriptor& m, const std::vector<Element>& gens) {
  require_enumerable(m, kMaxEnumerableOrder);
  Submodule s = zero_submodule(m);
  for (const auto& g : gens) {
    s.elements = extend_by(m, s.elements, m.index_of(g));
    s.generators.push_back(g);
  }
  return s;
}

Submodule submodule_sum(const ModuleDescriptor& m, const Submodule& a, const Submodule& b) {
  Submodule s = a;
  for (const auto& g : b.generators) {
    s.elements = extend_by(m, s.elements, m.index_of(g));
    s.generators.push_back(g);
  }
  if (!b.elements.is_subset_of(s.elements)) {
    // b carries no usable generators; add all of its elements.
    for (auto i = b.elements.find_first(); i != ElementSet::npos; i = b.elements.find_next(i))
      if (!s.elements.test(i)) s.elements = extend_by(m, s.elements, static_cast<ElementIndex>(i));
  }
  return s;
}

bool is_cyclic_submodule(const ModuleDescriptor& m, const Submodule& n) {
  const auto size = n.size();
  for (auto i = n.elements.find_first(); i != ElementSet::npos; i = n.elements.find_next(i))
    if (m.additive_order(static_cast<ElementIndex>(i)) == size) return true;
  return false;
}

std::vector<Submodule> submodules_all(const ModuleDescriptor& m, std::uint64_t bound) {
  require_enumerable(m, bound);
  CyclicStructure cs(m);
  std::unordered_set<ElementSet> seen;
  std::vector<Submodule> out{zero_submodule(m)};
  seen.insert(out.front().elements);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& c : cs.classes()) {
      if (out[head].elements.test(c.representative)) continue;
      ElementSet next = extend_by(m, out[head].elements, c.representative);
      if (!seen.insert(next).second) continue;
      Submodule s{std::move(next), out[head].generators};
      s.generators.push_back(m.element_at(c.representative));
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Submodule> simple_submodules(const ModuleDescriptor& m) {
  CyclicStructure cs(m);
  std::vector<Submodule> out;
  for (const auto& c : cs.classes())
    if (is_prime(c.cyclic_order)) out.push_back(Submodule{c.cyclic, {m.element_at(c.representative)}});
  return out;
}

Submodule socle(const ModuleDescriptor& m) {
  std::vector<Element> gens;
  for (const auto& s : simple_submodules(m)) gens.push_back(s.generators.front());
  return generated_submodule(m, gens);
}

bool is_essential(const ModuleDescriptor& m, const Submodule& n) {
  CyclicStructure cs(m);
  return std::all_of(cs.classes().begin(), cs.classes().end(), [&](const AssociateClass& c) {
    return has_nonzero(c.cyclic & n.elements);
  });
}

bool is_finitely_cogenerated(const ModuleDescriptor& m) { return is_essential(m, socle(m)); }

bool is_maximal_submodule(const ModuleDescriptor& m, const Submodule& n) {
  if (n.size() == m.order()) return false;
  CyclicStructure cs(m);
  for (const auto& c : cs.classes()) {
    if (n.contains(c.representative)) continue;
    if (extend_by(m, n.elements, c.representative).count() != m.order()) return false;
  }
  return true;
}

IdealDescriptor colon_ideal(const ModuleDescriptor& m, const Submodule& n) {
  if (m.ring().kind() == RingKind::PrimeField)
    return IdealDescriptor::field(n.size() != m.order());
  for (std::uint64_t r = 1;; ++r) {
    bool inside = true;
    for (std::size_t i = 0; i < m.rank() && inside; ++i)
      inside = n.contains(m.scale(r, m.index_of(m.basis_element(i))));
    if (inside) return IdealDescriptor::multiples(r);
  }
}

Submodule ideal_times_module(const ModuleDescriptor& m, const IdealDescriptor& ideal) {
  if (ideal.kind == IdealKind::FieldZeroOrUnit)
    return ideal.is_zero ? zero_submodule(m) : whole_module(m);
  if (ideal.kind != IdealKind::IntegerMultiples)
    throw InvalidArgument("ideal kind does not act on this module");
  std::vector<Element> gens;
  for (std::size_t i = 0; i < m.rank(); ++i)
    gens.push_back(m.element_at(m.scale(ideal.generator, m.index_of(m.basis_element(i)))));
  return generated_submodule(m, gens);
}

bool is_uniserial_by_submodules(const ModuleDescriptor& m, std::uint64_t bound) {
  const auto subs = submodules_all(m, bound);
  // Sorted by size, so a chain means each is contained in the next.
  for (std::size_t i = 1; i < subs.size(); ++i)
    if (!subs[i - 1].elements.is_subset_of(subs[i].elements)) return false;
  return true;
}

bool is_uniserial(const CyclicStructure& cs) {
  const auto& sharp = cs.sharp_classes();
  bool chain = true;
  for (std::size_t a = 0; a < sharp.size() && chain; ++a)
    for (std::size_t b = a + 1; b < sharp.size() && chain; ++b)
      chain = cs.class_divides(sharp[a], sharp[b]) || cs.class_divides(sharp[b], sharp[a]);
  if (cs.module().order() <= 64 && chain != is_uniserial_by_submodules(cs.module()))
    throw std::logic_error("uniserial paths disagree on " + cs.module().name());
  return chain;
}

bool is_uniserial(const ModuleDescriptor& m) { return is_uniserial(CyclicStructure(m)); }

std::optional<StarViolation> star_violation(const CyclicStructure& cs) {
  const auto& m = cs.module();
  const auto& sharp = cs.sharp_classes();
  const auto& classes = cs.classes();
  for (std::size_t a = 0; a < sharp.size(); ++a) {
    for (std::size_t b = a + 1; b < sharp.size(); ++b) {
      const auto r1 = classes[sharp[a]].representative;
      const auto r2 = classes[sharp[b]].representative;
      for (const auto& x : classes) {
        if (x.generates) continue;
        if (x.cyclic.test(r1) && x.cyclic.test(r2))
          return StarViolation{m.element_at(r1), m.element_at(r2), m.element_at(x.representative)};
      }
    }
  }
  return std::nullopt;
}

bool satisfies_star(const ModuleDescriptor& m) { return !star_violation(CyclicStructure(m)); }

bool is_irreducible_on_sharp(const ModuleDescriptor& m, const Element& e) {
  if (!is_sharp(m, e)) throw NotInSharp(m.format(e) + " is not a nonzero nongenerator of " + m.name());
  CyclicStructure cs(m);
  const auto c = static_cast<std::size_t>(cs.class_of(m.index_of(e)));
  for (auto d : cs.sharp_classes())
    if (d != c && cs.class_divides(d, c)) return false;
  return true;
}

std::vector<bool> irreducible_on_sharp_flags(const CyclicStructure& cs) {
  std::vector<bool> out;
  for (auto c : cs.sharp_classes()) {
    bool irreducible = true;
    for (auto d : cs.sharp_classes())
      if (d != c && cs.class_divides(d, c)) irreducible = false;
    out.push_back(irreducible);
  }
  return out;
}

bool is_irreducible_in_module(const ModuleDescriptor& m, const Element& e) {
  const auto i = m.index_of(e);
  if (i == 0) return false;
  CyclicStructure cs(m);
  const auto c = static_cast<std::size_t>(cs.class_of(i));
  for (std::size_t d = 0; d < cs.classes().size(); ++d)
    if (d != c && cs.class_divides(d, c)) return false;
  return true;
}

bool is_multiplication(const ModuleDescriptor& m, std::uint64_t bound) {
  for (const auto& n : submodules_all(m, bound))
    if (ideal_times_module(m, colon_ideal(m, n)).elements != n.elements) return false;
  return true;
}

bool is_bezout(const CyclicStructure& cs) {
  const auto& m = cs.module();
  const auto& classes = cs.classes();
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (classes[a].cyclic.test(classes[b].representative) ||
          classes[b].cyclic.test(classes[a].representative))
        continue;
      Submodule sum{extend_by(m, classes[a].cyclic, classes[b].representative), {}};
      if (!is_cyclic_submodule(m, sum)) return false;
    }
  }
  return true;
}

bool is_bezout(const ModuleDescriptor& m) { return is_bezout(CyclicStructure(m)); }

bool is_bezout_by_enumeration(const ModuleDescriptor& m, std::uint64_t bound) {
  for (const auto& n : submodules_all(m, bound))
    if (!is_cyclic_submodule(m, n)) return false;
  return true;
}

Element DirectSum::inject_first(const Element& a) const {
  Element x{std::vector<std::uint64_t>(module.rank(), 0)};
  std::copy(a.coords.begin(), a.coords.end(), x.coords.begin());
  return x;
}

Element DirectSum::inject_second(const Element& b) const {
  Element x{std::vector<std::uint64_t>(module.rank(), 0)};
  std::copy(b.coords.begin(), b.coords.end(), x.coords.begin() + static_cast<long>(split));
  return x;
}

std::pair<Element, Element> DirectSum::project(const Element& x) const {
  const auto mid = x.coords.begin() + static_cast<long>(split);
  return {Element{{x.coords.begin(), mid}}, Element{{mid, x.coords.end()}}};
}

DirectSum direct_sum(const ModuleDescriptor& a, const ModuleDescriptor& b) {
  if (!(a.ring() == b.ring()))
    throw InvalidArgument("direct sum of modules over different rings");
  if (a.is_vector_space())
    return DirectSum{ModuleDescriptor::vector_space(a.ring().characteristic(),
                                                    static_cast<unsigned>(a.rank() + b.rank())),
                     a.rank()};
  auto moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  return DirectSum{ModuleDescriptor::from_moduli(std::move(moduli)), a.rank()};
}

namespace {

struct GroupView {
  std::uint32_t size;
  const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& add;
};

ElementSet extend_abstract(const GroupView& g, const ElementSet& s, std::uint32_t x) {
  ElementSet out = s;
  std::vector<std::uint32_t> members;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    members.push_back(static_cast<std::uint32_t>(i));
  std::uint32_t shift = x;
  while (!s.test(shift)) {
    for (auto y : members) out.set(g.add(y, shift));
    shift = g.add(shift, x);
  }
  return out;
}

bool choose_basis(const GroupView& g, const std::vector<std::uint32_t>& pool,
                  const std::vector<std::uint64_t>& orders,
                  const std::vector<std::uint64_t>& targets, std::size_t depth,
                  const ElementSet& span, std::vector<std::uint32_t>& basis) {
  if (depth == targets.size()) return true;
  const auto want = span.count() * targets[depth];
  for (auto x : pool) {
    if (orders[x] != targets[depth] || span.test(x)) continue;
    ElementSet next = extend_abstract(g, span, x);
    if (next.count() != want) continue;
    basis.push_back(x);
    if (choose_basis(g, pool, orders, targets, depth + 1, next, basis)) return true;
    basis.pop_back();
  }
  return false;
}

}  // namespace

Realization realize_group(std::uint32_t size,
                          const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& add,
                          const RingDescriptor& ring) {
  if (size < 2) throw InvalidArgument("the zero module has no descriptor");
  GroupView g{size, add};
  std::vector<std::uint64_t> orders(size, 1);
  for (std::uint32_t x = 1; x < size; ++x) {
    std::uint32_t y = x;
    std::uint64_t k = 1;
    while (y != 0) {
      y = add(y, x);
      ++k;
    }
    orders[x] = k;
  }

  std::vector<PrimePower> factors;
  std::vector<std::uint32_t> basis;
  for (const auto& pp : factorize(size)) {
    const auto p = pp.prime;
    std::vector<std::uint32_t> pool;
    for (std::uint32_t x = 0; x < size; ++x) {
      auto o = orders[x];
      while (o % p == 0) o /= p;
      if (o == 1) pool.push_back(x);
    }
    // |P[p^k]| determines how many cyclic factors have exponent >= k.
    std::vector<unsigned> at_least;
    std::uint64_t prev = 1;
    for (unsigned k = 1; prev < pool.size(); ++k) {
      const auto pk = ipow(p, k);
      const auto cnt = static_cast<std::uint64_t>(std::count_if(
          pool.begin(), pool.end(), [&](std::uint32_t x) { return pk % orders[x] == 0; }));
      unsigned c = 0;
      for (auto r = cnt / prev; r > 1; r /= p) ++c;
      at_least.push_back(c);
      prev = cnt;
    }
    std::vector<std::uint64_t> targets;
    for (unsigned j = 1; !at_least.empty() && j <= at_least.front(); ++j) {
      unsigned e = 0;
      for (auto c : at_least) e += c >= j ? 1 : 0;
      targets.push_back(ipow(p, e));
    }
    ElementSet span(size);
    span.set(0);
    std::vector<std::uint32_t> part;
    if (!choose_basis(g, pool, orders, targets, 0, span, part))
      throw std::logic_error("no basis found for a finite abelian group");
    for (std::size_t i = targets.size(); i-- > 0;) {
      unsigned e = 0;
      for (auto t = targets[i]; t > 1; t /= p) ++e;
      factors.push_back({p, e});
      basis.push_back(part[i]);
    }
  }

  ModuleDescriptor module = ring.kind() == RingKind::PrimeField
                                ? ModuleDescriptor::vector_space(ring.characteristic(),
                                                                 static_cast<unsigned>(factors.size()))
                                : ModuleDescriptor::finite_abelian(factors);
  // multiples[i][c] = c * basis[i]
  std::vector<std::vector<std::uint32_t>> multiples(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint32_t y = 0;
    for (std::uint64_t c = 0; c < module.moduli()[i]; ++c) {
      multiples[i].push_back(y);
      y = add(y, basis[i]);
    }
  }
  Realization r{module, std::vector<ElementIndex>(size), std::vector<std::uint32_t>(size)};
  for (ElementIndex q = 0; q < size; ++q) {
    const auto coords = module.element_at(q).coords;
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) x = add(x, multiples[i][coords[i]]);
    r.from_module[q] = x;
    r.to_module[x] = q;
  }
  return r;
}

Element Quotient::project(const Element& x) const {
  return module.element_at(image[ambient.index_of(x)]);
}

Element Quotient::lift(const Element& q) const {
  return ambient.element_at(lifts[module.index_of(q)]);
}

Quotient quotient_module(const ModuleDescriptor& m, const Submodule& n) {
  require_enumerable(m, kMaxEnumerableOrder);
  if (n.size() == m.order()) throw InvalidArgument("M/M is the zero module");
  std::vector<ElementIndex> members;
  for (auto i = n.elements.find_first(); i != ElementSet::npos; i = n.elements.find_next(i))
    members.push_back(static_cast<ElementIndex>(i));
  std::vector<std::uint32_t> coset(m.order(), UINT32_MAX);
  std::vector<ElementIndex> least;
  for (ElementIndex x = 0; x < m.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(least.size());
    least.push_back(x);
    for (auto y : members) coset[m.add(x, y)] = id;
  }
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add =
      [&](std::uint32_t a, std::uint32_t b) { return coset[m.add(least[a], least[b])]; };
  auto real = realize_group(static_cast<std::uint32_t>(least.size()), add, m.ring());
  Quotient q{m, real.module, {}, {}};
  q.image.resize(m.order());
  for (ElementIndex x = 0; x < m.order(); ++x) q.image[x] = real.to_module[coset[x]];
  q.lifts.resize(least.size());
  for (ElementIndex i = 0; i < least.size(); ++i) q.lifts[i] = least[real.from_module[i]];
  return q;
}

SubmoduleRealization submodule_as_module(const ModuleDescriptor& m, const Submodule& n) {
  if (n.size() < 2) throw InvalidArgument("the zero submodule has no descriptor");
  std::vector<ElementIndex> members;
  std::vector<std::uint32_t> id(m.order(), UINT32_MAX);
  for (auto i = n.elements.find_first(); i != ElementSet::npos; i = n.elements.find_next(i)) {
    id[i] = static_cast<std::uint32_t>(members.size());
    members.push_back(static_cast<ElementIndex>(i));
  }
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add =
      [&](std::uint32_t a, std::uint32_t b) { return id[m.add(members[a], members[b])]; };
  auto real = realize_group(static_cast<std::uint32_t>(members.size()), add, m.ring());
  SubmoduleRealization s{real.module, {}};
  for (auto src : real.from_module) s.embedding.push_back(members[src]);
  return s;
}

bool isomorphic(const ModuleDescriptor& a, const ModuleDescriptor& b) {
  return a.ring() == b.ring() && a.primary_factors() == b.primary_factors();
}

}  // namespace divtop
