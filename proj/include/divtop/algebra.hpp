#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "divtop/module.hpp"

namespace divtop {

inline constexpr std::uint64_t kDefaultSubmoduleBound = 512;

/// One associate class [m] = {n : Rn = Rm} of nonzero elements.
struct AssociateClass {
  ElementIndex representative = 0;  // lexicographically least member
  std::uint64_t cyclic_order = 0;   // |Rm|
  bool generates = false;           // Rm = M
  ElementSet cyclic;                // Rm as an element set
};

/// Every cyclic submodule of a finite module, one per associate class of
/// nonzero elements, ordered by canonical representative. Built once and
/// shared by the predicates below.
class CyclicStructure {
 public:
  explicit CyclicStructure(ModuleDescriptor module);

  const ModuleDescriptor& module() const { return module_; }
  const std::vector<AssociateClass>& classes() const { return classes_; }
  /// Class of a nonzero element; -1 for zero.
  int class_of(ElementIndex e) const { return class_of_[e]; }
  /// Indices into classes() of the classes inside M#, ascending.
  const std::vector<std::size_t>& sharp_classes() const { return sharp_; }
  std::uint64_t element_order(ElementIndex e) const { return orders_[e]; }

  /// rep(i) | rep(j), i.e. rep(j) ∈ R rep(i).
  bool class_divides(std::size_t i, std::size_t j) const {
    return classes_[i].cyclic.test(classes_[j].representative);
  }

 private:
  ModuleDescriptor module_;
  std::vector<std::uint64_t> orders_;
  std::vector<int> class_of_;
  std::vector<AssociateClass> classes_;
  std::vector<std::size_t> sharp_;
};

// Elements and divisibility

/// {m ≠ 0 : Rm ≠ M} in lexicographic order.
std::vector<Element> sharp_elements(const ModuleDescriptor& m);
bool is_sharp(const ModuleDescriptor& m, const Element& e);
Submodule cyclic_submodule(const ModuleDescriptor& m, const Element& e);
/// a | b iff b ∈ Ra.
bool divides(const ModuleDescriptor& m, const Element& a, const Element& b);
bool are_associates(const ModuleDescriptor& m, const Element& a, const Element& b);
/// Lexicographically least element generating the same cyclic submodule.
Element canonical_representative(const ModuleDescriptor& m, const Element& e);

std::optional<Element> gcd_elements(const ModuleDescriptor& m, const Element& a,
                                    const Element& b);
std::optional<Element> lcm_elements(const ModuleDescriptor& m, const Element& a,
                                    const Element& b);
/// Index forms over a prebuilt structure; the results are class
/// representatives (or 0).
std::optional<ElementIndex> gcd_elements(const CyclicStructure& cs, ElementIndex a, ElementIndex b);
std::optional<ElementIndex> lcm_elements(const CyclicStructure& cs, ElementIndex a, ElementIndex b);

// Ideals

IdealDescriptor annihilator(const ModuleDescriptor& m, const Element& e);
/// ann(M) of the whole module.
IdealDescriptor module_annihilator(const ModuleDescriptor& m);
bool is_maximal_ideal(const RingDescriptor& r, const IdealDescriptor& ideal);

// Pseudo simplicity

/// ann(m) maximal for every m ∈ M#; cross-checked against the definition.
bool is_pseudo_simple(const ModuleDescriptor& m);
bool is_pseudo_simple(const CyclicStructure& cs);
bool is_pseudo_simple_by_annihilators(const CyclicStructure& cs);
/// Rm has no proper nonzero submodule for every m ∈ M#.
bool is_pseudo_simple_by_definition(const CyclicStructure& cs);
bool is_simple_module(const ModuleDescriptor& m);

// Submodule lattice

std::vector<Submodule> submodules_all(const ModuleDescriptor& m,
                                      std::uint64_t bound = kDefaultSubmoduleBound);
Submodule zero_submodule(const ModuleDescriptor& m);
Submodule whole_module(const ModuleDescriptor& m);
/// Smallest submodule containing the given elements.
Submodule generated_submodule(const ModuleDescriptor& m, const std::vector<Element>& gens);
Submodule submodule_sum(const ModuleDescriptor& m, const Submodule& a, const Submodule& b);
bool is_cyclic_submodule(const ModuleDescriptor& m, const Submodule& n);
std::vector<Submodule> simple_submodules(const ModuleDescriptor& m);
Submodule socle(const ModuleDescriptor& m);
bool is_essential(const ModuleDescriptor& m, const Submodule& n);
bool is_finitely_cogenerated(const ModuleDescriptor& m);
bool is_maximal_submodule(const ModuleDescriptor& m, const Submodule& n);
/// (N:M) = {r : rM ⊆ N}.
IdealDescriptor colon_ideal(const ModuleDescriptor& m, const Submodule& n);
/// I·M for an ideal of the coefficient ring.
Submodule ideal_times_module(const ModuleDescriptor& m, const IdealDescriptor& ideal);

// Structural predicates

/// Pairwise divisibility on M#; for order <= 64 also compared with the
/// submodule chain.
bool is_uniserial(const ModuleDescriptor& m);
bool is_uniserial(const CyclicStructure& cs);
bool is_uniserial_by_submodules(const ModuleDescriptor& m,
                                std::uint64_t bound = kDefaultSubmoduleBound);

struct StarViolation {
  Element m1;
  Element m2;
  Element x;  // Rm1 + Rm2 ⊆ Rx ≠ M
};

bool satisfies_star(const ModuleDescriptor& m);
std::optional<StarViolation> star_violation(const CyclicStructure& cs);

/// Throws NotInSharp if e ∉ M#.
bool is_irreducible_on_sharp(const ModuleDescriptor& m, const Element& e);
/// One flag per entry of cs.sharp_classes(): irreducible on M#.
std::vector<bool> irreducible_on_sharp_flags(const CyclicStructure& cs);
/// Irreducible on S = M: every divisor of e is an associate of e.
bool is_irreducible_in_module(const ModuleDescriptor& m, const Element& e);

bool is_multiplication(const ModuleDescriptor& m,
                       std::uint64_t bound = kDefaultSubmoduleBound);
/// Every two-generated submodule is cyclic.
bool is_bezout(const ModuleDescriptor& m);
bool is_bezout(const CyclicStructure& cs);
/// Every submodule is cyclic, by full enumeration.
bool is_bezout_by_enumeration(const ModuleDescriptor& m,
                              std::uint64_t bound = kDefaultSubmoduleBound);

// Constructions

struct DirectSum {
  ModuleDescriptor module;
  std::size_t split = 0;  // coordinates [0, split) come from the first summand

  Element inject_first(const Element& a) const;
  Element inject_second(const Element& b) const;
  std::pair<Element, Element> project(const Element& x) const;
};

/// Both summands must share the coefficient ring.
DirectSum direct_sum(const ModuleDescriptor& a, const ModuleDescriptor& b);

/// A module isomorphic to an explicit finite abelian group, with the
/// isomorphism tabulated in both directions.
struct Realization {
  ModuleDescriptor module;
  std::vector<ElementIndex> to_module;    // source id -> module index
  std::vector<std::uint32_t> from_module;  // module index -> source id
};

struct Quotient {
  ModuleDescriptor ambient;
  ModuleDescriptor module;
  std::vector<ElementIndex> image;  // ambient index -> quotient index
  std::vector<ElementIndex> lifts;  // quotient index -> least coset member

  Element project(const Element& x) const;
  Element lift(const Element& q) const;
};

Quotient quotient_module(const ModuleDescriptor& m, const Submodule& n);

struct SubmoduleRealization {
  ModuleDescriptor module;
  std::vector<ElementIndex> embedding;  // module index -> ambient index
};

/// N as a module in its own right.
SubmoduleRealization submodule_as_module(const ModuleDescriptor& m, const Submodule& n);

/// Decompose an explicit finite abelian group (ids 0..size-1, id 0 is zero)
/// into prime-power cyclic factors and tabulate an isomorphism.
Realization realize_group(std::uint32_t size,
                          const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& add,
                          const RingDescriptor& ring);

bool isomorphic(const ModuleDescriptor& a, const ModuleDescriptor& b);

}  // namespace divtop
