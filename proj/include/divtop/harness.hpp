#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtop/module.hpp"
#include "divtop/symbolic.hpp"
#include "divtop/topology.hpp"

namespace divtop {

enum class FamilyShape {
  CyclicGroups,       // Z_n, 2 <= n <= bound
  AbelianGroups,      // every finite abelian group of order 2..bound
  VectorSpaces,       // F_p^d with p^d <= bound
  TrivialExtensions,  // Z_n ⋉ Z_m, m >= 2, m | n, n·m <= bound
  AbelianPairs,       // abelian groups (M1, M2), M1 listed first, |M1|·|M2| <= bound
  Symbolic,           // the infinite families, windowed by bound
};

struct FamilySpec {
  FamilyShape shape = FamilyShape::AbelianGroups;
  std::uint64_t bound = 0;

  static FamilySpec cyclic(std::uint64_t n) { return {FamilyShape::CyclicGroups, n}; }
  static FamilySpec abelian(std::uint64_t n) { return {FamilyShape::AbelianGroups, n}; }
  static FamilySpec vector_spaces(std::uint64_t n) { return {FamilyShape::VectorSpaces, n}; }
  static FamilySpec trivial_extensions(std::uint64_t n) { return {FamilyShape::TrivialExtensions, n}; }
  static FamilySpec pairs(std::uint64_t n) { return {FamilyShape::AbelianPairs, n}; }
  static FamilySpec symbolic(std::uint64_t n) { return {FamilyShape::Symbolic, n}; }

  std::string describe() const;
  bool operator==(const FamilySpec&) const = default;
};

/// One sweep instance. `descriptor` is a MODULE-SPEC (pairs join two with
/// " + ") and reproduces the instance.
struct Instance {
  std::string descriptor;
  std::optional<ModuleDescriptor> module;
  std::optional<ModuleDescriptor> second;
  std::optional<RingDescriptor> ring;
  std::optional<SymbolicFamily> symbolic;
};

/// Abelian groups of exactly this order, one per isomorphism class, with
/// sorted prime-power factors.
std::vector<ModuleDescriptor> abelian_groups_of_order(std::uint64_t n);

/// Finite module families only; throws InvalidArgument otherwise.
std::vector<ModuleDescriptor> enumerate_family(const FamilySpec& spec);
std::vector<Instance> enumerate_instances(const FamilySpec& spec);

enum class Outcome { Pass, Fail, Flagged, OutOfHypothesis };
std::string outcome_name(Outcome o);

struct CaseResult {
  std::string instance;
  Outcome outcome = Outcome::Pass;
  bool lhs = false;  // algebraic side
  bool rhs = false;  // topological side (or the stated criterion)
  std::string witness;
  bool witness_confirmed = false;
  std::string note;
};

struct SweepReport {
  std::string theorem_id;
  std::string statement;
  std::string family;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t flagged = 0;
  std::uint64_t out_of_hypothesis = 0;
  std::vector<CaseResult> failures;
  std::vector<CaseResult> flagged_cases;
  double wall_seconds = 0;

  bool ok() const { return failed == 0; }
};

enum class Shape { Equivalence, Implication, Report };

struct TheoremInfo {
  std::string id;
  std::string statement;
  Shape shape = Shape::Equivalence;
  FamilySpec default_family;
};

const std::vector<TheoremInfo>& theorem_registry();
/// Throws UnknownTheorem.
const TheoremInfo& theorem_info(const std::string& id);

struct HarnessOptions {
  std::size_t class_bound = kDefaultClassBound;
  std::uint64_t submodule_bound = kDefaultSubmoduleBound;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Evaluates both sides of the theorem on every instance of the family.
/// Throws UnknownTheorem, or InvalidArgument when the family does not fit.
SweepReport verify(const std::string& theorem_id, const FamilySpec& family,
                   const HarnessOptions& options = {});
SweepReport verify(const std::string& theorem_id, const HarnessOptions& options = {});

enum class StabilityKind { Submodule, Quotient, DirectSumNoncyclic, DirectSumCyclic };
std::string stability_name(StabilityKind k);
std::optional<StabilityKind> parse_stability(const std::string& s);

SweepReport verify_stability(StabilityKind kind, const FamilySpec& family,
                             const HarnessOptions& options = {});

/// Registry header plus the reports, as JSON text.
std::string reports_to_json(const std::vector<SweepReport>& reports);

inline constexpr int kSweepSchemaVersion = 1;

}  // namespace divtop
