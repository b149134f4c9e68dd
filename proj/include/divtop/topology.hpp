#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divtop/algebra.hpp"
#include "divtop/module.hpp"

namespace divtop {

class TrivialExtensionRing;

/// Bitset over class indices of a snapshot.
using ClassSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultClassBound = 16;

struct ClassId {
  std::size_t index = 0;
  std::string representative;
};

/// The finite space EC(M#) with its divisibility order. Opens are the
/// down-sets (divisor-closed sets), closed sets the up-sets.
class TopologySnapshot {
 public:
  /// divides_rows[i] holds j iff rep(i) | rep(j). Throws std::logic_error
  /// unless the relation is a partial order on the classes.
  TopologySnapshot(std::string source, std::vector<std::string> labels,
                   std::vector<ClassSet> divides_rows, bool truncated = false);

  const std::string& source() const { return source_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool truncated() const { return truncated_; }

  ClassId class_id(std::size_t i) const { return {i, labels_.at(i)}; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(const std::string& representative) const;

  bool divides(std::size_t i, std::size_t j) const { return multiples_[i].test(j); }
  /// U_i = {[n] : n | rep(i)}.
  const ClassSet& basic_open(std::size_t i) const { return divisors_[i]; }
  /// {[n] : rep(i) | n}.
  const ClassSet& multiples(std::size_t i) const { return multiples_[i]; }
  ClassSet empty_set() const { return ClassSet(size()); }
  ClassSet full_set() const;

  /// Set when the snapshot comes from a finite module.
  const std::optional<ModuleDescriptor>& module() const { return module_; }
  const std::vector<Element>& representatives() const { return reps_; }
  void attach_module(ModuleDescriptor m, std::vector<Element> reps);

 private:
  std::string source_;
  std::vector<std::string> labels_;
  std::vector<ClassSet> multiples_;
  std::vector<ClassSet> divisors_;
  bool truncated_ = false;
  std::optional<ModuleDescriptor> module_;
  std::vector<Element> reps_;
};

TopologySnapshot build_topology(const ModuleDescriptor& m);
TopologySnapshot build_topology(const CyclicStructure& cs);
/// The ring as a module over itself; the nongenerators are the nonunits.
TopologySnapshot build_topology(const TrivialExtensionRing& ring);

bool is_open(const TopologySnapshot& t, const ClassSet& s);
bool is_closed(const TopologySnapshot& t, const ClassSet& s);
/// Smallest open set containing s.
ClassSet open_hull(const TopologySnapshot& t, const ClassSet& s);
ClassSet closure(const TopologySnapshot& t, const ClassSet& s);

/// {[n] : rep(c) | n}, cross-checked against the complement of the
/// largest open set avoiding c.
ClassSet closure_of_class(const TopologySnapshot& t, std::size_t c);
ClassSet closure_of_class_generic(const TopologySnapshot& t, std::size_t c);

/// Classes with U_c = {c}. For module snapshots this is compared with the
/// classes irreducible on M#.
ClassSet isolated_points(const TopologySnapshot& t);

/// Evidence attached to a verdict. Point pairs use one class per side.
struct Witness {
  std::string kind;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::vector<std::size_t> common;
};

struct PropertyVerdict {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::int64_t>> counts;

  std::optional<std::int64_t> count(const std::string& key) const;
  /// "T1: false; witness [2],[4]"
  std::string summary(const TopologySnapshot& t) const;
};

enum class Axiom { T0, T1, T2, Discrete, T3, T4, T5 };

std::string axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(const std::string& s);

/// T3/T4/T5 enumerate closed sets and separated pairs; they throw
/// BoundExceeded when the space has more than class_bound points.
PropertyVerdict check_separation(const TopologySnapshot& t, Axiom axiom,
                                 std::size_t class_bound = kDefaultClassBound);
/// T5 via pairs of points only: separated singletons with intersecting
/// minimal neighbourhoods. Independent of the subset enumeration.
bool t5_by_point_pairs(const TopologySnapshot& t);

PropertyVerdict check_nested(const TopologySnapshot& t);

struct ConnectivityReport {
  PropertyVerdict connected;
  PropertyVerdict path_connected;
  PropertyVerdict ultraconnected;
};

ConnectivityReport check_connectivity(const TopologySnapshot& t);

PropertyVerdict verify_alexandrov_and_minimal_nbhd(const TopologySnapshot& t,
                                                   std::size_t class_bound = kDefaultClassBound);
PropertyVerdict compactness_verdict(const TopologySnapshot& t);
PropertyVerdict noetherian_report(const TopologySnapshot& t);
PropertyVerdict baire_and_density_report(const TopologySnapshot& t);

/// Every verdict this module can produce for t; brute-force ones only
/// within class_bound.
std::vector<PropertyVerdict> all_verdicts(const TopologySnapshot& t,
                                          std::size_t class_bound = kDefaultClassBound);

/// Re-derives a failing verdict's witness from the snapshot alone.
bool confirm_witness(const TopologySnapshot& t, const PropertyVerdict& v);

enum class ExportFormat { Dot, Json };

/// Pairs (i, j), i ≠ j, with rep(i) | rep(j) and nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const TopologySnapshot& t);

std::string export_topology(const TopologySnapshot& t, ExportFormat format,
                            const std::vector<PropertyVerdict>& verdicts = {});

inline constexpr int kTopologySchemaVersion = 1;

}  // namespace divtop
