#include "divtop/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "divtop/errors.hpp"
#include "divtop/trivial_extension.hpp"

namespace divtop {

namespace {

std::vector<std::size_t> members(const ClassSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

ClassSet from_members(std::size_t n, const std::vector<std::size_t>& xs) {
  ClassSet s(n);
  for (auto x : xs) s.set(x);
  return s;
}

ClassSet down_of(const TopologySnapshot& t, const ClassSet& s) {
  ClassSet out = t.empty_set();
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) out |= t.basic_open(i);
  return out;
}

ClassSet up_of(const TopologySnapshot& t, const ClassSet& s) {
  ClassSet out = t.empty_set();
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) out |= t.multiples(i);
  return out;
}

std::size_t first_of(const ClassSet& s) { return s.find_first(); }

// Down-closure and up-closure of every subset of a small space, as masks.
struct MaskTables {
  std::vector<std::uint32_t> down;
  std::vector<std::uint32_t> up;

  explicit MaskTables(const TopologySnapshot& t) {
    const auto n = t.size();
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<std::uint32_t> d1(n), u1(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (t.basic_open(i).test(j)) d1[i] |= std::uint32_t{1} << j;
        if (t.multiples(i).test(j)) u1[i] |= std::uint32_t{1} << j;
      }
    }
    down.assign(total, 0);
    up.assign(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      down[mask] = down[mask & (mask - 1)] | d1[low];
      up[mask] = up[mask & (mask - 1)] | u1[low];
    }
  }

  bool closed(std::uint32_t mask) const { return up[mask] == mask; }
};

std::vector<std::size_t> mask_members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

Witness pair_witness(std::string kind, std::size_t a, std::size_t b,
                     std::optional<std::size_t> common = std::nullopt) {
  Witness w{std::move(kind), {a}, {b}, {}};
  if (common) w.common.push_back(*common);
  return w;
}

// Components of the comparability graph of the order.
std::vector<std::size_t> components(const TopologySnapshot& t) {
  const auto n = t.size();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (comp[w] != n || !(t.divides(v, w) || t.divides(w, v))) continue;
        comp[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

void require_bound(const TopologySnapshot& t, std::size_t class_bound, const std::string& what) {
  if (t.size() > class_bound || t.size() > 24)
    throw BoundExceeded(what + " enumerates subsets of " + std::to_string(t.size()) +
                        " classes, above the bound " + std::to_string(class_bound));
}

std::string render_set(const TopologySnapshot& t, const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + ("[" + t.label(xs[k]) + "]");
  return xs.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

TopologySnapshot::TopologySnapshot(std::string source, std::vector<std::string> labels,
                                   std::vector<ClassSet> divides_rows, bool truncated)
    : source_(std::move(source)),
      labels_(std::move(labels)),
      multiples_(std::move(divides_rows)),
      truncated_(truncated) {
  const auto n = labels_.size();
  if (multiples_.size() != n) throw std::logic_error("divisibility rows do not match classes");
  divisors_.assign(n, ClassSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (multiples_[i].size() != n) throw std::logic_error("divisibility row has wrong width");
    if (!multiples_[i].test(i)) throw std::logic_error("divisibility is not reflexive");
    for (auto j = multiples_[i].find_first(); j != ClassSet::npos; j = multiples_[i].find_next(j))
      divisors_[j].set(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = multiples_[i].find_first(); j != ClassSet::npos; j = multiples_[i].find_next(j)) {
      if (j != i && multiples_[j].test(i))
        throw std::logic_error("distinct classes " + labels_[i] + " and " + labels_[j] +
                               " divide each other");
      if (!multiples_[j].is_subset_of(multiples_[i]))
        throw std::logic_error("divisibility is not transitive at " + labels_[i]);
    }
  }
}

std::optional<std::size_t> TopologySnapshot::find(const std::string& representative) const {
  auto it = std::find(labels_.begin(), labels_.end(), representative);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

ClassSet TopologySnapshot::full_set() const {
  ClassSet s(size());
  s.set();
  return s;
}

void TopologySnapshot::attach_module(ModuleDescriptor m, std::vector<Element> reps) {
  if (reps.size() != size()) throw std::logic_error("one representative per class expected");
  module_ = std::move(m);
  reps_ = std::move(reps);
}

TopologySnapshot build_topology(const ModuleDescriptor& m) { return build_topology(CyclicStructure(m)); }

TopologySnapshot build_topology(const CyclicStructure& cs) {
  const auto& sharp = cs.sharp_classes();
  const auto n = sharp.size();
  std::vector<std::string> labels;
  std::vector<Element> reps;
  std::vector<ClassSet> rows(n, ClassSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    reps.push_back(cs.module().element_at(cs.classes()[sharp[a]].representative));
    labels.push_back(cs.module().format(reps.back()));
    for (std::size_t b = 0; b < n; ++b)
      if (cs.class_divides(sharp[a], sharp[b])) rows[a].set(b);
  }
  TopologySnapshot t(cs.module().name(), std::move(labels), std::move(rows));
  t.attach_module(cs.module(), std::move(reps));
  return t;
}

TopologySnapshot build_topology(const TrivialExtensionRing& ring) {
  std::vector<std::uint32_t> reps;
  std::vector<ElementSet> ideals;
  for (std::uint32_t r = 1; r < ring.size(); ++r) {
    if (ring.is_unit(r)) continue;
    auto ideal = ring.principal_ideal(r);
    if (std::find(ideals.begin(), ideals.end(), ideal) != ideals.end()) continue;
    reps.push_back(r);
    ideals.push_back(std::move(ideal));
  }
  const auto n = reps.size();
  std::vector<std::string> labels;
  std::vector<ClassSet> rows(n, ClassSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(ring.format(reps[a]));
    for (std::size_t b = 0; b < n; ++b)
      if (ideals[a].test(reps[b])) rows[a].set(b);
  }
  return TopologySnapshot(ring.descriptor().name(), std::move(labels), std::move(rows));
}

bool is_open(const TopologySnapshot& t, const ClassSet& s) { return down_of(t, s) == s; }
bool is_closed(const TopologySnapshot& t, const ClassSet& s) { return up_of(t, s) == s; }
ClassSet open_hull(const TopologySnapshot& t, const ClassSet& s) { return down_of(t, s); }
ClassSet closure(const TopologySnapshot& t, const ClassSet& s) { return up_of(t, s); }

ClassSet closure_of_class_generic(const TopologySnapshot& t, std::size_t c) {
  // Largest open set avoiding c is the union of the basic opens avoiding c.
  ClassSet avoid = t.empty_set();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.basic_open(i).test(c)) avoid |= t.basic_open(i);
  return ~avoid;
}

ClassSet closure_of_class(const TopologySnapshot& t, std::size_t c) {
  if (c >= t.size()) throw InvalidArgument("class index out of range");
  const auto& direct = t.multiples(c);
  if (direct != closure_of_class_generic(t, c))
    throw std::logic_error("closure of [" + t.label(c) + "] disagrees with the generic closure");
  return direct;
}

ClassSet isolated_points(const TopologySnapshot& t) {
  ClassSet out = t.empty_set();
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.basic_open(c).count() == 1) out.set(c);
  if (t.module()) {
    CyclicStructure cs(*t.module());
    const auto flags = irreducible_on_sharp_flags(cs);
    if (flags.size() != t.size()) throw std::logic_error("snapshot does not match its module");
    for (std::size_t c = 0; c < t.size(); ++c)
      if (flags[c] != out.test(c))
        throw std::logic_error("isolated points and irreducible classes differ at [" + t.label(c) + "]");
  }
  return out;
}

std::optional<std::int64_t> PropertyVerdict::count(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  return std::nullopt;
}

std::string PropertyVerdict::summary(const TopologySnapshot& t) const {
  std::string s = property + ": " + (holds ? "true" : "false");
  if (witness) {
    s += "; witness " + render_set(t, witness->first);
    if (!witness->second.empty()) s += "," + render_set(t, witness->second);
    if (!witness->common.empty()) s += " common " + render_set(t, witness->common);
  }
  return s;
}

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::Discrete: return "discrete";
    case Axiom::T3: return "T3";
    case Axiom::T4: return "T4";
    case Axiom::T5: return "T5";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(const std::string& s) {
  std::string k = s;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::tolower(c); });
  if (k == "t0") return Axiom::T0;
  if (k == "t1") return Axiom::T1;
  if (k == "t2" || k == "hausdorff") return Axiom::T2;
  if (k == "discrete") return Axiom::Discrete;
  if (k == "t3" || k == "regular") return Axiom::T3;
  if (k == "t4" || k == "normal") return Axiom::T4;
  if (k == "t5" || k == "completely-normal") return Axiom::T5;
  return std::nullopt;
}

PropertyVerdict check_separation(const TopologySnapshot& t, Axiom axiom, std::size_t class_bound) {
  PropertyVerdict v;
  v.property = axiom_name(axiom);
  const auto n = t.size();
  if (n == 0) v.notes.push_back("empty space: holds vacuously");

  switch (axiom) {
    case Axiom::T0:
      for (std::size_t i = 0; i < n && v.holds; ++i)
        for (std::size_t j = i + 1; j < n && v.holds; ++j)
          if (t.basic_open(i) == t.basic_open(j)) {
            v.holds = false;
            v.witness = pair_witness("same-basic-open", i, j);
          }
      return v;

    case Axiom::T1:
      for (std::size_t c = 0; c < n && v.holds; ++c) {
        auto other = t.multiples(c);
        other.reset(c);
        if (other.any()) {
          v.holds = false;
          v.witness = pair_witness("closure-not-singleton", c, first_of(other));
        }
      }
      return v;

    case Axiom::T2:
      // Minimal neighbourhoods exist, so two points separate iff theirs are disjoint.
      for (std::size_t i = 0; i < n && v.holds; ++i)
        for (std::size_t j = i + 1; j < n && v.holds; ++j) {
          auto common = t.basic_open(i) & t.basic_open(j);
          if (common.any()) {
            v.holds = false;
            v.witness = pair_witness("intersecting-neighbourhoods", i, j, first_of(common));
          }
        }
      return v;

    case Axiom::Discrete:
      for (std::size_t c = 0; c < n && v.holds; ++c) {
        auto other = t.basic_open(c);
        other.reset(c);
        if (other.any()) {
          v.holds = false;
          v.witness = pair_witness("basic-open-not-singleton", c, first_of(other));
        }
      }
      return v;

    case Axiom::T3:
    case Axiom::T4:
    case Axiom::T5:
      break;
  }

  require_bound(t, class_bound, v.property);
  if (n == 0) return v;
  const MaskTables tab(t);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::int64_t checked = 0;

  auto fail = [&](std::string kind, std::uint32_t a, std::uint32_t b) {
    v.holds = false;
    const auto common = tab.down[a] & tab.down[b];
    v.witness = Witness{std::move(kind), mask_members(a), mask_members(b),
                        {static_cast<std::size_t>(std::countr_zero(common))}};
  };

  if (axiom == Axiom::T3) {
    for (std::uint32_t f = 0; f <= full && v.holds; ++f) {
      if (!tab.closed(f)) continue;
      for (std::size_t x = 0; x < n && v.holds; ++x) {
        const auto bit = std::uint32_t{1} << x;
        if (f & bit) continue;
        ++checked;
        if (tab.down[bit] & tab.down[f]) fail("point-closed-set", bit, f);
      }
    }
  } else if (axiom == Axiom::T4) {
    for (std::uint32_t f = 1; f <= full && v.holds; ++f) {
      if (!tab.closed(f)) continue;
      const auto rest = full & ~f;
      for (std::uint32_t g = rest; g && v.holds; g = (g - 1) & rest) {
        if (!tab.closed(g)) continue;
        ++checked;
        if (tab.down[f] & tab.down[g]) fail("disjoint-closed-sets", f, g);
      }
    }
  } else {
    for (std::uint32_t a = 1; a <= full && v.holds; ++a) {
      const auto rest = full & ~tab.up[a];
      for (std::uint32_t b = rest; b && v.holds; b = (b - 1) & rest) {
        if (tab.up[b] & a) continue;
        ++checked;
        if (tab.down[a] & tab.down[b]) fail("separated-sets", a, b);
      }
    }
  }
  v.counts.emplace_back("pairs_checked", checked);
  return v;
}

bool t5_by_point_pairs(const TopologySnapshot& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!t.divides(i, j) && !t.divides(j, i) && (t.basic_open(i) & t.basic_open(j)).any())
        return false;
  return true;
}

PropertyVerdict check_nested(const TopologySnapshot& t) {
  PropertyVerdict v;
  v.property = "nested";
  for (std::size_t i = 0; i < t.size() && v.holds; ++i)
    for (std::size_t j = i + 1; j < t.size() && v.holds; ++j) {
      const auto& a = t.basic_open(i);
      const auto& b = t.basic_open(j);
      if (!a.is_subset_of(b) && !b.is_subset_of(a)) {
        v.holds = false;
        v.witness = pair_witness("incomparable-basic-opens", i, j);
      }
    }
  return v;
}

ConnectivityReport check_connectivity(const TopologySnapshot& t) {
  ConnectivityReport r;
  r.connected.property = "connected";
  r.path_connected.property = "path_connected";
  r.ultraconnected.property = "ultraconnected";
  const auto n = t.size();
  if (n == 0) {
    r.connected.holds = false;
    r.connected.notes.push_back("empty space: reported not connected by convention");
    r.path_connected.holds = false;
    r.path_connected.notes.push_back("empty space: reported not connected by convention");
    r.ultraconnected.holds = false;
    r.ultraconnected.notes.push_back("empty space: reported not ultraconnected, as it is not connected");
    return r;
  }

  const auto comp = components(t);
  for (std::size_t i = 1; i < n && r.connected.holds; ++i)
    if (comp[i] != comp[0]) {
      r.connected.holds = false;
      r.connected.witness = pair_witness("different-components", 0, i);
    }
  r.connected.counts.emplace_back("components", *std::max_element(comp.begin(), comp.end()) + 1);

  r.path_connected.holds = r.connected.holds;
  r.path_connected.witness = r.connected.witness;
  r.path_connected.notes.push_back(
      "derived, not a stated result: a finite space is path connected iff it is connected");

  // Closed sets are unions of point closures, so pairwise closures suffice.
  for (std::size_t i = 0; i < n && r.ultraconnected.holds; ++i)
    for (std::size_t j = i + 1; j < n && r.ultraconnected.holds; ++j)
      if (!t.multiples(i).intersects(t.multiples(j))) {
        r.ultraconnected.holds = false;
        r.ultraconnected.witness = pair_witness("disjoint-closures", i, j);
      }
  return r;
}

PropertyVerdict verify_alexandrov_and_minimal_nbhd(const TopologySnapshot& t, std::size_t class_bound) {
  PropertyVerdict v;
  v.property = "alexandrov";
  const auto n = t.size();
  std::int64_t intersections = 0, opens = 0;

  auto check_family = [&](const std::vector<std::size_t>& family) {
    ClassSet meet = t.full_set();
    for (auto i : family) meet &= t.basic_open(i);
    ++intersections;
    if (!is_open(t, meet) && v.holds) {
      v.holds = false;
      v.witness = Witness{"intersection-not-open", family, {}, members(meet)};
    }
  };

  if (n <= class_bound && n <= 24) {
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < total && v.holds; ++mask) check_family(mask_members(mask));
    // Every open set containing c contains U_c.
    for (std::uint32_t mask = 0; mask < total && v.holds; ++mask) {
      const auto s = from_members(n, mask_members(mask));
      if (!is_open(t, s)) continue;
      ++opens;
      for (auto c : mask_members(mask))
        if (!t.basic_open(c).is_subset_of(s)) {
          v.holds = false;
          v.witness = Witness{"open-misses-minimal-neighbourhood", {c}, mask_members(mask), {}};
          break;
        }
    }
  } else {
    v.notes.push_back("sampled: pairwise intersections and seeded random families");
    for (std::size_t i = 0; i < n && v.holds; ++i)
      for (std::size_t j = i + 1; j < n && v.holds; ++j) check_family({i, j});
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int trial = 0; trial < 2000 && v.holds; ++trial) {
      std::vector<std::size_t> family(1 + trial % 6);
      for (auto& x : family) x = pick(rng);
      check_family(family);
    }
    for (std::size_t c = 0; c < n && v.holds; ++c) {
      // Open hulls of random sets through c.
      ClassSet s = t.empty_set();
      s.set(c);
      s.set(pick(rng));
      s = open_hull(t, s);
      ++opens;
      if (!t.basic_open(c).is_subset_of(s)) {
        v.holds = false;
        v.witness = Witness{"open-misses-minimal-neighbourhood", {c}, members(s), {}};
      }
    }
  }
  v.counts.emplace_back("intersections_checked", intersections);
  v.counts.emplace_back("open_sets_checked", opens);
  return v;
}

PropertyVerdict compactness_verdict(const TopologySnapshot& t) {
  PropertyVerdict v;
  v.property = "compact";
  v.notes.push_back("finite space: every open cover is finite");
  if (t.empty()) v.notes.push_back("empty space: compact");

  // Rc is minimal among cyclic submodules generated inside M# iff nothing
  // else lies in the closure of [c].
  ClassSet cover = t.empty_set();
  std::int64_t minimal = 0;
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.multiples(c).count() == 1) {
      ++minimal;
      cover |= t.basic_open(c);
    }
  v.counts.emplace_back("minimal_cyclic", minimal);
  if (cover != t.full_set()) {
    v.holds = false;
    v.witness = Witness{"uncovered-class", {first_of(~cover)}, {}, {}};
  }
  if (t.module()) {
    const auto simple = static_cast<std::int64_t>(simple_submodules(*t.module()).size());
    v.counts.emplace_back("simple_submodules", simple);
    if (simple != minimal) v.notes.push_back("minimal-cyclic and simple-submodule counts differ");
  }
  return v;
}

PropertyVerdict noetherian_report(const TopologySnapshot& t) {
  PropertyVerdict v;
  v.property = "noetherian";
  v.notes.push_back("finite space: finitely many open sets");
  if (t.module() && t.module()->is_vector_space()) {
    for (std::size_t c = 0; c < t.size() && v.holds; ++c)
      if (t.basic_open(c).count() != 1) {
        v.holds = false;
        v.witness = Witness{"basic-open-not-singleton", {c}, {}, {}};
      }
    if (v.holds) v.notes.push_back("vector space: all basic opens are singletons");
  }
  return v;
}

PropertyVerdict baire_and_density_report(const TopologySnapshot& t) {
  PropertyVerdict v;
  v.property = "baire";
  v.notes.push_back("finite space: finitely many opens, dense opens closed under finite intersection");
  // Isolated points are the irreducible classes; their closure must be everything.
  ClassSet irreducible = t.empty_set();
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.basic_open(c).count() == 1) irreducible.set(c);
  const auto cl = closure(t, irreducible);
  v.counts.emplace_back("irreducible_classes", static_cast<std::int64_t>(irreducible.count()));
  if (cl != t.full_set()) {
    v.holds = false;
    v.witness = Witness{"outside-closure-of-irreducibles", {first_of(~cl)}, {}, {}};
  }
  return v;
}

std::vector<PropertyVerdict> all_verdicts(const TopologySnapshot& t, std::size_t class_bound) {
  std::vector<PropertyVerdict> out;
  for (auto a : {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::Discrete})
    out.push_back(check_separation(t, a, class_bound));
  if (t.size() <= class_bound)
    for (auto a : {Axiom::T3, Axiom::T4, Axiom::T5}) out.push_back(check_separation(t, a, class_bound));
  out.push_back(check_nested(t));
  auto conn = check_connectivity(t);
  out.push_back(conn.connected);
  out.push_back(conn.path_connected);
  out.push_back(conn.ultraconnected);
  out.push_back(verify_alexandrov_and_minimal_nbhd(t, class_bound));
  out.push_back(compactness_verdict(t));
  out.push_back(noetherian_report(t));
  out.push_back(baire_and_density_report(t));
  return out;
}

bool confirm_witness(const TopologySnapshot& t, const PropertyVerdict& v) {
  if (v.holds || !v.witness) return false;
  const auto& w = *v.witness;
  const auto n = t.size();
  auto in_range = [n](const std::vector<std::size_t>& xs) {
    return std::all_of(xs.begin(), xs.end(), [n](std::size_t x) { return x < n; });
  };
  if (!in_range(w.first) || !in_range(w.second) || !in_range(w.common)) return false;
  auto one = [](const std::vector<std::size_t>& xs) { return xs.size() == 1; };
  const auto& p = v.property;

  if (p == "T0" || p == "T1" || p == "T2" || p == "discrete" || p == "nested" || p == "connected" ||
      p == "path_connected" || p == "ultraconnected") {
    if (!one(w.first) || !one(w.second) || w.first[0] == w.second[0]) return false;
    const auto i = w.first[0], j = w.second[0];
    if (p == "T0") return t.basic_open(i) == t.basic_open(j);
    if (p == "T1") return t.multiples(i).test(j);
    if (p == "T2")
      return one(w.common) && t.basic_open(i).test(w.common[0]) && t.basic_open(j).test(w.common[0]);
    if (p == "discrete") return t.basic_open(i).test(j);
    if (p == "nested")
      return !t.basic_open(i).is_subset_of(t.basic_open(j)) &&
             !t.basic_open(j).is_subset_of(t.basic_open(i));
    if (p == "ultraconnected") return !t.multiples(i).intersects(t.multiples(j));
    // No chain of comparable classes joins i to j.
    ClassSet reach = t.empty_set();
    reach.set(i);
    for (bool grew = true; grew;) {
      const auto next = reach | up_of(t, reach) | down_of(t, reach);
      grew = next != reach;
      reach = next;
    }
    return !reach.test(j);
  }

  if (p == "T3" || p == "T4" || p == "T5") {
    const auto a = from_members(n, w.first), b = from_members(n, w.second);
    if (!one(w.common) || !down_of(t, a).test(w.common[0]) || !down_of(t, b).test(w.common[0]))
      return false;
    if (p == "T3") return one(w.first) && is_closed(t, b) && !b.test(w.first[0]);
    if (p == "T4") return is_closed(t, a) && is_closed(t, b) && !a.intersects(b);
    return a.any() && b.any() && !closure(t, a).intersects(b) && !a.intersects(closure(t, b));
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const TopologySnapshot& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !t.divides(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && t.divides(i, k) && t.divides(k, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

namespace {

nlohmann::json verdict_json(const PropertyVerdict& v) {
  nlohmann::json j{{"property", v.property}, {"holds", v.holds}, {"notes", v.notes}};
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [k, c] : v.counts) counts[k] = c;
  j["counts"] = counts;
  if (v.witness)
    j["witness"] = {{"kind", v.witness->kind},
                    {"first", v.witness->first},
                    {"second", v.witness->second},
                    {"common", v.witness->common}};
  else
    j["witness"] = nullptr;
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_topology(const TopologySnapshot& t, ExportFormat format,
                            const std::vector<PropertyVerdict>& verdicts) {
  const auto n = t.size();
  if (format == ExportFormat::Dot) {
    std::ostringstream os;
    os << "digraph divtop {\n";
    os << "  label=\"" << dot_escape(t.source()) << "\";\n";
    for (std::size_t i = 0; i < n; ++i)
      os << "  n" << i << " [label=\"class:" << dot_escape(t.label(i)) << "\"];\n";
    for (auto [a, b] : hasse_edges(t)) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::json j;
  j["schema"] = "divtop.topology";
  j["schema_version"] = kTopologySchemaVersion;
  j["source"] = t.source();
  j["truncated"] = t.truncated();
  j["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    j["classes"].push_back({{"index", i}, {"representative", t.label(i)}});
  j["relation"] = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k && t.divides(i, k)) j["relation"].push_back({i, k});
  j["basic_opens"] = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) j["basic_opens"].push_back(members(t.basic_open(i)));
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) j["verdicts"].push_back(verdict_json(v));
  return j.dump(2) + "\n";
}

}  // namespace divtop
