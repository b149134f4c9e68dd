#include "divtop/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "divtop/algebra.hpp"
#include "divtop/errors.hpp"
#include "divtop/spec_parser.hpp"
#include "divtop/trivial_extension.hpp"

namespace divtop {

namespace {

// Descending partitions of e.
void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(e, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(e - k, k, cur, out);
    cur.pop_back();
  }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

CaseResult pass(const Instance& inst, bool lhs, bool rhs) {
  CaseResult r;
  r.instance = inst.descriptor;
  r.lhs = lhs;
  r.rhs = rhs;
  r.outcome = Outcome::Pass;
  return r;
}

CaseResult out_of_hypothesis(const Instance& inst, std::string note) {
  CaseResult r;
  r.instance = inst.descriptor;
  r.outcome = Outcome::OutOfHypothesis;
  r.note = std::move(note);
  return r;
}

CaseResult fail(const Instance& inst, bool lhs, bool rhs, std::string witness, bool confirmed,
                std::string note = {}) {
  CaseResult r;
  r.instance = inst.descriptor;
  r.outcome = Outcome::Fail;
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness = std::move(witness);
  r.witness_confirmed = confirmed;
  r.note = std::move(note);
  return r;
}

CaseResult equivalence(const Instance& inst, bool lhs, bool rhs, const std::function<std::string()>& witness,
                       const std::function<bool()>& confirm) {
  if (lhs == rhs) return pass(inst, lhs, rhs);
  return fail(inst, lhs, rhs, witness(), confirm());
}

CaseResult implication(const Instance& inst, bool lhs, bool rhs, const std::function<std::string()>& witness,
                       const std::function<bool()>& confirm) {
  if (!lhs || rhs) return pass(inst, lhs, rhs);
  return fail(inst, lhs, rhs, witness(), confirm());
}

const ModuleDescriptor& need_module(const Instance& inst) {
  if (!inst.module) throw InvalidArgument(inst.descriptor + " is not a finite module");
  return *inst.module;
}

// Sharp-class representative that is not an irreducible on M#, found on
// elements rather than classes: some nonzero nongenerator n has m ∈ Rn
// with |Rn| > |Rm|.
std::vector<bool> irreducible_by_elements(const CyclicStructure& cs) {
  const auto& m = cs.module();
  const auto n = m.order();
  std::vector<bool> reducible(n, false);
  for (ElementIndex x = 1; x < n; ++x) {
    const auto ox = cs.element_order(x);
    if (ox == n) continue;  // generator
    ElementIndex y = x;
    while (y != 0) {
      if (cs.element_order(y) < ox) reducible[y] = true;
      y = m.add(y, x);
    }
  }
  std::vector<bool> out;
  for (auto c : cs.sharp_classes()) out.push_back(!reducible[cs.classes()[c].representative]);
  return out;
}

bool fgps_classification(const ModuleDescriptor& m) {
  const auto f = m.primary_factors();
  if (!std::all_of(f.begin(), f.end(), [](const PrimePower& x) { return x.exponent == 1; })) return false;
  const bool same_prime =
      std::all_of(f.begin(), f.end(), [&](const PrimePower& x) { return x.prime == f.front().prime; });
  if (same_prime) return true;  // (Z_p)^k
  return f.size() == 2;         // Z_p ⊕ Z_q, p ≠ q
}

bool omega_at_most_two(std::uint64_t n) {
  unsigned total = 0;
  for (const auto& f : factorize(n)) total += f.exponent;
  return total <= 2;
}

std::string verdict_text(const TopologySnapshot& t, const PropertyVerdict& v) { return v.summary(t); }

bool confirm_false_verdicts(const TopologySnapshot& t, const std::vector<PropertyVerdict>& vs) {
  for (const auto& v : vs)
    if (!v.holds && !confirm_witness(t, v)) return false;
  return true;
}

// A nonzero nongenerator whose cyclic submodule is not simple, or nothing.
std::optional<ElementIndex> non_simple_cyclic(const CyclicStructure& cs) {
  for (auto c : cs.sharp_classes())
    if (!is_prime(cs.classes()[c].cyclic_order)) return cs.classes()[c].representative;
  return std::nullopt;
}

std::string algebra_witness(const CyclicStructure& cs, bool ps) {
  const auto& m = cs.module();
  if (!ps) {
    if (auto e = non_simple_cyclic(cs))
      return "ann(" + m.format(*e) + ") = " + annihilator(m, m.element_at(*e)).to_string() + " not maximal";
    return "pseudo simple by annihilators, yet no non-simple cyclic found";
  }
  return "every nonzero nongenerator generates a simple submodule";
}

// Independent re-check of the pseudo-simple value: |Rm| prime for every
// sharp element.
bool confirm_pseudo_simple(const CyclicStructure& cs, bool claimed) {
  return is_pseudo_simple_by_definition(cs) == claimed && !non_simple_cyclic(cs).has_value() == claimed;
}

// Theorem evaluations ------------------------------------------------------

CaseResult eval_main(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  const bool ps = is_pseudo_simple(cs);
  const auto sv = star_violation(cs);
  const std::vector<PropertyVerdict> vs{check_separation(t, Axiom::T1), check_separation(t, Axiom::T2),
                                        check_separation(t, Axiom::Discrete)};
  const bool all_agree = std::all_of(vs.begin(), vs.end(), [&](const PropertyVerdict& v) { return v.holds == ps; }) &&
                         !sv.has_value() == ps;
  if (all_agree) return pass(inst, ps, vs[0].holds);
  std::string w = "pseudo_simple=" + bool_str(ps) + " star=" + bool_str(!sv);
  for (const auto& v : vs) w += "; " + verdict_text(t, v);
  if (sv) w += "; star violation " + m.format(sv->m1) + "," + m.format(sv->m2) + " in R" + m.format(sv->x);
  return fail(inst, ps, vs[0].holds, w, confirm_false_verdicts(t, vs) && confirm_pseudo_simple(cs, ps));
}

CaseResult eval_fgps(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const bool ps = is_pseudo_simple(cs);
  const bool shape = fgps_classification(m);
  return equivalence(
      inst, ps, shape,
      [&] {
        return m.name() + ": pseudo_simple=" + bool_str(ps) + ", listed shape=" + bool_str(shape) + "; " +
               algebra_witness(cs, ps);
      },
      [&] { return confirm_pseudo_simple(cs, ps); });
}

CaseResult eval_pseudo_zn(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const bool ps = is_pseudo_simple(cs);
  const bool shape = omega_at_most_two(m.order());
  return equivalence(
      inst, ps, shape, [&] { return m.name() + ": " + algebra_witness(cs, ps); },
      [&] { return confirm_pseudo_simple(cs, ps); });
}

CaseResult eval_nested(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  const auto v = check_nested(t);
  const bool uni = is_uniserial(cs);
  return equivalence(
      inst, uni, v.holds, [&] { return "uniserial=" + bool_str(uni) + "; " + verdict_text(t, v); },
      [&] { return v.holds || confirm_witness(t, v); });
}

CaseResult eval_isolated(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  const auto irr = irreducible_by_elements(cs);
  for (std::size_t c = 0; c < t.size(); ++c) {
    const bool isolated = t.basic_open(c).count() == 1;
    if (isolated != irr[c])
      return fail(inst, irr[c], isolated,
                  "[" + t.label(c) + "] isolated=" + bool_str(isolated) + " irreducible=" + bool_str(irr[c]),
                  irreducible_on_sharp_flags(cs)[c] == irr[c]);
  }
  return pass(inst, true, true);
}

CaseResult eval_tcom_counts(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  if (is_simple_module(m)) return out_of_hypothesis(inst, "simple module: empty space");
  const auto t = build_topology(m);
  const auto v = compactness_verdict(t);
  const auto minimal = v.count("minimal_cyclic").value_or(-1);
  const auto simple = v.count("simple_submodules").value_or(-2);
  if (minimal == simple && v.holds) return pass(inst, true, true);
  return fail(inst, minimal == simple, v.holds,
              "minimal_cyclic=" + std::to_string(minimal) + " simple_submodules=" + std::to_string(simple) +
                  "; " + verdict_text(t, v),
              static_cast<std::int64_t>(simple_submodules(m).size()) == simple);
}

CaseResult eval_tcom_symbolic(const Instance& inst, const HarnessOptions&) {
  if (!inst.symbolic) throw InvalidArgument(inst.descriptor + " is not a symbolic family");
  const auto& f = *inst.symbolic;
  const auto cv = compactness_verdict_symbolic(f);
  CaseResult r;
  r.instance = inst.descriptor;
  r.lhs = cv.simple_submodules >= 0;  // finitely many simple submodules
  r.rhs = cv.verdict.holds;
  bool refuter_ok = true;
  if (cv.refuter) {
    for (const auto& c : cv.cover) refuter_ok = refuter_ok && !divides_symbolic(f, *cv.refuter, c);
    r.witness = "refuter " + f.format(*cv.refuter) + " outside " + std::to_string(cv.cover.size()) + " opens";
    r.witness_confirmed = refuter_ok;
  }
  if (!refuter_ok) {
    r.outcome = Outcome::Fail;
    r.note = "refuter lies inside the cover";
  } else if (cv.flagged) {
    r.outcome = Outcome::Flagged;
    r.note = std::to_string(cv.simple_submodules) +
             " simple submodules (finitely many) yet not compact: the criterion needs a minimal cyclic "
             "submodule below every Rm";
  } else {
    r.outcome = Outcome::Pass;
  }
  return r;
}

CaseResult eval_finitely_cog(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const auto t = build_topology(m);
  const bool compact = compactness_verdict(t).holds;
  const bool fc = is_finitely_cogenerated(m);
  return implication(
      inst, compact, fc, [&] { return "compact but socle " + std::to_string(socle(m).size()) + " not essential"; },
      [&] { return !is_essential(m, socle(m)); });
}

// Enumerates every homomorphism M -> N of abelian groups.
CaseResult eval_homo(const Instance& inst, const HarnessOptions&) {
  const auto& a = need_module(inst);
  const auto& b = *inst.second;
  if (!(a.ring() == b.ring())) return out_of_hypothesis(inst, "different coefficient rings");
  std::vector<std::vector<ElementIndex>> choices(a.rank());
  double total = 1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (ElementIndex y = 0; y < b.order(); ++y)
      if (b.scale(a.moduli()[i], y) == 0) choices[i].push_back(y);
    total *= static_cast<double>(choices[i].size());
  }
  if (total > 1 << 20) return out_of_hypothesis(inst, "too many homomorphisms to enumerate");
  const bool ps_a = is_pseudo_simple(a), ps_b = is_pseudo_simple(b);
  std::vector<std::size_t> pick(a.rank(), 0);
  std::vector<ElementIndex> image(a.order());
  std::uint64_t homs = 0;
  for (;;) {
    ++homs;
    ElementSet hit(b.order());
    std::uint64_t kernel = 0;
    for (ElementIndex x = 0; x < a.order(); ++x) {
      const auto e = a.element_at(x);
      ElementIndex acc = 0;
      for (std::size_t i = 0; i < a.rank(); ++i) acc = b.add(acc, b.scale(e.coords[i], choices[i][pick[i]]));
      hit.set(acc);
      if (acc == 0) ++kernel;
    }
    const bool surjective = hit.count() == b.order();
    const bool injective = kernel == 1;
    std::string images;
    for (std::size_t i = 0; i < a.rank(); ++i) images += (i ? "," : "") + b.format(choices[i][pick[i]]);
    if (surjective && ps_a && !ps_b)
      return fail(inst, ps_a, ps_b, "surjection with e_i -> " + images + " onto a non pseudo simple target",
                  !is_pseudo_simple_by_definition(CyclicStructure(b)));
    if (injective && ps_b && !ps_a)
      return fail(inst, ps_b, ps_a, "injection with e_i -> " + images + " from a non pseudo simple source",
                  !is_pseudo_simple_by_definition(CyclicStructure(a)));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  auto r = pass(inst, true, true);
  r.note = std::to_string(homs) + " homomorphisms";
  return r;
}

std::vector<Submodule> proper_nonzero(const std::vector<Submodule>& all, std::uint64_t order) {
  std::vector<Submodule> out;
  for (const auto& s : all)
    if (s.size() != 1 && s.size() != order) out.push_back(s);
  return out;
}

std::string gens_text(const ModuleDescriptor& m, const Submodule& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators.size(); ++i) out += (i ? "," : "") + m.format(s.generators[i]);
  return out + ">";
}

CaseResult eval_stability(const Instance& inst, const HarnessOptions& opt, bool submodules, bool quotients,
                          bool summands) {
  const auto& m = need_module(inst);
  if (!is_pseudo_simple(m)) return out_of_hypothesis(inst, "not pseudo simple");
  const auto all = submodules_all(m, opt.submodule_bound);
  std::uint64_t checked = 0;
  for (const auto& s : all) {
    if (s.size() == 1) continue;
    if (submodules && s.size() != m.order()) {
      ++checked;
      const auto sub = submodule_as_module(m, s);
      if (!is_pseudo_simple(sub.module))
        return fail(inst, true, false, "submodule " + gens_text(m, s) + " = " + sub.module.name() + " not pseudo simple",
                    !is_pseudo_simple_by_definition(CyclicStructure(sub.module)));
    }
  }
  if (quotients)
    for (const auto& s : all) {
      if (s.size() == m.order()) continue;
      ++checked;
      const auto q = quotient_module(m, s);
      if (!is_pseudo_simple(q.module))
        return fail(inst, true, false, "quotient by " + gens_text(m, s) + " = " + q.module.name() + " not pseudo simple",
                    !is_pseudo_simple_by_definition(CyclicStructure(q.module)));
    }
  if (summands && m.rank() > 1) {
    const auto& mod = m.moduli();
    const std::uint32_t k = static_cast<std::uint32_t>(mod.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<std::uint64_t> part;
      for (std::uint32_t i = 0; i < k; ++i)
        if (mask >> i & 1) part.push_back(mod[i]);
      const auto summand = m.is_vector_space()
                               ? ModuleDescriptor::vector_space(m.ring().characteristic(), static_cast<unsigned>(part.size()))
                               : ModuleDescriptor::from_moduli(part);
      ++checked;
      if (!is_pseudo_simple(summand))
        return fail(inst, true, false, "summand " + summand.name() + " not pseudo simple",
                    !is_pseudo_simple_by_definition(CyclicStructure(summand)));
    }
  }
  auto r = pass(inst, true, true);
  r.note = std::to_string(checked) + " pieces checked";
  return r;
}

// M/N pseudo simple iff (N:m) is maximal for every m ∉ N with R(m+N) ≠ M/N.
CaseResult eval_quotient_colon(const Instance& inst, const HarnessOptions& opt) {
  const auto& m = need_module(inst);
  const auto all = submodules_all(m, opt.submodule_bound);
  for (const auto& n : all) {
    if (n.size() == m.order()) continue;
    const auto q = quotient_module(m, n);
    const bool lhs = is_pseudo_simple(q.module);
    const auto index = m.order() / n.size();
    bool rhs = true;
    std::string bad;
    for (ElementIndex x = 0; x < m.order() && rhs; ++x) {
      if (n.contains(x)) continue;
      // (N:x) = dZ with d the least positive multiple landing in N.
      std::uint64_t d = 1;
      ElementIndex y = x;
      while (!n.contains(y)) {
        y = m.add(y, x);
        ++d;
      }
      if (d == index) continue;  // x + N generates M/N
      if (!is_prime(d)) {
        rhs = false;
        bad = m.format(x);
      }
    }
    if (lhs != rhs)
      return fail(inst, lhs, rhs,
                  "N = " + gens_text(m, n) + ": quotient pseudo simple=" + bool_str(lhs) +
                      ", colon criterion=" + bool_str(rhs) + (bad.empty() ? "" : " at " + bad),
                  is_pseudo_simple_by_definition(CyclicStructure(q.module)) == lhs);
  }
  return pass(inst, true, true);
}

bool ann_maximal_and_equal(const ModuleDescriptor& a, const ModuleDescriptor& b) {
  const auto ia = module_annihilator(a), ib = module_annihilator(b);
  return ia == ib && is_maximal_ideal(a.ring(), ia);
}

CaseResult eval_tdir(const Instance& inst, const HarnessOptions&) {
  const auto& a = need_module(inst);
  const auto& b = *inst.second;
  if (a.is_cyclic_group() && b.is_cyclic_group()) return out_of_hypothesis(inst, "both summands cyclic");
  const auto sum = direct_sum(a, b).module;
  const CyclicStructure cs(sum);
  const bool lhs = is_pseudo_simple(cs);
  const bool rhs = is_pseudo_simple(a) && is_pseudo_simple(b) && ann_maximal_and_equal(a, b);
  return equivalence(
      inst, lhs, rhs,
      [&] {
        return sum.name() + ": pseudo simple=" + bool_str(lhs) + ", ann(M1)=" + module_annihilator(a).to_string() +
               ", ann(M2)=" + module_annihilator(b).to_string() + "; " + algebra_witness(cs, lhs);
      },
      [&] { return confirm_pseudo_simple(cs, lhs); });
}

CaseResult eval_tdir2(const Instance& inst, const HarnessOptions&) {
  const auto& a = need_module(inst);
  const auto& b = *inst.second;
  if (!(a.is_cyclic_group() && b.is_cyclic_group())) return out_of_hypothesis(inst, "a summand is not cyclic");
  const auto ds = direct_sum(a, b);
  const CyclicStructure cs(ds.module);
  const bool lhs = is_pseudo_simple(cs);
  bool rhs = false;
  std::string path = "neither";
  if (is_simple_module(a) && is_simple_module(b)) {
    const auto ia = module_annihilator(a), ib = module_annihilator(b);
    if (ia == ib && is_maximal_ideal(a.ring(), ia)) {
      rhs = true;
      path = "(ii) equal maximal annihilators";
    } else if (is_maximal_ideal(a.ring(), ia) && is_maximal_ideal(b.ring(), ib)) {
      bool all_generate = true;
      for (ElementIndex x = 1; x < a.order(); ++x)
        for (ElementIndex y = 1; y < b.order(); ++y) {
          const auto e = ds.module.add(ds.module.index_of(ds.inject_first(a.element_at(x))),
                                       ds.module.index_of(ds.inject_second(b.element_at(y))));
          all_generate = all_generate && ds.module.additive_order(e) == ds.module.order();
        }
      rhs = all_generate;
      path = all_generate ? "(i) distinct maximal annihilators, all (m1,m2) generate" : "neither";
    }
  }
  auto r = equivalence(
      inst, lhs, rhs, [&] { return ds.module.name() + ": pseudo simple=" + bool_str(lhs) + ", criterion " + path; },
      [&] { return confirm_pseudo_simple(cs, lhs); });
  if (r.outcome == Outcome::Pass) r.note = path;
  return r;
}

CaseResult eval_ttri(const Instance& inst, const HarnessOptions&) {
  if (!inst.ring) throw InvalidArgument(inst.descriptor + " is not a ring");
  const TrivialExtensionRing ring(*inst.ring, std::uint64_t{1} << 22);
  const bool lhs = is_pseudo_simple_ring(ring);
  const bool rhs = local_criterion(*inst.ring);
  return equivalence(
      inst, lhs, rhs,
      [&] { return inst.ring->name() + ": pseudo simple ring=" + bool_str(lhs) + ", local criterion=" + bool_str(rhs); },
      [&] { return ring.size() > 400 || is_pseudo_simple_ring_by_definition(ring) == lhs; });
}

CaseResult eval_hausdorff_star(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  const auto v = check_separation(t, Axiom::T2);
  const auto sv = star_violation(cs);
  return equivalence(
      inst, !sv.has_value(), v.holds, [&] { return verdict_text(t, v); },
      [&] { return v.holds || confirm_witness(t, v); });
}

CaseResult eval_t5_uniserial(const Instance& inst, const HarnessOptions& opt) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  if (t.size() > opt.class_bound)
    return out_of_hypothesis(inst, std::to_string(t.size()) + " classes above the brute-force bound");
  const auto v = check_separation(t, Axiom::T5, opt.class_bound);
  if (v.holds != t5_by_point_pairs(t))
    return fail(inst, v.holds, !v.holds, "subset enumeration and point pairs disagree on T5", false);
  const bool uni = is_uniserial(cs);
  return implication(
      inst, uni, v.holds, [&] { return verdict_text(t, v); }, [&] { return confirm_witness(t, v); });
}

CaseResult eval_completely_normal(const Instance& inst, const HarnessOptions& opt) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  if (t.size() > opt.class_bound)
    return out_of_hypothesis(inst, std::to_string(t.size()) + " classes above the brute-force bound");
  const bool ps = is_pseudo_simple(cs);
  const auto t1 = check_separation(t, Axiom::T1, opt.class_bound);
  const auto t4 = check_separation(t, Axiom::T4, opt.class_bound);
  const auto t5 = check_separation(t, Axiom::T5, opt.class_bound);
  const bool normal = t1.holds && t4.holds;
  const bool completely = t1.holds && t5.holds;
  if (ps == normal && ps == completely) return pass(inst, ps, completely);
  return fail(inst, ps, completely,
              "pseudo_simple=" + bool_str(ps) + "; " + verdict_text(t, t1) + "; " + verdict_text(t, t4) + "; " +
                  verdict_text(t, t5),
              confirm_false_verdicts(t, {t1, t4, t5}));
}

CaseResult eval_bezout_star(const Instance& inst, const HarnessOptions& opt) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  if (!is_bezout(cs) || star_violation(cs)) return out_of_hypothesis(inst, "not Bezout with the (*)-condition");
  for (auto c : cs.sharp_classes()) {
    const auto& cls = cs.classes()[c];
    const Submodule s{cls.cyclic, {m.element_at(cls.representative)}};
    if (!is_maximal_submodule(m, s))
      return fail(inst, true, false, "R" + m.format(cls.representative) + " is not a maximal submodule",
                  !is_maximal_submodule(m, s));
  }
  if (!is_simple_module(m))
    for (const auto& n : proper_nonzero(submodules_all(m, opt.submodule_bound), m.order())) {
      const auto q = quotient_module(m, n);
      if (!is_simple_module(q.module))
        return fail(inst, true, false, "M/" + gens_text(m, n) + " = " + q.module.name() + " is not simple",
                    !is_prime(q.module.order()));
    }
  return pass(inst, true, true);
}

CaseResult eval_gcd_intersection(const Instance& inst, const HarnessOptions&) {
  const auto& m = need_module(inst);
  const CyclicStructure cs(m);
  const auto t = build_topology(cs);
  const auto& sharp = cs.sharp_classes();
  std::uint64_t gcd_checks = 0, lcm_checks = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto ri = cs.classes()[sharp[i]].representative;
      const auto rj = cs.classes()[sharp[j]].representative;
      // m | n iff U_m ⊆ U_n, with divisibility read off the elements.
      const bool div = divides(m, m.element_at(ri), m.element_at(rj));
      if (div != t.basic_open(i).is_subset_of(t.basic_open(j)))
        return fail(inst, div, !div, "divisibility vs basic-open inclusion at [" + t.label(i) + "],[" + t.label(j) + "]",
                    divides(m, m.element_at(ri), m.element_at(rj)) == div);
      if (j <= i) continue;
      if (auto g = gcd_elements(cs, ri, rj); g && *g != 0 && cs.element_order(*g) != m.order()) {
        ++gcd_checks;
        const auto gc = std::find(sharp.begin(), sharp.end(), static_cast<std::size_t>(cs.class_of(*g))) - sharp.begin();
        if ((t.basic_open(i) & t.basic_open(j)) != t.basic_open(static_cast<std::size_t>(gc)))
          return fail(inst, true, false,
                      "U_" + t.label(i) + " ∩ U_" + t.label(j) + " differs from U_gcd = U_" + m.format(*g), true);
      }
      if (auto l = lcm_elements(cs, ri, rj); l && *l != 0 && cs.element_order(*l) != m.order()) {
        const auto lc = static_cast<std::size_t>(
            std::find(sharp.begin(), sharp.end(), static_cast<std::size_t>(cs.class_of(*l))) - sharp.begin());
        for (std::size_t k = 0; k < t.size(); ++k) {
          if (!t.basic_open(i).is_subset_of(t.basic_open(k)) || !t.basic_open(j).is_subset_of(t.basic_open(k)))
            continue;
          ++lcm_checks;
          if (!t.basic_open(lc).is_subset_of(t.basic_open(k)))
            return fail(inst, true, false,
                        "U_lcm(" + t.label(i) + "," + t.label(j) + ") not inside U_" + t.label(k), true);
        }
      }
    }
  auto r = pass(inst, true, true);
  r.note = std::to_string(gcd_checks) + " gcd and " + std::to_string(lcm_checks) + " lcm checks";
  return r;
}

CaseResult eval_t0_alexandrov(const Instance& inst, const HarnessOptions& opt) {
  const auto& m = need_module(inst);
  const auto t = build_topology(m);
  const auto t0 = check_separation(t, Axiom::T0);
  const auto alex = verify_alexandrov_and_minimal_nbhd(t, opt.class_bound);
  for (std::size_t c = 0; c < t.size(); ++c) (void)closure_of_class(t, c);
  (void)isolated_points(t);
  if (t0.holds && alex.holds) return pass(inst, true, true);
  return fail(inst, t0.holds, alex.holds, verdict_text(t, t0) + "; " + verdict_text(t, alex),
              confirm_false_verdicts(t, {t0, alex}));
}

// Symbolic sweeps: the instance carries the family, the bound sets the window.
CaseResult eval_dense_z(const Instance& inst, const HarnessOptions&) {
  const auto& f = *inst.symbolic;
  const auto r = density_report_integers(f.bound());
  const bool ok = r.primes_dense && r.dense_open_contains_primes && r.dense_open_is_dense && r.baire;
  if (ok) {
    auto c = pass(inst, true, true);
    c.note = std::to_string(r.primes) + " primes among " + std::to_string(r.classes) + " classes";
    return c;
  }
  return fail(inst, r.primes_dense, r.dense_open_contains_primes, "density report failed", true);
}

CaseResult eval_noetherian_z(const Instance& inst, const HarnessOptions&) {
  const auto length = static_cast<unsigned>(inst.symbolic->bound());
  const auto chain = noetherian_chain_integers(3, length);
  if (chain.strictly_ascending && chain.generators.size() == length + 1) return pass(inst, true, true);
  return fail(inst, true, false, "chain of length " + std::to_string(length) + " not strictly ascending", true);
}

CaseResult eval_t5_z(const Instance& inst, const HarnessOptions&) {
  const auto window = inst.symbolic->bound();
  std::uint64_t triples = 0;
  for (std::uint64_t m1 = 2; m1 <= 12; ++m1)
    for (std::uint64_t m2 = m1 + 1; m2 <= 12; ++m2) {
      if (m2 % m1 == 0) continue;
      for (std::uint64_t x = 2; x <= 12; ++x) {
        if (x * m2 > window) continue;
        const auto r = t5_refutation_witness_integers(m1, m2, x, window);
        ++triples;
        if (!r.valid())
          return fail(inst, true, false,
                      "(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(x) + ") invalid",
                      true);
      }
    }
  auto c = pass(inst, true, true);
  c.note = std::to_string(triples) + " witnesses";
  return c;
}

CaseResult eval_hausdorff_q(const Instance& inst, const HarnessOptions&) {
  const auto h = hausdorff_failure_rationals(*inst.symbolic);
  if (h.every_pair_meets) {
    auto c = pass(inst, true, true);
    c.note = std::to_string(h.pairs_checked) + " pairs; common classes fit in bound " + std::to_string(h.enlargement);
    return c;
  }
  return fail(inst, true, false, "a pair of classes has disjoint neighbourhoods", true);
}

using Evaluator = std::function<CaseResult(const Instance&, const HarnessOptions&)>;

struct Entry {
  TheoremInfo info;
  Evaluator eval;
  std::vector<FamilyShape> shapes;  // families the theorem accepts
};

const std::vector<FamilyShape> kModules{FamilyShape::CyclicGroups, FamilyShape::AbelianGroups,
                                        FamilyShape::VectorSpaces};
const std::vector<FamilyShape> kPairs{FamilyShape::AbelianPairs};
const std::vector<FamilyShape> kRings{FamilyShape::TrivialExtensions};
const std::vector<FamilyShape> kSymbolic{FamilyShape::Symbolic};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    auto stab = [](bool s, bool q, bool d) {
      return [s, q, d](const Instance& i, const HarnessOptions& o) { return eval_stability(i, o, s, q, d); };
    };
    std::vector<Entry> e{
        {{"main-equivalence",
          "T1, Hausdorff, discrete, pseudo simple and the (*)-condition are equivalent",
          Shape::Equivalence, FamilySpec::abelian(200)},
         eval_main, kModules},
        {{"fgPS", "a finite abelian group is pseudo simple iff it is Z_p + Z_q (p != q) or (Z_p)^k",
          Shape::Equivalence, FamilySpec::abelian(200)},
         eval_fgps, kModules},
        {{"pseudoZn", "Z_n is pseudo simple iff n is p, p^2 or pq", Shape::Equivalence, FamilySpec::cyclic(1000)},
         eval_pseudo_zn, {FamilyShape::CyclicGroups}},
        {{"nested-uniserial", "the divisor topology is nested iff the module is uniserial", Shape::Equivalence,
          FamilySpec::abelian(200)},
         eval_nested, kModules},
        {{"isolated-irreducible", "[m] is isolated iff m is irreducible on the nonzero nongenerators",
          Shape::Equivalence, FamilySpec::abelian(200)},
         eval_isolated, kModules},
        {{"tcom-counts", "minimal cyclic submodules from nongenerators and simple submodules agree in number",
          Shape::Equivalence, FamilySpec::abelian(512)},
         eval_tcom_counts, kModules},
        {{"tcom", "compact iff finitely many simple submodules, on Z, Q and E(p)", Shape::Equivalence,
          FamilySpec::symbolic(100)},
         eval_tcom_symbolic, kSymbolic},
        {{"tfinitelycog", "a compact divisor topology forces a finitely cogenerated module", Shape::Implication,
          FamilySpec::abelian(200)},
         eval_finitely_cog, kModules},
        {{"homo-stability",
          "surjective images and injective preimages of pseudo simple modules are pseudo simple",
          Shape::Implication, FamilySpec::pairs(64)},
         eval_homo, kPairs},
        {{"cfac", "submodules, quotients and direct summands of a pseudo simple module are pseudo simple",
          Shape::Implication, FamilySpec::abelian(64)},
         stab(true, true, true), kModules},
        {{"quotient-colon", "M/N is pseudo simple iff (N:m) is maximal whenever m + N is a nonzero nongenerator",
          Shape::Equivalence, FamilySpec::abelian(64)},
         eval_quotient_colon, kModules},
        {{"tdir",
          "with a noncyclic summand, M1 + M2 is pseudo simple iff both are and ann(M1) = ann(M2) is maximal",
          Shape::Equivalence, FamilySpec::pairs(200)},
         eval_tdir, kPairs},
        {{"tdir2",
          "for cyclic M1, M2 the sum is pseudo simple iff both are simple and the annihilators are equal, or "
          "distinct with every (m1,m2) generating",
          Shape::Equivalence, FamilySpec::pairs(200)},
         eval_tdir2, kPairs},
        {{"ttri", "Z_n ⋉ Z_m is pseudo simple iff Z_n is local with maximal ideal ann(Z_m) = ann(r) for r nonzero nonunit",
          Shape::Equivalence, FamilySpec::trivial_extensions(2000)},
         eval_ttri, kRings},
        {{"hausdorff-star", "Hausdorff iff the (*)-condition", Shape::Equivalence, FamilySpec::abelian(200)},
         eval_hausdorff_star, kModules},
        {{"t5-uniserial", "uniserial modules give T5 spaces", Shape::Implication, FamilySpec::abelian(200)},
         eval_t5_uniserial, kModules},
        {{"completely-normal", "normal iff completely normal iff pseudo simple (T1 with T4, T1 with T5)",
          Shape::Equivalence, FamilySpec::abelian(200)},
         eval_completely_normal, kModules},
        {{"bezout-star", "Bezout with the (*)-condition makes every Rm (m a nonzero nongenerator) maximal",
          Shape::Implication, FamilySpec::abelian(200)},
         eval_bezout_star, kModules},
        {{"gcd-intersection",
          "m | n iff U_m in U_n; U_m meet U_n = U_gcd; U_lcm lies in every U_n containing both",
          Shape::Implication, FamilySpec::abelian(64)},
         eval_gcd_intersection, kModules},
        {{"t0-alexandrov", "T0, Alexandrov with minimal neighbourhoods U_m, point closures are multiples",
          Shape::Implication, FamilySpec::abelian(200)},
         eval_t0_alexandrov, kModules},
        {{"dense-Z", "prime classes are dense in the windowed integers and every dense open holds them",
          Shape::Report, FamilySpec::symbolic(10000)},
         eval_dense_z, kSymbolic},
        {{"noetherian-Z", "U_{2^k m} is a strictly ascending chain of basic opens in Z", Shape::Report,
          FamilySpec::symbolic(20)},
         eval_noetherian_z, kSymbolic},
        {{"t5-Z", "([x m1],[x m2],[x]) refutes T5 for incomparable m1, m2 in Z", Shape::Report,
          FamilySpec::symbolic(200)},
         eval_t5_z, kSymbolic},
        {{"hausdorff-Q", "any two classes of Q share a common divisor class", Shape::Report,
          FamilySpec::symbolic(10)},
         eval_hausdorff_q, kSymbolic},
        {{"cfac-submodule", "submodules of a pseudo simple module are pseudo simple", Shape::Implication,
          FamilySpec::abelian(100)},
         stab(true, false, false), kModules},
        {{"cfac-quotient", "quotients of a pseudo simple module are pseudo simple", Shape::Implication,
          FamilySpec::abelian(100)},
         stab(false, true, false), kModules},
    };
    return e;
  }();
  return table;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw UnknownTheorem("unknown theorem id '" + id + "'");
}

// Symbolic instances depend on the theorem: the bound is a window, a chain
// length or a rational bound.
std::vector<Instance> symbolic_instances(const std::string& id, std::uint64_t bound) {
  auto make = [](SymbolicFamily f) {
    ModuleSpec s;
    s.kind = SpecKind::Symbolic;
    s.family = f;
    return Instance{render_module_spec(s), std::nullopt, std::nullopt, std::nullopt, f};
  };
  std::vector<Instance> out;
  if (id == "tcom") {
    out.push_back(make(SymbolicFamily::integers(std::max<std::uint64_t>(bound, 2))));
    out.push_back(make(SymbolicFamily::rationals(std::max<std::uint64_t>(bound / 10, 1))));
    out.push_back(make(SymbolicFamily::prufer(2, std::max<std::uint64_t>(bound / 12, 1))));
    out.push_back(make(SymbolicFamily::prufer(3, std::max<std::uint64_t>(bound / 20, 1))));
  } else if (id == "dense-Z") {
    for (std::uint64_t n = 10; n < bound; n *= 10) out.push_back(make(SymbolicFamily::integers(n)));
    out.push_back(make(SymbolicFamily::integers(std::max<std::uint64_t>(bound, 2))));
  } else if (id == "noetherian-Z") {
    for (std::uint64_t l = 1; l <= bound; ++l) out.push_back(make(SymbolicFamily::integers(std::max<std::uint64_t>(l, 2))));
  } else if (id == "t5-Z") {
    out.push_back(make(SymbolicFamily::integers(std::max<std::uint64_t>(bound, 2))));
  } else if (id == "hausdorff-Q") {
    for (std::uint64_t b = 1; b <= bound; ++b) out.push_back(make(SymbolicFamily::rationals(b)));
  } else {
    throw InvalidArgument("theorem " + id + " has no symbolic instances");
  }
  return out;
}

}  // namespace

std::string FamilySpec::describe() const {
  const auto b = std::to_string(bound);
  switch (shape) {
    case FamilyShape::CyclicGroups: return "Z_n, 2 <= n <= " + b;
    case FamilyShape::AbelianGroups: return "finite abelian groups of order <= " + b;
    case FamilyShape::VectorSpaces: return "F_p^d with p^d <= " + b;
    case FamilyShape::TrivialExtensions: return "Z_n x| Z_m with m | n, m >= 2, n*m <= " + b;
    case FamilyShape::AbelianPairs: return "pairs of abelian groups with |M1|*|M2| <= " + b;
    case FamilyShape::Symbolic: return "symbolic families, bound " + b;
  }
  return "?";
}

std::vector<ModuleDescriptor> abelian_groups_of_order(std::uint64_t n) {
  if (n < 2) return {};
  const auto fs = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  for (const auto& f : fs) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(f.exponent, f.exponent, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<ModuleDescriptor> out;
  std::vector<std::size_t> pick(fs.size(), 0);
  for (;;) {
    std::vector<PrimePower> factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (auto e : per_prime[i][pick[i]]) factors.push_back({fs[i].prime, e});
    std::sort(factors.begin(), factors.end());
    out.push_back(ModuleDescriptor::finite_abelian(factors));
    std::size_t k = fs.size();
    while (k-- > 0) {
      if (++pick[k] < per_prime[k].size()) break;
      pick[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<ModuleDescriptor> enumerate_family(const FamilySpec& spec) {
  std::vector<ModuleDescriptor> out;
  switch (spec.shape) {
    case FamilyShape::CyclicGroups:
      for (std::uint64_t n = 2; n <= spec.bound; ++n) out.push_back(ModuleDescriptor::cyclic(n));
      return out;
    case FamilyShape::AbelianGroups:
      for (std::uint64_t n = 2; n <= spec.bound; ++n)
        for (auto& m : abelian_groups_of_order(n)) out.push_back(std::move(m));
      return out;
    case FamilyShape::VectorSpaces:
      for (std::uint64_t p = 2; p <= spec.bound; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned d = 1; q <= spec.bound; ++d, q *= p) out.push_back(ModuleDescriptor::vector_space(p, d));
      }
      return out;
    default:
      throw InvalidArgument("not a module family: " + spec.describe());
  }
}

std::vector<Instance> enumerate_instances(const FamilySpec& spec) {
  std::vector<Instance> out;
  switch (spec.shape) {
    case FamilyShape::CyclicGroups:
    case FamilyShape::AbelianGroups:
    case FamilyShape::VectorSpaces:
      for (auto& m : enumerate_family(spec)) out.push_back(Instance{spec_for(m), m, std::nullopt, std::nullopt, std::nullopt});
      return out;
    case FamilyShape::TrivialExtensions:
      for (std::uint64_t m = 2; m * m <= spec.bound; ++m)
        for (std::uint64_t n = m; n * m <= spec.bound; n += m) {
          auto r = RingDescriptor::trivial_extension(n, m);
          out.push_back(Instance{spec_for(r), std::nullopt, std::nullopt, r, std::nullopt});
        }
      std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
        const auto ka = std::make_pair(a.ring->base_modulus(), a.ring->module_modulus());
        const auto kb = std::make_pair(b.ring->base_modulus(), b.ring->module_modulus());
        return ka < kb;
      });
      return out;
    case FamilyShape::AbelianPairs: {
      const auto groups = enumerate_family(FamilySpec::abelian(spec.bound / 2));
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i; j < groups.size(); ++j)
          if (groups[i].order() * groups[j].order() <= spec.bound)
            out.push_back(Instance{spec_for(groups[i]) + " + " + spec_for(groups[j]), groups[i], groups[j],
                                   std::nullopt, std::nullopt});
      return out;
    }
    case FamilyShape::Symbolic:
      throw InvalidArgument("symbolic instances depend on the theorem");
  }
  return out;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Flagged: return "FLAGGED";
    case Outcome::OutOfHypothesis: return "OUT_OF_HYPOTHESIS";
  }
  return "?";
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& theorem_info(const std::string& id) { return entry(id).info; }

SweepReport verify(const std::string& theorem_id, const FamilySpec& family, const HarnessOptions& options) {
  const auto& e = entry(theorem_id);
  if (std::find(e.shapes.begin(), e.shapes.end(), family.shape) == e.shapes.end())
    throw InvalidArgument(theorem_id + " does not apply to " + family.describe());

  const auto start = std::chrono::steady_clock::now();
  const auto instances = family.shape == FamilyShape::Symbolic ? symbolic_instances(theorem_id, family.bound)
                                                               : enumerate_instances(family);
  std::vector<CaseResult> results(instances.size());

  auto run_one = [&](std::size_t i) {
    try {
      results[i] = e.eval(instances[i], options);
    } catch (const BoundExceeded& ex) {
      results[i] = out_of_hypothesis(instances[i], ex.what());
    } catch (const std::exception& ex) {
      results[i] = fail(instances[i], false, false, std::string("exception: ") + ex.what(), false);
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, instances.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  SweepReport r;
  r.theorem_id = theorem_id;
  r.statement = e.info.statement;
  r.family = family.describe();
  r.instances = instances.size();
  for (auto& c : results) {
    switch (c.outcome) {
      case Outcome::Pass: ++r.passed; break;
      case Outcome::Fail:
        ++r.failed;
        r.failures.push_back(c);
        break;
      case Outcome::Flagged:
        ++r.flagged;
        r.flagged_cases.push_back(c);
        break;
      case Outcome::OutOfHypothesis: ++r.out_of_hypothesis; break;
    }
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SweepReport verify(const std::string& theorem_id, const HarnessOptions& options) {
  return verify(theorem_id, theorem_info(theorem_id).default_family, options);
}

std::string stability_name(StabilityKind k) {
  switch (k) {
    case StabilityKind::Submodule: return "submodule";
    case StabilityKind::Quotient: return "quotient";
    case StabilityKind::DirectSumNoncyclic: return "direct_sum_noncyclic";
    case StabilityKind::DirectSumCyclic: return "direct_sum_cyclic";
  }
  return "?";
}

std::optional<StabilityKind> parse_stability(const std::string& s) {
  for (auto k : {StabilityKind::Submodule, StabilityKind::Quotient, StabilityKind::DirectSumNoncyclic,
                 StabilityKind::DirectSumCyclic})
    if (stability_name(k) == s) return k;
  return std::nullopt;
}

SweepReport verify_stability(StabilityKind kind, const FamilySpec& family, const HarnessOptions& options) {
  if (family.shape != FamilyShape::AbelianPairs && family.shape != FamilyShape::Symbolic &&
      family.shape != FamilyShape::TrivialExtensions)
    for (const auto& m : enumerate_family(family))
      if (m.order() > options.submodule_bound)
        throw BoundExceeded(m.name() + " is above the submodule enumeration bound");
  switch (kind) {
    case StabilityKind::Submodule: return verify("cfac-submodule", family, options);
    case StabilityKind::Quotient: return verify("cfac-quotient", family, options);
    case StabilityKind::DirectSumNoncyclic: return verify("tdir", family, options);
    case StabilityKind::DirectSumCyclic: return verify("tdir2", family, options);
  }
  throw InvalidArgument("unknown stability kind");
}

std::string reports_to_json(const std::vector<SweepReport>& reports) {
  using nlohmann::json;
  auto case_json = [](const CaseResult& c) {
    return json{{"instance", c.instance},     {"outcome", outcome_name(c.outcome)},
                {"lhs", c.lhs},               {"rhs", c.rhs},
                {"witness", c.witness},       {"witness_confirmed", c.witness_confirmed},
                {"note", c.note}};
  };
  json j;
  j["schema"] = "divtop.sweep";
  j["schema_version"] = kSweepSchemaVersion;
  j["registry"] = json::array();
  for (const auto& t : theorem_registry())
    j["registry"].push_back({{"id", t.id},
                             {"statement", t.statement},
                             {"shape", t.shape == Shape::Equivalence   ? "equivalence"
                                       : t.shape == Shape::Implication ? "implication"
                                                                       : "report"},
                             {"default_family", t.default_family.describe()}});
  j["reports"] = json::array();
  for (const auto& r : reports) {
    json rj{{"theorem", r.theorem_id},
            {"statement", r.statement},
            {"family", r.family},
            {"instances", r.instances},
            {"passed", r.passed},
            {"failed", r.failed},
            {"flagged", r.flagged},
            {"out_of_hypothesis", r.out_of_hypothesis},
            {"wall_seconds", r.wall_seconds}};
    rj["failures"] = json::array();
    for (const auto& c : r.failures) rj["failures"].push_back(case_json(c));
    rj["flagged_cases"] = json::array();
    for (const auto& c : r.flagged_cases) rj["flagged_cases"].push_back(case_json(c));
    j["reports"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

}  // namespace divtop
