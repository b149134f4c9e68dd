// divtop: inspect modules, export their divisor topology, run property
// checks and theorem sweeps.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "divtop/algebra.hpp"
#include "divtop/errors.hpp"
#include "divtop/harness.hpp"
#include "divtop/spec_parser.hpp"
#include "divtop/symbolic.hpp"
#include "divtop/topology.hpp"
#include "divtop/trivial_extension.hpp"

namespace fs = std::filesystem;
using namespace divtop;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFlagged = 3;

// Sweep bounds; a zero bound keeps the theorem's own default family.
struct RunConfig {
  std::uint64_t max_order = 0;
  std::uint64_t max_n = 0;
  std::uint64_t triv_bound = 0;
  std::uint64_t pair_bound = 0;
  std::size_t class_bound = kDefaultClassBound;
  unsigned threads = 0;
  std::string output_dir;
  std::vector<std::string> export_formats{"json"};
  std::vector<std::string> theorems;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t positive(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
    throw UsageError("config key '" + key + "' must be a positive integer");
  return v.get<std::uint64_t>();
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a json object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "max_order") c.max_order = positive(v, key);
    else if (key == "max_n") c.max_n = positive(v, key);
    else if (key == "triv_bound") c.triv_bound = positive(v, key);
    else if (key == "pair_bound") c.pair_bound = positive(v, key);
    else if (key == "class_bound") c.class_bound = positive(v, key);
    else if (key == "threads") c.threads = static_cast<unsigned>(positive(v, key));
    else if (key == "output_dir" && v.is_string()) c.output_dir = v.get<std::string>();
    else if (key == "export_formats" && v.is_array()) c.export_formats = v.get<std::vector<std::string>>();
    else if (key == "theorems" && v.is_array()) c.theorems = v.get<std::vector<std::string>>();
    else throw UsageError("config key '" + key + "' is unknown or has the wrong type");
  }
  return c;
}

ExportFormat parse_format(const std::string& s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "json") return ExportFormat::Json;
  throw UsageError("unknown format '" + s + "' (dot, json)");
}

TopologySnapshot snapshot_for(const ModuleSpec& s) {
  switch (s.kind) {
    case SpecKind::Symbolic: return window_snapshot(*s.family);
    case SpecKind::TrivialExtension: return build_topology(TrivialExtensionRing(s.ring()));
    default: return build_topology(s.module());
  }
}

std::string class_list(const TopologySnapshot& t, const ClassSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) {
    out += (first ? "[" : ",[") + t.label(i) + "]";
    first = false;
  }
  return out + "}";
}

void inspect_module(const ModuleDescriptor& m, std::ostream& out) {
  const CyclicStructure cs(m);
  out << "module: " << m.name() << " (order " << m.order() << ", over " << m.ring().name() << ")\n";
  const auto sharp = sharp_elements(m);
  out << "sharp elements (" << sharp.size() << "):";
  for (const auto& e : sharp) out << ' ' << m.format(e);
  out << "\nclasses (" << cs.sharp_classes().size() << "):\n";
  for (auto c : cs.sharp_classes()) {
    const auto& cls = cs.classes()[c];
    const auto e = m.element_at(cls.representative);
    out << "  [" << m.format(e) << "]  |Rm| = " << cls.cyclic_order << "  ann = " << annihilator(m, e).to_string()
        << (is_maximal_ideal(m.ring(), annihilator(m, e)) ? " (maximal)" : "") << '\n';
  }
  const auto t = build_topology(cs);
  out << "basic opens:\n";
  for (std::size_t i = 0; i < t.size(); ++i)
    out << "  U_" << t.label(i) << " = " << class_list(t, t.basic_open(i)) << '\n';
  out << "ann(M) = " << module_annihilator(m).to_string() << '\n';
  out << "pseudo simple: " << (is_pseudo_simple(cs) ? "yes" : "no") << '\n';
  out << "uniserial: " << (is_uniserial(cs) ? "yes" : "no") << '\n';
  out << "(*)-condition: " << (star_violation(cs) ? "no" : "yes") << '\n';
}

void inspect_ring(const RingDescriptor& r, std::ostream& out) {
  const TrivialExtensionRing ring(r);
  std::uint32_t units = 0;
  for (std::uint32_t x = 0; x < ring.size(); ++x) units += ring.is_unit(x);
  out << "ring: " << r.name() << " (order " << ring.size() << ", " << units << " units)\n";
  const auto t = build_topology(ring);
  out << "classes (" << t.size() << "):\n";
  for (std::size_t i = 0; i < t.size(); ++i)
    out << "  [" << t.label(i) << "]  U = " << class_list(t, t.basic_open(i)) << '\n';
  out << "pseudo simple ring: " << (is_pseudo_simple_ring(ring) ? "yes" : "no") << '\n';
  out << "local criterion: " << (local_criterion(r) ? "yes" : "no") << '\n';
}

void inspect_symbolic(const SymbolicFamily& f, std::ostream& out) {
  const auto classes = f.window_classes();
  out << "family: " << f.name() << " (" << classes.size() << " classes in window)\n";
  out << "first classes:";
  for (std::size_t i = 0; i < classes.size() && i < 20; ++i) out << ' ' << f.format(classes[i]);
  out << (classes.size() > 20 ? " ...\n" : "\n");
  const auto c = compactness_verdict_symbolic(f);
  out << "compact: " << (c.verdict.holds ? "yes" : "no");
  if (c.refuter) out << " (refuter " << f.format(*c.refuter) << " escapes " << c.cover.size() << " opens)";
  out << "\nsimple submodules: " << (c.simple_submodules < 0 ? "infinitely many" : std::to_string(c.simple_submodules))
      << '\n';
  if (c.flagged) out << "note: verdict disagrees with the simple-submodule criterion\n";
}

void print_verdict(const TopologySnapshot& t, const PropertyVerdict& v, std::ostream& out) {
  out << v.summary(t) << '\n';
  for (const auto& n : v.notes) out << "  note: " << n << '\n';
}

int run_check(const ModuleSpec& s, std::string property, std::size_t class_bound, std::ostream& out) {
  std::transform(property.begin(), property.end(), property.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.kind == SpecKind::Symbolic && property == "compact") {
    const auto c = compactness_verdict_symbolic(*s.family);
    out << "compact: " << (c.verdict.holds ? "true" : "false");
    if (c.refuter) out << "; witness " << s.family->format(*c.refuter);
    out << '\n';
    return kExitPass;
  }
  const auto t = snapshot_for(s);
  if (property == "normal" || property == "completely-normal") {
    const auto t1 = check_separation(t, Axiom::T1, class_bound);
    const auto tx = check_separation(t, property == "normal" ? Axiom::T4 : Axiom::T5, class_bound);
    out << property << ": " << (t1.holds && tx.holds ? "true" : "false") << '\n';
    print_verdict(t, t1, out);
    print_verdict(t, tx, out);
    return kExitPass;
  }
  if (auto a = parse_axiom(property)) {
    print_verdict(t, check_separation(t, *a, class_bound), out);
    return kExitPass;
  }
  if (property == "nested") {
    print_verdict(t, check_nested(t), out);
  } else if (property == "connected" || property == "path-connected" || property == "ultraconnected") {
    const auto c = check_connectivity(t);
    print_verdict(t, property == "connected" ? c.connected : property == "ultraconnected" ? c.ultraconnected : c.path_connected,
                  out);
  } else if (property == "alexandrov") {
    print_verdict(t, verify_alexandrov_and_minimal_nbhd(t, class_bound), out);
  } else if (property == "compact") {
    print_verdict(t, compactness_verdict(t), out);
  } else if (property == "noetherian") {
    print_verdict(t, noetherian_report(t), out);
  } else if (property == "baire" || property == "dense") {
    print_verdict(t, baire_and_density_report(t), out);
  } else if (property == "all") {
    for (const auto& v : all_verdicts(t, class_bound)) print_verdict(t, v, out);
  } else {
    throw UsageError("unknown property '" + property + "'");
  }
  return kExitPass;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

FamilySpec family_for(const TheoremInfo& info, const RunConfig& c) {
  auto f = info.default_family;
  switch (f.shape) {
    case FamilyShape::CyclicGroups:
      if (c.max_n) f.bound = c.max_n;
      break;
    case FamilyShape::AbelianGroups:
    case FamilyShape::VectorSpaces:
      if (c.max_order) f.bound = c.max_order;
      break;
    case FamilyShape::TrivialExtensions:
      if (c.triv_bound) f.bound = c.triv_bound;
      break;
    case FamilyShape::AbelianPairs:
      if (c.pair_bound) f.bound = c.pair_bound;
      break;
    case FamilyShape::Symbolic: break;
  }
  return f;
}

int run_verify(RunConfig c, const std::string& out_path, std::ostream& out) {
  if (const char* env = std::getenv("DIVTOP_MAX_ORDER")) {
    try {
      const auto v = std::stoull(env);
      if (v == 0) throw std::invalid_argument("zero");
      c.max_order = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("DIVTOP_MAX_ORDER must be a positive integer, got '") + env + "'");
    }
  }
  if (c.theorems.empty())
    for (const auto& t : theorem_registry()) c.theorems.push_back(t.id);

  HarnessOptions opts;
  opts.class_bound = c.class_bound;
  opts.threads = c.threads;
  std::vector<SweepReport> reports;
  for (const auto& id : c.theorems) {
    const auto& info = theorem_info(id);
    reports.push_back(verify(id, family_for(info, c), opts));
    const auto& r = reports.back();
    out << r.theorem_id << ": " << r.instances << " instances, " << r.passed << " pass, " << r.failed << " fail, "
        << r.flagged << " flagged, " << r.out_of_hypothesis << " out of hypothesis (" << r.family << ", "
        << std::fixed << std::setprecision(2) << r.wall_seconds << " s)\n";
    for (const auto& f : r.failures)
      out << "  FAIL " << f.instance << ": " << f.witness << (f.witness_confirmed ? " [confirmed]" : "") << '\n';
    for (const auto& f : r.flagged_cases) out << "  FLAGGED " << f.instance << ": " << f.witness << "; " << f.note << '\n';
  }

  fs::path target = out_path;
  if (target.empty() && !c.output_dir.empty()) target = fs::path(c.output_dir) / "sweep.json";
  if (!target.empty()) {
    write_file(target, reports_to_json(reports));
    out << "report written to " << target.string() << '\n';
  }

  bool failed = false, flagged = false;
  for (const auto& r : reports) {
    failed = failed || r.failed > 0;
    flagged = flagged || r.flagged > 0;
  }
  return failed ? kExitFailures : flagged ? kExitFlagged : kExitPass;
}

std::string file_stem(const std::string& spec) {
  std::string s;
  for (char ch : spec) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor topology of modules: inspect, export, check and verify"};
  app.require_subcommand(1);

  std::string spec_text;
  auto* inspect = app.add_subcommand("inspect", "print sharp elements, classes, annihilators");
  inspect->add_option("spec", spec_text, "module spec, e.g. Zn:12, ab:2^2x3, vs:p=3,d=2")->required();

  std::string format = "dot", out_file;
  bool with_verdicts = false;
  std::size_t class_bound = kDefaultClassBound;
  auto* topology = app.add_subcommand("topology", "write the divisor topology as dot or json");
  topology->add_option("spec", spec_text)->required();
  topology->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  topology->add_option("-o,--out", out_file, "output file (default stdout)");
  topology->add_flag("--verdicts", with_verdicts, "attach every property verdict");
  topology->add_option("--class-bound", class_bound);

  std::string property;
  auto* check = app.add_subcommand("check", "evaluate one property and print verdict and witness");
  check->add_option("spec", spec_text)->required();
  check->add_option("-p,--property", property,
                    "T0..T5, discrete, hausdorff, regular, normal, completely-normal, nested, connected, "
                    "path-connected, ultraconnected, alexandrov, compact, noetherian, baire, all")
      ->required();
  check->add_option("--class-bound", class_bound);

  std::string config_path, theorems;
  RunConfig cli_config;
  auto* verify_cmd = app.add_subcommand("verify", "run theorem sweeps");
  verify_cmd->add_option("--config", config_path, "json file with RunConfig keys");
  verify_cmd->add_option("--theorems", theorems, "comma separated theorem ids (default all)");
  verify_cmd->add_option("--max-n", cli_config.max_n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-order", cli_config.max_order)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--triv-bound", cli_config.triv_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--pair-bound", cli_config.pair_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--class-bound", cli_config.class_bound)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", cli_config.threads);
  verify_cmd->add_option("-o,--out", out_file, "report path");
  bool list = false;
  verify_cmd->add_flag("--list", list, "print the theorem registry and exit");

  std::vector<std::string> specs;
  std::string out_dir = ".", formats = "dot,json";
  auto* export_cmd = app.add_subcommand("export", "write topology files for several modules");
  export_cmd->add_option("specs", specs)->required();
  export_cmd->add_option("--out-dir", out_dir);
  export_cmd->add_option("--formats", formats, "comma separated: dot, json");
  export_cmd->add_option("--class-bound", class_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*inspect) {
      const auto s = parse_module_spec(spec_text);
      if (s.kind == SpecKind::Symbolic) inspect_symbolic(*s.family, std::cout);
      else if (s.kind == SpecKind::TrivialExtension) inspect_ring(s.ring(), std::cout);
      else inspect_module(s.module(), std::cout);
      return kExitPass;
    }
    if (*topology) {
      const auto s = parse_module_spec(spec_text);
      const auto t = snapshot_for(s);
      const auto text = export_topology(t, parse_format(format),
                                        with_verdicts ? all_verdicts(t, class_bound) : std::vector<PropertyVerdict>{});
      if (out_file.empty()) std::cout << text;
      else write_file(out_file, text);
      return kExitPass;
    }
    if (*check) return run_check(parse_module_spec(spec_text), property, class_bound, std::cout);
    if (*verify_cmd) {
      if (list) {
        for (const auto& t : theorem_registry())
          std::cout << t.id << ": " << t.statement << " [" << t.default_family.describe() << "]\n";
        return kExitPass;
      }
      RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
      if (cli_config.max_n) c.max_n = cli_config.max_n;
      if (cli_config.max_order) c.max_order = cli_config.max_order;
      if (cli_config.triv_bound) c.triv_bound = cli_config.triv_bound;
      if (cli_config.pair_bound) c.pair_bound = cli_config.pair_bound;
      if (cli_config.class_bound != kDefaultClassBound) c.class_bound = cli_config.class_bound;
      if (cli_config.threads) c.threads = cli_config.threads;
      if (!theorems.empty()) {
        c.theorems.clear();
        std::stringstream ss(theorems);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) c.theorems.push_back(id);
      }
      for (const auto& id : c.theorems) (void)theorem_info(id);
      return run_verify(c, out_file, std::cout);
    }
    if (*export_cmd) {
      std::vector<ExportFormat> fmts;
      std::stringstream ss(formats);
      for (std::string f; std::getline(ss, f, ',');) fmts.push_back(parse_format(f));
      for (const auto& spec : specs) {
        const auto t = snapshot_for(parse_module_spec(spec));
        const auto verdicts = all_verdicts(t, class_bound);
        for (auto f : fmts) {
          const fs::path p = fs::path(out_dir) / (file_stem(spec) + (f == ExportFormat::Dot ? ".dot" : ".json"));
          write_file(p, export_topology(t, f, verdicts));
          std::cout << p.string() << '\n';
        }
      }
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "divtop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownTheorem& e) {
    std::cerr << "divtop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "divtop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "divtop: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
