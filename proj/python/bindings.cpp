#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divtop/algebra.hpp"
#include "divtop/errors.hpp"
#include "divtop/harness.hpp"
#include "divtop/spec_parser.hpp"
#include "divtop/symbolic.hpp"
#include "divtop/topology.hpp"
#include "divtop/trivial_extension.hpp"

namespace py = pybind11;
using namespace divtop;

namespace {

using Coords = std::vector<std::uint64_t>;

Element el(const ModuleDescriptor& m, const Coords& c) {
  Element e{c};
  if (!m.is_valid(e)) throw InvalidArgument("element " + std::to_string(c.size()) + "-tuple does not fit " + m.name());
  return e;
}

std::vector<Coords> coords(const std::vector<Element>& es) {
  std::vector<Coords> out;
  for (const auto& e : es) out.push_back(e.coords);
  return out;
}

std::vector<std::string> names(const TopologySnapshot& t, const ClassSet& s) {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != ClassSet::npos; i = s.find_next(i)) out.push_back(t.label(i));
  return out;
}

std::size_t index(const TopologySnapshot& t, const std::string& rep) {
  auto i = t.find(rep);
  if (!i) throw InvalidArgument("no class [" + rep + "] in " + t.source());
  return *i;
}

ClassSet as_set(const TopologySnapshot& t, const std::vector<std::string>& reps) {
  auto s = t.empty_set();
  for (const auto& r : reps) s.set(index(t, r));
  return s;
}

py::dict verdict_dict(const TopologySnapshot& t, const PropertyVerdict& v) {
  py::dict d;
  d["property"] = v.property;
  d["holds"] = v.holds;
  d["summary"] = v.summary(t);
  d["notes"] = v.notes;
  py::dict counts;
  for (const auto& [k, n] : v.counts) counts[py::str(k)] = n;
  d["counts"] = counts;
  if (v.witness) {
    py::dict w;
    auto side = [&](const std::vector<std::size_t>& xs) {
      std::vector<std::string> out;
      for (auto x : xs) out.push_back(t.label(x));
      return out;
    };
    w["kind"] = v.witness->kind;
    w["first"] = side(v.witness->first);
    w["second"] = side(v.witness->second);
    w["common"] = side(v.witness->common);
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

std::vector<PropertyVerdict> check(const TopologySnapshot& t, const std::string& prop, std::size_t class_bound) {
  if (auto a = parse_axiom(prop)) return {check_separation(t, *a, class_bound)};
  if (prop == "nested") return {check_nested(t)};
  if (prop == "connected") return {check_connectivity(t).connected};
  if (prop == "path-connected") return {check_connectivity(t).path_connected};
  if (prop == "ultraconnected") return {check_connectivity(t).ultraconnected};
  if (prop == "alexandrov") return {verify_alexandrov_and_minimal_nbhd(t, class_bound)};
  if (prop == "compact") return {compactness_verdict(t)};
  if (prop == "noetherian") return {noetherian_report(t)};
  if (prop == "baire") return {baire_and_density_report(t)};
  if (prop == "all") return all_verdicts(t, class_bound);
  throw InvalidArgument("unknown property '" + prop + "'");
}

TopologySnapshot topology_of(const std::string& spec) {
  const auto s = parse_module_spec(spec);
  switch (s.kind) {
    case SpecKind::Symbolic: return window_snapshot(*s.family);
    case SpecKind::TrivialExtension: return build_topology(TrivialExtensionRing(s.ring()));
    default: return build_topology(s.module());
  }
}

std::optional<FamilyShape> parse_shape(const std::string& s) {
  if (s == "cyclic") return FamilyShape::CyclicGroups;
  if (s == "abelian") return FamilyShape::AbelianGroups;
  if (s == "vector-spaces") return FamilyShape::VectorSpaces;
  if (s == "trivial-extensions") return FamilyShape::TrivialExtensions;
  if (s == "pairs") return FamilyShape::AbelianPairs;
  if (s == "symbolic") return FamilyShape::Symbolic;
  return std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Divisor topology on modules";

  auto base = py::register_exception<Error>(m, "DivtopError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());
  py::register_exception<UnknownTheorem>(m, "UnknownTheorem", base.ptr());
  py::register_exception<NotInSharp>(m, "NotInSharp", base.ptr());
  py::register_exception<InvalidPair>(m, "InvalidPair", base.ptr());
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", base.ptr());
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall", base.ptr());

  py::class_<TopologySnapshot>(m, "Topology")
      .def_property_readonly("source", &TopologySnapshot::source)
      .def_property_readonly("truncated", &TopologySnapshot::truncated)
      .def("__len__", &TopologySnapshot::size)
      .def_property_readonly("labels", [](const TopologySnapshot& t) { return names(t, t.full_set()); })
      .def("basic_open", [](const TopologySnapshot& t, const std::string& r) { return names(t, t.basic_open(index(t, r))); })
      .def("closure", [](const TopologySnapshot& t, const std::vector<std::string>& rs) {
        return names(t, closure(t, as_set(t, rs)));
      })
      .def("is_open", [](const TopologySnapshot& t, const std::vector<std::string>& rs) { return is_open(t, as_set(t, rs)); })
      .def("is_closed", [](const TopologySnapshot& t, const std::vector<std::string>& rs) {
        return is_closed(t, as_set(t, rs));
      })
      .def("isolated_points", [](const TopologySnapshot& t) { return names(t, isolated_points(t)); })
      .def("hasse_edges", [](const TopologySnapshot& t) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [a, b] : hasse_edges(t)) out.emplace_back(t.label(a), t.label(b));
        return out;
      })
      .def(
          "check",
          [](const TopologySnapshot& t, const std::string& prop, std::size_t class_bound) {
            py::list out;
            for (const auto& v : check(t, prop, class_bound)) out.append(verdict_dict(t, v));
            return out;
          },
          py::arg("prop"), py::arg("class_bound") = kDefaultClassBound)
      .def("to_dot", [](const TopologySnapshot& t) { return export_topology(t, ExportFormat::Dot); })
      .def(
          "to_json",
          [](const TopologySnapshot& t, bool verdicts) {
            return export_topology(t, ExportFormat::Json, verdicts ? all_verdicts(t) : std::vector<PropertyVerdict>{});
          },
          py::arg("verdicts") = false)
      .def("__repr__", [](const TopologySnapshot& t) {
        return "<Topology " + t.source() + ", " + std::to_string(t.size()) + " classes>";
      });

  py::class_<ModuleDescriptor>(m, "Module")
      .def_static("cyclic", &ModuleDescriptor::cyclic)
      .def_static("from_moduli", &ModuleDescriptor::from_moduli)
      .def_static("vector_space", &ModuleDescriptor::vector_space)
      .def_static("parse", [](const std::string& spec) { return parse_module_spec(spec).module(); })
      .def_property_readonly("name", &ModuleDescriptor::name)
      .def_property_readonly("order", &ModuleDescriptor::order)
      .def_property_readonly("moduli", &ModuleDescriptor::moduli)
      .def_property_readonly("spec", [](const ModuleDescriptor& md) { return spec_for(md); })
      .def("sharp_elements", [](const ModuleDescriptor& md) { return coords(sharp_elements(md)); })
      .def("is_sharp", [](const ModuleDescriptor& md, const Coords& a) { return is_sharp(md, el(md, a)); })
      .def("divides",
           [](const ModuleDescriptor& md, const Coords& a, const Coords& b) { return divides(md, el(md, a), el(md, b)); })
      .def("associates", [](const ModuleDescriptor& md, const Coords& a,
                            const Coords& b) { return are_associates(md, el(md, a), el(md, b)); })
      .def("gcd",
           [](const ModuleDescriptor& md, const Coords& a, const Coords& b) -> std::optional<Coords> {
             if (auto g = gcd_elements(md, el(md, a), el(md, b))) return g->coords;
             return std::nullopt;
           })
      .def("is_pseudo_simple", [](const ModuleDescriptor& md) { return is_pseudo_simple(md); })
      .def("satisfies_star", &satisfies_star)
      .def("is_uniserial", [](const ModuleDescriptor& md) { return is_uniserial(md); })
      .def("is_bezout", [](const ModuleDescriptor& md) { return is_bezout(md); })
      .def("is_multiplication", [](const ModuleDescriptor& md) { return is_multiplication(md); })
      .def("topology", [](const ModuleDescriptor& md) { return build_topology(md); })
      .def("__eq__", [](const ModuleDescriptor& a, const ModuleDescriptor& b) { return a == b; })
      .def("__repr__", [](const ModuleDescriptor& md) { return "<Module " + md.name() + ">"; });

  m.def("topology", &topology_of, py::arg("spec"), "Snapshot for a MODULE-SPEC string (finite, ring or windowed)");

  m.def(
      "symbolic_compactness",
      [](const std::string& spec) {
        const auto s = parse_module_spec(spec);
        if (s.kind != SpecKind::Symbolic) throw InvalidArgument("'" + spec + "' is not a symbolic family");
        const auto& f = *s.family;
        const auto c = compactness_verdict_symbolic(f);
        py::dict d;
        d["compact"] = c.verdict.holds;
        d["simple_submodules"] = c.simple_submodules;
        d["flagged"] = c.flagged;
        std::vector<std::string> cover;
        for (const auto& x : c.cover) cover.push_back(f.format(x));
        d["cover"] = cover;
        d["refuter"] = c.refuter ? py::object(py::str(f.format(*c.refuter))) : py::object(py::none());
        d["notes"] = c.verdict.notes;
        return d;
      },
      py::arg("spec"));

  m.def("theorems", [] {
    std::vector<std::string> ids;
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
    return ids;
  });

  m.def(
      "_verify_json",
      [](const std::string& id, std::optional<std::string> shape, std::uint64_t bound, unsigned threads,
         std::size_t class_bound) {
        HarnessOptions opts;
        opts.threads = threads;
        opts.class_bound = class_bound;
        FamilySpec family = theorem_info(id).default_family;
        if (shape) {
          auto s = parse_shape(*shape);
          if (!s) throw InvalidArgument("unknown family shape '" + *shape + "'");
          family.shape = *s;
        }
        if (bound) family.bound = bound;
        SweepReport r;
        {
          py::gil_scoped_release release;
          r = verify(id, family, opts);
        }
        return reports_to_json({r});
      },
      py::arg("theorem"), py::arg("shape") = py::none(), py::arg("bound") = 0, py::arg("threads") = 0,
      py::arg("class_bound") = kDefaultClassBound);

  m.attr("TOPOLOGY_SCHEMA_VERSION") = kTopologySchemaVersion;
  m.attr("SWEEP_SCHEMA_VERSION") = kSweepSchemaVersion;
}
