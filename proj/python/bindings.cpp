#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asdimlab/a1.hpp"
#include "asdimlab/calculator.hpp"
#include "asdimlab/cli.hpp"
#include "asdimlab/cover.hpp"
#include "asdimlab/geodesics.hpp"
#include "asdimlab/probes.hpp"
#include "asdimlab/spaces.hpp"

namespace py = pybind11;
using namespace asdim;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.num(), r.den());
}

py::object distance_or_none(Distance d) {
  if (!d.reachable()) return py::none();
  return py::int_(d.value());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite checks of asymptotic-dimension constructions on graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ScopeTooSmall>(m, "ScopeTooSmall", PyExc_RuntimeError);
  py::register_exception<RationalOverflow>(m, "RationalOverflow", PyExc_OverflowError);

  py::class_<MetricGraph>(m, "MetricGraph")
      .def_static(
          "from_edges",
          [](std::string name, std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
            return MetricGraph::from_edges(std::move(name), n, edges);
          },
          py::arg("name"), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("name", &MetricGraph::name)
      .def_property_readonly("vertex_count", &MetricGraph::vertex_count)
      .def_property_readonly("edge_count", &MetricGraph::edge_count)
      .def("neighbors", [](const MetricGraph& g, VertexId v) {
        const auto n = g.neighbors(v);
        return std::vector<VertexId>(n.begin(), n.end());
      })
      .def("adjacent", &MetricGraph::adjacent)
      .def("is_tree", &MetricGraph::is_tree)
      .def("is_connected", &MetricGraph::is_connected)
      .def("__repr__", [](const MetricGraph& g) {
        return "<MetricGraph " + g.name() + " n=" + std::to_string(g.vertex_count()) + ">";
      });

  m.def("distance", [](const MetricGraph& g, VertexId u, VertexId v) { return distance_or_none(distance(g, u, v)); },
        "Shortest-path distance, None when unreachable.");
  m.def("ball", &ball);
  m.def("sphere", &sphere);
  m.def(
      "all_geodesics",
      [](const MetricGraph& g, VertexId u, VertexId v, std::size_t cap) {
        auto l = all_geodesics(g, u, v, cap);
        return py::make_tuple(l.paths, l.truncated);
      },
      py::arg("g"), py::arg("u"), py::arg("v"), py::arg("cap") = kDefaultGeodesicCap,
      "Returns (paths, truncated).");
  m.def("canonical_geodesic", &canonical_geodesic);
  m.def("set_diameter", [](const MetricGraph& g, const std::vector<VertexId>& s) {
    return distance_or_none(set_diameter(g, s));
  });
  m.def("load_graph", [](const std::string& text) { return load_graph(text); });
  m.def("store_graph", &store_graph);

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def_readonly("graph", &LabeledGraph::graph)
      .def_readonly("labels", &LabeledGraph::labels)
      .def_readonly("basepoint", &LabeledGraph::basepoint)
      .def("find", &LabeledGraph::find);
  m.def("broom_tree", &broom_tree);
  m.def("regular_tree", &regular_tree);
  m.def("farey_truncation", &farey_truncation);
  m.def("grid", &grid);
  m.def("parse_space", &parse_space);

  py::enum_<FamilyKind>(m, "FamilyKind").value("ALL", FamilyKind::All).value("CANONICAL", FamilyKind::Canonical);
  py::class_<GeodesicFamily>(m, "GeodesicFamily")
      .def(py::init<const MetricGraph&, FamilyKind, std::size_t>(), py::arg("graph"),
           py::arg("kind") = FamilyKind::All, py::arg("cap") = kDefaultGeodesicCap, py::keep_alive<1, 2>())
      .def_property_readonly("kind", &GeodesicFamily::kind)
      .def("g_set", &GeodesicFamily::g_set)
      .def("g_set_r", [](const GeodesicFamily& f, VertexId a, VertexId b, std::uint32_t r) { return g_set_r(f, a, b, r); })
      .def("on_geodesic", &GeodesicFamily::on_geodesic);

  py::class_<HyperbolicityReport>(m, "HyperbolicityReport")
      .def_readonly("delta", &HyperbolicityReport::delta)
      .def_readonly("witness", &HyperbolicityReport::witness)
      .def_readonly("triangles_checked", &HyperbolicityReport::triangles_checked)
      .def_readonly("triangles_total", &HyperbolicityReport::triangles_total)
      .def_readonly("exhaustive", &HyperbolicityReport::exhaustive)
      .def_readonly("method", &HyperbolicityReport::method);
  m.def("thin_delta", &thin_delta, py::arg("family"), py::arg("budget") = kDefaultTriangleBudget,
        py::arg("seed") = 0);

  py::class_<PropertyBViolation>(m, "PropertyBViolation")
      .def_readonly("a", &PropertyBViolation::a)
      .def_readonly("b", &PropertyBViolation::b)
      .def_readonly("r", &PropertyBViolation::r)
      .def_readonly("c", &PropertyBViolation::c)
      .def_readonly("geodesic", &PropertyBViolation::geodesic);
  py::class_<PropertyBReport>(m, "PropertyBReport")
      .def_readonly("ell", &PropertyBReport::ell)
      .def_readonly("k", &PropertyBReport::k)
      .def_readonly("r_max", &PropertyBReport::r_max)
      .def_readonly("observed_D", &PropertyBReport::observed_D)
      .def_readonly("D_witness", &PropertyBReport::D_witness)
      .def_readonly("intersection_violations", &PropertyBReport::intersection_violations)
      .def_readonly("violation_count", &PropertyBReport::violation_count)
      .def_readonly("samples_checked", &PropertyBReport::samples_checked)
      .def_readonly("pairs_checked", &PropertyBReport::pairs_checked)
      .def_readonly("pairs_total", &PropertyBReport::pairs_total)
      .def_readonly("exhaustive", &PropertyBReport::exhaustive)
      .def_readonly("strategy", &PropertyBReport::strategy)
      .def_property_readonly("vacuous", &PropertyBReport::vacuous)
      .def_property_readonly("clause_holds", &PropertyBReport::clause_holds);
  m.def(
      "check_property_b",
      [](const GeodesicFamily& fam, std::uint32_t ell, std::uint32_t k, std::uint32_t r_max,
         std::uint64_t pair_budget, std::uint64_t sample_pairs, std::uint64_t seed) {
        PropertyBOptions o;
        o.ell = ell;
        o.k = k;
        o.r_max = r_max;
        o.pair_budget = pair_budget;
        o.sample_pairs = sample_pairs;
        o.seed = seed;
        return check_property_b(fam, o);
      },
      py::arg("family"), py::arg("ell"), py::arg("k"), py::arg("r_max"), py::arg("pair_budget") = kDefaultPairBudget,
      py::arg("sample_pairs") = 20000, py::arg("seed") = 0);

  py::class_<CoverSet>(m, "CoverSet")
      .def_readonly("n", &CoverSet::n)
      .def_readonly("anchor", &CoverSet::anchor)
      .def_readonly("members", &CoverSet::members);
  py::class_<Cover>(m, "Cover")
      .def_readonly("sets", &Cover::sets)
      .def_readonly("annuli", &Cover::annuli)
      .def_readonly("spheres", &Cover::spheres)
      .def_readonly("max_depth", &Cover::max_depth)
      .def_readonly("complete_annuli", &Cover::complete_annuli)
      .def_property_readonly("width", [](const Cover& c) { return c.params.width(); })
      .def("__str__", &store_cover);
  m.def(
      "build_cover",
      [](const GeodesicFamily& fam, std::uint32_t r, std::uint32_t ell, std::uint32_t delta, VertexId basepoint) {
        return build_cover(fam, {r, ell, delta, basepoint});
      },
      py::arg("family"), py::arg("r"), py::arg("ell"), py::arg("delta") = 0, py::arg("basepoint") = 0);
  py::class_<DiameterReport>(m, "DiameterReport")
      .def_readonly("max_diam", &DiameterReport::max_diam)
      .def_readonly("max_diam_all", &DiameterReport::max_diam_all)
      .def_readonly("bound", &DiameterReport::bound)
      .def_readonly("pass_", &DiameterReport::pass);
  m.def("verify_diameters", &verify_diameters);
  py::class_<MultiplicityReport>(m, "MultiplicityReport")
      .def_readonly("radius", &MultiplicityReport::radius)
      .def_readonly("max_multiplicity", &MultiplicityReport::max_multiplicity)
      .def_readonly("witness", &MultiplicityReport::witness)
      .def_readonly("max_multiplicity_all", &MultiplicityReport::max_multiplicity_all)
      .def_readonly("bound_2D", &MultiplicityReport::bound_2D)
      .def_readonly("pass_", &MultiplicityReport::pass);
  m.def("multiplicity", &multiplicity, py::arg("g"), py::arg("cover"), py::arg("radius"), py::arg("D"));
  m.def("asdim_upper_from_D", &asdim_upper_from_D);

  py::class_<FatCover>(m, "FatCover")
      .def_readonly("order", &FatCover::order)
      .def_readonly("safe_core", &FatCover::safe_core)
      .def_readonly("base_diameter", &FatCover::base_diameter)
      .def_property_readonly("set_count", [](const FatCover& f) { return f.sets.size(); });
  m.def("build_fat_cover", &build_fat_cover, py::arg("family"), py::arg("r"), py::arg("delta"), py::arg("D"),
        py::arg("basepoint") = 0);
  m.def("select_anchors", &select_anchors);
  m.def("a1_map", [](const FatCover& fc, const std::vector<VertexId>& anchors, VertexId x) {
    py::dict out;
    for (const auto& [z, v] : a1_map(fc, anchors, x).entries) out[py::int_(z)] = to_fraction(v);
    return out;
  });
  m.def("audit_a1", [](const MetricGraph& g, const FatCover& fc, const std::vector<VertexId>& anchors) {
    const auto a = audit_a1(g, fc, anchors);
    py::dict d;
    d["safe_core_size"] = a.safe_core_size;
    d["adjacent_pairs"] = a.adjacent_pairs;
    d["lebesgue"] = a.lebesgue.pass;
    d["phi_sum_failures"] = a.phi_sum_failures;
    d["min_denominator"] = a.min_denominator;
    d["l1_failures"] = a.l1_failures;
    d["nonpositive_entries"] = a.nonpositive_entries;
    d["max_support"] = a.max_support;
    d["max_support_radius"] = a.max_support_radius;
    d["support_radius_bound"] = a.support_radius_bound;
    d["sup_variation"] = to_fraction(a.sup_variation);
    d["variation_bound"] = to_fraction(a.variation_bound);
    d["sup_dphi"] = to_fraction(a.sup_dphi);
    d["dphi_bound"] = to_fraction(a.dphi_bound);
    d["max_sum_ddist"] = a.max_sum_ddist;
    d["sum_ddist_bound"] = a.sum_ddist_bound;
    d["max_ddist"] = a.max_ddist;
    return d;
  });

  py::class_<DiscreteSubsetReport>(m, "DiscreteSubsetReport")
      .def_readonly("D", &DiscreteSubsetReport::D)
      .def_readonly("subset", &DiscreteSubsetReport::subset)
      .def_readonly("cardinality", &DiscreteSubsetReport::cardinality)
      .def_readonly("candidates", &DiscreteSubsetReport::candidates)
      .def_property_readonly("method", [](const DiscreteSubsetReport& r) { return to_string(r.method); });
  m.def("discrete_capacity", &discrete_capacity, py::arg("g"), py::arg("D"), py::arg("center"), py::arg("radius"),
        py::arg("exact_limit") = kDefaultExactLimit);
  m.def("is_discrete", &is_discrete);
  m.def("ray_points", &ray_points);
  m.def(
      "growth_probe",
      [](const std::function<LabeledGraph(std::uint64_t)>& gen, const std::vector<std::uint64_t>& params,
         std::uint32_t D, std::uint32_t radius, std::size_t exact_limit) {
        const auto rep = growth_probe(gen, params, D, radius, exact_limit);
        std::vector<std::size_t> cards;
        for (const auto& p : rep.probes) cards.push_back(p.cardinality);
        return py::make_tuple(cards, to_string(rep.verdict));
      },
      py::arg("generate"), py::arg("params"), py::arg("D"), py::arg("radius"),
      py::arg("exact_limit") = kDefaultExactLimit, "Returns (cardinalities, verdict).");

  py::class_<Bound>(m, "Bound")
      .def_readonly("lower", &Bound::lower)
      .def_readonly("upper", &Bound::upper)
      .def_property_readonly("exact", &Bound::exact)
      .def_property_readonly("provenance",
                             [](const Bound& b) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& p : b.provenance) out.emplace_back(p.step, p.citation);
                               return out;
                             })
      .def("__str__", &Bound::str);
  m.def("asdim_mod", [](std::uint32_t g, std::uint32_t p) { return asdim_mod({g, p}); });
  m.def("vcd_mod", [](std::uint32_t g, std::uint32_t p) { return vcd_mod({g, p}); });
  m.def("asdim_pi1", [](std::uint32_t g, std::uint32_t p) { return asdim_pi1({g, p}); });
  m.def("braid_bound", &braid_bound);
  m.def("artin_bound", [](const std::string& family, std::uint32_t n) {
    return artin_bound(parse_artin_family(family), n);
  });
  m.def("torelli", &torelli);
  m.def("farey_asdim", &farey_asdim);
  m.def("hyp_group_bound", &hyp_group_bound);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        const auto r = run_cli(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      "Runs one CLI subcommand; returns (exit_code, stdout, stderr).");
}
