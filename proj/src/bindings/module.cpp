#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvecliff/analysis.hpp"
#include "curvecliff/cli.hpp"
#include "curvecliff/generators.hpp"
#include "curvecliff/io.hpp"

namespace py = pybind11;
using namespace curvecliff;

namespace {

Subcurve subcurve_of(const CurveGraph& g, const std::vector<int>& ids) {
    return make_subcurve(g, ids);
}

Decomposition decomposition_of(const CurveGraph& g, const std::vector<int>& side_a) {
    return make_decomposition(g, make_subcurve(g, side_a));
}

SetPartition partition_of(const CurveGraph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<Subcurve> subs;
    subs.reserve(parts.size());
    for (const auto& p : parts) subs.push_back(make_subcurve(g, p));
    return make_set_partition(g, std::move(subs));
}

std::vector<std::vector<int>> parts_of(const SetPartition& p) {
    std::vector<std::vector<int>> out;
    out.reserve(p.parts.size());
    for (const Subcurve& s : p.parts) out.push_back(s.members);
    return out;
}

const char* tribool_str(TriBool t) {
    switch (t) {
        case TriBool::No: return "no";
        case TriBool::Yes: return "yes";
        default: return "unknown";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact combinatorial analyzer for dual graphs of reduced nodal curves";
    m.attr("__version__") = kToolVersion;

    py::register_exception<ParseError>(m, "CurveParseError", PyExc_ValueError);
    py::register_exception<CurveError>(m, "CurveInputError", PyExc_ValueError);
    py::register_exception<ContradictionError>(m, "ContradictionError", PyExc_RuntimeError);
    py::register_exception<GuardError>(m, "GuardExceededError", PyExc_RuntimeError);

    py::class_<ComponentRecord>(m, "ComponentRecord")
        .def(py::init([](int id, Int genus, const std::vector<std::string>& flags) {
                 ComponentRecord c{id, genus, 0};
                 for (const std::string& f : flags) {
                     if (f == "Smooth") c.set_flag(ComponentFlag::Smooth);
                     else if (f == "BrillNoetherGeneral") c.set_flag(ComponentFlag::BrillNoetherGeneral);
                     else if (f == "HonestlyHyperelliptic") c.set_flag(ComponentFlag::HonestlyHyperelliptic);
                     else throw CurveError("unknown flag: " + f);
                 }
                 return c;
             }),
             py::arg("id"), py::arg("genus"), py::arg("flags") = std::vector<std::string>{})
        .def_readonly("id", &ComponentRecord::id)
        .def_readonly("genus", &ComponentRecord::genus);

    py::class_<EdgeRecord>(m, "EdgeRecord")
        .def(py::init([](int a, int b, Int mult) { return EdgeRecord{a, b, mult}; }),
             py::arg("a"), py::arg("b"), py::arg("mult") = 1)
        .def_readonly("a", &EdgeRecord::a)
        .def_readonly("b", &EdgeRecord::b)
        .def_readonly("mult", &EdgeRecord::mult);

    py::class_<CurveGraph>(m, "CurveGraph")
        .def(py::init<std::vector<ComponentRecord>, std::vector<EdgeRecord>>(),
             py::arg("components"), py::arg("edges"))
        .def_property_readonly("num_components", &CurveGraph::num_components)
        .def_property_readonly("total_nodes", &CurveGraph::total_edge_multiplicity)
        .def_property_readonly("pa", &CurveGraph::pa)
        .def_property_readonly("connected", &CurveGraph::connected)
        .def_property_readonly("genera",
                               [](const CurveGraph& g) {
                                   std::vector<Int> out;
                                   for (const ComponentRecord& c : g.components()) out.push_back(c.genus);
                                   return out;
                               })
        .def("to_json", [](const CurveGraph& g) { return serialize_curve(g); })
        .def("__repr__", [](const CurveGraph& g) {
            std::ostringstream s;
            s << "CurveGraph(V=" << g.num_components() << ", nodes=" << g.total_edge_multiplicity()
              << ", pa=" << g.pa() << ")";
            return s.str();
        });

    m.def("parse_curve", &parse_curve, py::arg("text"));
    m.def("serialize_curve", &serialize_curve, py::arg("graph"));

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("valid", &ValidationReport::valid)
        .def_readonly("connected", &ValidationReport::connected)
        .def_readonly("pa", &ValidationReport::pa)
        .def_readonly("errors", &ValidationReport::errors)
        .def_readonly("warnings", &ValidationReport::warnings);

    m.def("validate_curve", &validate_curve, py::arg("graph"));
    m.def(
        "arithmetic_genus",
        [](const CurveGraph& g, const std::vector<int>& ids) {
            return arithmetic_genus(g, subcurve_of(g, ids));
        },
        py::arg("graph"), py::arg("members"));
    m.def(
        "intersection_product",
        [](const CurveGraph& g, const std::vector<int>& side_a) {
            return intersection_product(g, decomposition_of(g, side_a));
        },
        py::arg("graph"), py::arg("side_a"));
    m.def(
        "canonical_degree_on",
        [](const CurveGraph& g, const std::vector<int>& ids) {
            return canonical_degree_on(g, subcurve_of(g, ids));
        },
        py::arg("graph"), py::arg("members"));

    py::class_<Decomposition>(m, "Decomposition")
        .def_property_readonly("side_a", [](const Decomposition& d) { return d.part_a.members; })
        .def_property_readonly("side_b", [](const Decomposition& d) { return d.part_b.members; })
        .def("__repr__", [](const Decomposition& d) { return render(d); });

    py::class_<ConnectivityReport>(m, "ConnectivityReport")
        .def_readonly("infinite", &ConnectivityReport::infinite)
        .def_property_readonly("m",
                               [](const ConnectivityReport& r) -> py::object {
                                   if (r.infinite) return py::none();
                                   return py::int_(r.m);
                               })
        .def_readonly("witness", &ConnectivityReport::witness)
        .def_property_readonly("all_min_decompositions",
                               [](const ConnectivityReport& r) -> py::object {
                                   if (!r.all_min_decompositions) return py::none();
                                   return py::cast(*r.all_min_decompositions);
                               })
        .def("at_least", &ConnectivityReport::at_least, py::arg("k"));

    m.def(
        "connectivity_number",
        [](const CurveGraph& g, int guard) {
            return connectivity_number(g, ConnectivityOptions{guard});
        },
        py::arg("graph"), py::arg("enumeration_guard") = 22);
    m.def(
        "min_cut_bruteforce",
        [](const CurveGraph& g, int guard) {
            return min_cut_bruteforce(g, ConnectivityOptions{guard});
        },
        py::arg("graph"), py::arg("enumeration_guard") = 22);
    m.def(
        "is_m_connected",
        [](const CurveGraph& g, Int k) { return is_m_connected(g, k); },
        py::arg("graph"), py::arg("m"));

    py::class_<CanonicalGeometry>(m, "CanonicalGeometry")
        .def_readonly("base_point_free", &CanonicalGeometry::base_point_free)
        .def_property_readonly("very_ample",
                               [](const CanonicalGeometry& g) { return tribool_str(g.very_ample); })
        .def_readonly("base_point_witnesses", &CanonicalGeometry::base_point_witnesses)
        .def_readonly("separation_failures", &CanonicalGeometry::separation_failures)
        .def_readonly("witness_lists_complete", &CanonicalGeometry::witness_lists_complete);

    m.def(
        "canonical_geometry",
        [](const CurveGraph& g) { return canonical_geometry(g); }, py::arg("graph"));
    m.def(
        "honestly_hyperelliptic_status",
        [](const CurveGraph& g) { return std::string(tribool_str(honestly_hyperelliptic_status(g))); },
        py::arg("graph"));

    py::class_<SheafProfile>(m, "SheafProfile")
        .def_property_readonly("kind", [](const SheafProfile& p) { return std::string(to_string(p.kind)); })
        .def_readonly("invertible", &SheafProfile::invertible)
        .def_readonly("per_component_degree", &SheafProfile::per_component_degree)
        .def_readonly("degree", &SheafProfile::degree)
        .def_readonly("h0", &SheafProfile::h0)
        .def_readonly("h1", &SheafProfile::h1)
        .def_readonly("cliff", &SheafProfile::cliff)
        .def_property_readonly("contributes", &SheafProfile::contributes)
        .def("to_json", [](const SheafProfile& p) { return serialize_profile(p); });

    m.def("parse_profile", &parse_profile, py::arg("text"));

    py::class_<ProfileViolation>(m, "ProfileViolation")
        .def_readonly("constraint", &ProfileViolation::constraint)
        .def_readonly("detail", &ProfileViolation::detail);

    py::class_<ProfileValidation>(m, "ProfileValidation")
        .def_readonly("valid", &ProfileValidation::valid)
        .def_readonly("contributes", &ProfileValidation::contributes)
        .def_readonly("violations", &ProfileValidation::violations);

    m.def("validate_sheaf_profile", &validate_sheaf_profile, py::arg("graph"), py::arg("profile"));
    m.def("lower_bound", &lower_bound, py::arg("graph"));
    m.def("theorem_upper_bound", &theorem_upper_bound, py::arg("graph"));
    m.def(
        "split_cluster_profile",
        [](const CurveGraph& g, const std::vector<std::vector<int>>& parts) {
            return split_cluster_profile(g, partition_of(g, parts));
        },
        py::arg("graph"), py::arg("parts"));
    m.def(
        "best_split_bound",
        [](const CurveGraph& g, int guard, bool heuristic) -> py::object {
            std::optional<SplitBound> sb = best_split_bound(g, SearchOptions{guard, heuristic});
            if (!sb) return py::none();
            return py::make_tuple(sb->cliff, parts_of(sb->partition), sb->certified);
        },
        py::arg("graph"), py::arg("partition_guard") = 12, py::arg("allow_heuristic") = false);
    m.def(
        "witness_invertible_profile",
        [](const CurveGraph& g, const std::vector<int>& side_a) {
            return witness_invertible_profile(g, decomposition_of(g, side_a));
        },
        py::arg("graph"), py::arg("side_a"));

    py::class_<BoundCertificate>(m, "BoundCertificate")
        .def_property_readonly("kind",
                               [](const BoundCertificate& c) {
                                   return c.kind == BoundKind::Lower   ? "lower"
                                          : c.kind == BoundKind::Upper ? "upper"
                                                                       : "exact";
                               })
        .def_readonly("value", &BoundCertificate::value)
        .def_readonly("source", &BoundCertificate::source)
        .def_readonly("witness", &BoundCertificate::witness)
        .def_readonly("certified", &BoundCertificate::certified)
        .def_readonly("assumptions", &BoundCertificate::assumptions);

    py::class_<CliffordBounds>(m, "CliffordBounds")
        .def_readonly("lower", &CliffordBounds::lower)
        .def_readonly("upper", &CliffordBounds::upper)
        .def_readonly("exact", &CliffordBounds::exact)
        .def_readonly("certificates", &CliffordBounds::certificates);

    m.def(
        "clifford_bounds",
        [](const CurveGraph& g, int partition_guard, bool heuristic) {
            CliffordOptions opts;
            opts.search.partition_guard = partition_guard;
            opts.search.allow_heuristic = heuristic;
            return clifford_bounds(g, opts);
        },
        py::arg("graph"), py::arg("partition_guard") = 12, py::arg("allow_heuristic") = false);
    m.def("two_component_green_family", &two_component_green_family, py::arg("graph"));

    py::class_<BettiShape>(m, "BettiShape")
        .def_property_readonly("genus", &BettiShape::genus)
        .def_property_readonly("hypotheses_met", &BettiShape::hypotheses_met)
        .def_property_readonly("warnings", &BettiShape::warnings)
        .def("value",
             [](const BettiShape& s, Int p, int q) { return std::string(to_string(s.value(p, q))); },
             py::arg("p"), py::arg("q"))
        .def("provenance",
             [](const BettiShape& s, Int p, int q) {
                 return std::string(to_string(s.provenance(p, q)));
             },
             py::arg("p"), py::arg("q"))
        .def("render", &BettiShape::render);

    py::class_<ProofTrace>(m, "ProofTrace")
        .def_readonly("g1", &ProofTrace::g1)
        .def_readonly("g2", &ProofTrace::g2)
        .def_readonly("m", &ProofTrace::m)
        .def_readonly("pa", &ProofTrace::pa)
        .def_readonly("cliff", &ProofTrace::cliff)
        .def_readonly("threshold_comp1_piece", &ProofTrace::threshold_comp1_piece)
        .def_readonly("threshold_comp0_piece", &ProofTrace::threshold_comp0_piece)
        .def_readonly("vanishing_from", &ProofTrace::vanishing_from)
        .def_readonly("pass_", &ProofTrace::pass);

    py::class_<Green2Result>(m, "Green2Result")
        .def_readonly("graph", &Green2Result::graph)
        .def_readonly("shape", &Green2Result::shape)
        .def_readonly("trace", &Green2Result::trace);

    m.def("green2_certificate", &green2_certificate, py::arg("g1"), py::arg("g2"), py::arg("m"));

    m.def(
        "gen_chain",
        [](const std::vector<Int>& genera) {
            GeneratedCurve gc = gen_chain(genera);
            return py::make_tuple(gc.graph, gc.warnings);
        },
        py::arg("genera"));
    m.def("gen_threecon", &gen_threecon, py::arg("genera"));
    m.def("gen_two_component", &gen_two_component, py::arg("g1"), py::arg("g2"), py::arg("m"),
          py::arg("general") = false);
    m.def("gen_random", &gen_random, py::arg("seed"), py::arg("n_components"),
          py::arg("edge_budget"), py::arg("genus_min") = 1, py::arg("genus_max") = 3);

    py::class_<AnalysisReport>(m, "AnalysisReport")
        .def_readonly("input_hash", &AnalysisReport::input_hash)
        .def_readonly("num_components", &AnalysisReport::num_components)
        .def_readonly("total_nodes", &AnalysisReport::total_nodes)
        .def_readonly("pa", &AnalysisReport::pa)
        .def_readonly("genera", &AnalysisReport::genera)
        .def_readonly("validation", &AnalysisReport::validation)
        .def_readonly("connectivity", &AnalysisReport::connectivity)
        .def_readonly("geometry", &AnalysisReport::geometry)
        .def_readonly("clifford", &AnalysisReport::clifford)
        .def_readonly("betti", &AnalysisReport::betti)
        .def_readonly("warnings", &AnalysisReport::warnings)
        .def("render_text", [](const AnalysisReport& r) { return render_text(r); })
        .def("to_json", [](const AnalysisReport& r) { return render_structured(r); });

    m.def(
        "analyze",
        [](const CurveGraph& g, bool betti, int max_enum, bool heuristic) {
            AnalyzeOptions opts;
            opts.betti = betti;
            if (max_enum > 0) {
                opts.connectivity.enumeration_guard = max_enum;
                opts.search.partition_guard = max_enum;
            }
            opts.search.allow_heuristic = heuristic;
            return analyze(g, opts);
        },
        py::arg("graph"), py::arg("betti") = false, py::arg("max_enum") = 0,
        py::arg("allow_heuristic") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
