#include "curvecliff/analysis.hpp"

#include <sstream>

#include "curvecliff/io.hpp"
#include "json.hpp"

namespace curvecliff {

namespace {

using ordered = nlohmann::ordered_json;

const char* to_string(TriBool t) {
    switch (t) {
        case TriBool::No: return "no";
        case TriBool::Yes: return "yes";
        default: return "unknown";
    }
}

std::string render_members(const Subcurve& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.members[i]);
    }
    return out + "}";
}

ordered decomposition_json(const Decomposition& d) {
    ordered j;
    j["a"] = d.part_a.members;
    j["b"] = d.part_b.members;
    return j;
}

ordered connectivity_json(const ConnectivityReport& c) {
    ordered j;
    if (c.infinite) {
        j["m"] = "infinite";
    } else {
        j["m"] = c.m;
    }
    if (c.witness) j["witness"] = decomposition_json(*c.witness);
    if (c.all_min_decompositions) {
        j["all_min_decompositions"] = ordered::array();
        for (const Decomposition& d : *c.all_min_decompositions) {
            j["all_min_decompositions"].push_back(decomposition_json(d));
        }
    }
    return j;
}

ordered certificate_json(const BoundCertificate& c) {
    ordered j;
    switch (c.kind) {
        case BoundKind::Lower: j["kind"] = "lower"; break;
        case BoundKind::Upper: j["kind"] = "upper"; break;
        case BoundKind::Exact: j["kind"] = "exact"; break;
    }
    j["value"] = c.value;
    j["source"] = c.source;
    j["witness"] = c.witness;
    j["certified"] = c.certified;
    j["assumptions"] = c.assumptions;
    return j;
}

ordered clifford_json(const CliffordBounds& b) {
    ordered j;
    j["lower"] = b.lower;
    if (b.upper) j["upper"] = *b.upper;
    else j["upper"] = nullptr;
    if (b.exact) j["exact"] = *b.exact;
    else j["exact"] = nullptr;
    j["certificates"] = ordered::array();
    for (const BoundCertificate& c : b.certificates) j["certificates"].push_back(certificate_json(c));
    return j;
}

ordered betti_json(const BettiShape& s) {
    ordered j;
    j["genus"] = s.genus();
    j["hypotheses_met"] = s.hypotheses_met();
    j["warnings"] = s.warnings();
    j["entries"] = ordered::array();
    for (int q = 0; q <= 3; ++q) {
        for (Int p = 0; p <= s.genus() - 2; ++p) {
            ordered e;
            e["p"] = p;
            e["q"] = q;
            e["value"] = to_string(s.value(p, q));
            if (s.value(p, q) != BettiValue::Unknown) e["provenance"] = to_string(s.provenance(p, q));
            j["entries"].push_back(std::move(e));
        }
    }
    return j;
}

ordered geometry_json(const CanonicalGeometry& g) {
    ordered j;
    j["base_point_free"] = g.base_point_free;
    j["very_ample"] = to_string(g.very_ample);
    j["base_point_witnesses"] = ordered::array();
    for (const Decomposition& d : g.base_point_witnesses) {
        j["base_point_witnesses"].push_back(decomposition_json(d));
    }
    j["separation_failures"] = ordered::array();
    for (const Decomposition& d : g.separation_failures) {
        j["separation_failures"].push_back(decomposition_json(d));
    }
    j["witness_lists_complete"] = g.witness_lists_complete;
    return j;
}

ordered validation_json(const ValidationReport& v) {
    ordered j;
    j["valid"] = v.valid;
    j["connected"] = v.connected;
    j["pa"] = v.pa;
    j["errors"] = v.errors;
    j["warnings"] = v.warnings;
    return j;
}

}  // namespace

std::string render(const Decomposition& d) {
    return "A=" + render_members(d.part_a) + " | B=" + render_members(d.part_b);
}

std::string render(const SetPartition& p) {
    std::string out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += "|";
        out += render_members(p.parts[i]);
    }
    return out;
}

AnalysisReport analyze(const CurveGraph& g, const AnalyzeOptions& opts) {
    AnalysisReport r;
    r.tool = kToolName;
    r.version = kToolVersion;
    r.validation = validate_curve(g);
    r.num_components = g.num_components();
    r.total_nodes = g.total_edge_multiplicity();
    r.pa = g.pa();
    for (const ComponentRecord& c : g.components()) r.genera.push_back(c.genus);
    if (!r.validation.valid) {
        throw CurveError("analyze: invalid curve: " + r.validation.errors.front());
    }
    r.input_hash = fnv1a_hex(serialize_curve(g));
    if (!g.connected()) {
        throw CurveError("analyze: requires a connected curve");
    }

    ConnectivityReport conn = connectivity_number(g, opts.connectivity);
    r.connectivity = conn;
    if (g.pa() >= 2) {
        r.geometry = canonical_geometry(g, opts.connectivity);
        CliffordOptions copts;
        copts.connectivity = opts.connectivity;
        copts.search = opts.search;
        r.clifford = clifford_bounds(g, copts);
    } else {
        r.warnings.push_back("pa < 2: canonical geometry and Clifford bounds are undefined");
    }

    if (opts.betti) {
        if (g.pa() >= 3 && r.clifford) {
            KoszulHypotheses h = derive_hypotheses(g, conn, *r.clifford);
            BettiShape shape = base_shape(g.pa(), h);
            shape = apply_nonvanishing(std::move(shape), h);
            if (r.clifford->exact) {
                shape = apply_green_vanishing(std::move(shape), *r.clifford->exact,
                                              two_component_green_family(g));
            }
            for (const std::string& w : shape.warnings()) r.warnings.push_back(w);
            r.betti = std::move(shape);
        } else {
            r.warnings.push_back("pa < 3: no Betti grid is defined");
        }
    }
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << r.tool << " " << r.version << "  input-hash " << r.input_hash << "\n";
    out << "curve: components=" << r.num_components << " nodes=" << r.total_nodes
        << " pa=" << r.pa << "\n";
    out << "genera:";
    for (Int g : r.genera) out << " " << g;
    out << "\n";
    if (r.connectivity) {
        const ConnectivityReport& c = *r.connectivity;
        if (c.infinite) {
            out << "connectivity: m=infinite (irreducible)\n";
        } else {
            out << "connectivity: m=" << c.m << "\n";
            if (c.witness) out << "  witness: " << render(*c.witness) << "\n";
            if (c.all_min_decompositions) {
                out << "  minimum decompositions: " << c.all_min_decompositions->size() << "\n";
            }
        }
    }
    if (r.geometry) {
        out << "canonical geometry: base-point-free="
            << (r.geometry->base_point_free ? "yes" : "no")
            << " very-ample=" << to_string(r.geometry->very_ample) << "\n";
        for (const Decomposition& d : r.geometry->base_point_witnesses) {
            out << "  base-point witness: " << render(d) << "\n";
        }
        for (const Decomposition& d : r.geometry->separation_failures) {
            out << "  separation failure: " << render(d) << "\n";
        }
    }
    if (r.clifford) {
        const CliffordBounds& b = *r.clifford;
        out << "clifford bounds: lower=" << b.lower << " upper=";
        if (b.upper) out << *b.upper;
        else out << "none";
        out << " exact=";
        if (b.exact) out << *b.exact;
        else out << "none";
        out << "\n";
        for (const BoundCertificate& c : b.certificates) {
            const char* kind = c.kind == BoundKind::Lower   ? "lower"
                               : c.kind == BoundKind::Upper ? "upper"
                                                            : "exact";
            out << "  certificate " << kind << " " << c.value << "  " << c.source;
            if (!c.witness.empty()) out << "  [" << c.witness << "]";
            if (!c.certified) out << "  (heuristic, not certified minimal)";
            out << "\n";
            for (const std::string& a : c.assumptions) out << "    assumes: " << a << "\n";
        }
    }
    if (r.betti) {
        out << "betti shape (pa=" << r.betti->genus() << "):\n" << r.betti->render();
    }
    for (const std::string& w : r.validation.warnings) out << "warning: " << w << "\n";
    for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
    return out.str();
}

std::string render_structured(const AnalysisReport& r) {
    ordered j;
    j["tool"] = r.tool;
    j["version"] = r.version;
    j["input_hash"] = r.input_hash;
    ordered curve;
    curve["components"] = r.num_components;
    curve["nodes"] = r.total_nodes;
    curve["pa"] = r.pa;
    curve["genera"] = r.genera;
    j["curve"] = std::move(curve);
    j["validation"] = validation_json(r.validation);
    if (r.connectivity) j["connectivity"] = connectivity_json(*r.connectivity);
    if (r.geometry) j["canonical_geometry"] = geometry_json(*r.geometry);
    if (r.clifford) j["clifford"] = clifford_json(*r.clifford);
    if (r.betti) j["betti"] = betti_json(*r.betti);
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

std::string render_text(const ProofTrace& t) {
    std::ostringstream out;
    out << "two-component vanishing certificate\n";
    out << "  g1=" << t.g1 << " g2=" << t.g2 << " m=" << t.m << "\n";
    out << "  pa       = " << t.pa << "\n";
    out << "  cliff    = " << t.cliff << "\n";
    out << "  component-1 piece vanishes for p >= " << t.threshold_comp1_piece << "\n";
    out << "  component-0 piece vanishes for p >= " << t.threshold_comp0_piece << "\n";
    out << "  K_{p,1} = 0 iff p >= " << t.vanishing_from << "\n";
    out << "  verdict: " << (t.pass ? "pass" : "fail") << "\n";
    return out.str();
}

std::string render_structured(const Green2Result& r) {
    ordered j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    ordered t;
    t["g1"] = r.trace.g1;
    t["g2"] = r.trace.g2;
    t["m"] = r.trace.m;
    t["pa"] = r.trace.pa;
    t["cliff"] = r.trace.cliff;
    t["threshold_comp1_piece"] = r.trace.threshold_comp1_piece;
    t["threshold_comp0_piece"] = r.trace.threshold_comp0_piece;
    t["vanishing_from"] = r.trace.vanishing_from;
    t["pass"] = r.trace.pass;
    j["trace"] = std::move(t);
    j["betti"] = betti_json(r.shape);
    return j.dump(2) + "\n";
}

std::string render_text(const ProfileValidation& v) {
    std::ostringstream out;
    out << "profile validation: " << (v.valid ? "pass" : "fail") << "\n";
    out << "  contributes: " << (v.contributes ? "yes" : "no") << "\n";
    for (const ProfileViolation& viol : v.violations) {
        out << "  violated: " << viol.constraint << " (" << viol.detail << ")\n";
    }
    return out.str();
}

std::string render_structured(const ProfileValidation& v) {
    ordered j;
    j["valid"] = v.valid;
    j["contributes"] = v.contributes;
    j["violations"] = ordered::array();
    for (const ProfileViolation& viol : v.violations) {
        ordered e;
        e["constraint"] = viol.constraint;
        e["detail"] = viol.detail;
        j["violations"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace curvecliff
