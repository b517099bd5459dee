#include "curvecliff/koszul.hpp"

#include <algorithm>
#include <sstream>

#include "curvecliff/generators.hpp"

namespace curvecliff {

const char* to_string(BettiValue v) {
    switch (v) {
        case BettiValue::Zero: return "Zero";
        case BettiValue::Nonzero: return "Nonzero";
        default: return "Unknown";
    }
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Structural: return "Structural";
        case Provenance::NonvanishingCliff: return "NonvanishingCliff";
        case Provenance::NonvanishingConn: return "NonvanishingConn";
        case Provenance::GreenConjectural: return "GreenConjectural";
        case Provenance::GreenProven: return "GreenProven";
        default: return "Duality";
    }
}

BettiShape::BettiShape(Int genus, bool hypotheses_met, std::vector<std::string> warnings)
    : genus_(genus), hypotheses_met_(hypotheses_met), warnings_(std::move(warnings)) {
    if (genus_ < 3) throw CurveError("betti shape: requires genus >= 3");
    cells_.assign(static_cast<size_t>(4 * (genus_ - 1)), Cell{});
}

BettiShape::Cell& BettiShape::cell(Int p, int q) {
    return cells_.at(static_cast<size_t>(q) * static_cast<size_t>(genus_ - 1) + static_cast<size_t>(p));
}

const BettiShape::Cell& BettiShape::cell(Int p, int q) const {
    return cells_.at(static_cast<size_t>(q) * static_cast<size_t>(genus_ - 1) + static_cast<size_t>(p));
}

BettiValue BettiShape::value(Int p, int q) const {
    if (q < 0 || p < 0) throw CurveError("betti shape: negative index");
    // Outside the stored window every group vanishes.
    if (q > 3 || p > genus_ - 2) return BettiValue::Zero;
    return cell(p, q).value;
}

Provenance BettiShape::provenance(Int p, int q) const { return cell(p, q).prov; }

void BettiShape::set(Int p, int q, BettiValue v, Provenance prov) {
    if (v == BettiValue::Unknown) return;
    if (p < 0 || p > genus_ - 2 || q < 0 || q > 3) {
        throw CurveError("betti shape: entry (" + std::to_string(p) + "," + std::to_string(q) +
                         ") is outside the grid");
    }
    Cell& c = cell(p, q);
    if (c.value == BettiValue::Unknown) {
        c.value = v;
        c.prov = prov;
        return;
    }
    if (c.value != v) {
        std::ostringstream msg;
        msg << "K_{" << p << "," << q << "} claimed both " << to_string(c.value) << " ("
            << to_string(c.prov) << ") and " << to_string(v) << " (" << to_string(prov) << ")";
        throw ContradictionError(msg.str());
    }
}

// Fixpoint of the duality and monotonicity rules.  K_{0,q} vanishes for
// every q > 0 independently of the rest of the row, so the q=1 rightward
// rules start at p = 1 and the q=2 leftward rules stop at p = g-3.
void BettiShape::closure() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Int p = 0; p <= genus_ - 2; ++p) {
            BettiValue a = cell(p, 1).value;
            BettiValue b = cell(genus_ - 2 - p, 2).value;
            if (a != BettiValue::Unknown && b == BettiValue::Unknown) {
                set(genus_ - 2 - p, 2, a, Provenance::Duality);
                changed = true;
            } else if (b != BettiValue::Unknown && a == BettiValue::Unknown) {
                set(p, 1, b, Provenance::Duality);
                changed = true;
            } else if (a != BettiValue::Unknown && a != b) {
                set(genus_ - 2 - p, 2, a, Provenance::Duality);  // throws
            }
        }
        for (Int p = 1; p + 1 <= genus_ - 2; ++p) {
            if (cell(p, 1).value == BettiValue::Zero && cell(p + 1, 1).value == BettiValue::Unknown) {
                set(p + 1, 1, BettiValue::Zero, cell(p, 1).prov);
                changed = true;
            }
        }
        for (Int p = genus_ - 2; p >= 2; --p) {
            if (cell(p, 1).value == BettiValue::Nonzero && cell(p - 1, 1).value == BettiValue::Unknown) {
                set(p - 1, 1, BettiValue::Nonzero, cell(p, 1).prov);
                changed = true;
            }
        }
    }
}

std::string BettiShape::render() const {
    std::ostringstream out;
    out << "      p:";
    for (Int p = 0; p <= genus_ - 2; ++p) out << ' ' << (p % 10);
    out << '\n';
    for (int q = 0; q <= 3; ++q) {
        out << "  q = " << q << ':';
        for (Int p = 0; p <= genus_ - 2; ++p) {
            char sym = '?';
            if (cell(p, q).value == BettiValue::Zero) sym = '0';
            else if (cell(p, q).value == BettiValue::Nonzero) sym = '*';
            out << ' ' << sym;
        }
        out << '\n';
    }
    return out.str();
}

void check_shape_consistency(const BettiShape& s) {
    const Int g = s.genus();
    if (!s.hypotheses_met()) {
        for (int q = 0; q <= 3; ++q) {
            for (Int p = 0; p <= g - 2; ++p) {
                if (s.value(p, q) != BettiValue::Unknown) {
                    throw ContradictionError("degenerate shape carries a claim at (" +
                                             std::to_string(p) + "," + std::to_string(q) + ")");
                }
            }
        }
        return;
    }
    if (s.value(0, 1) != BettiValue::Zero || s.value(0, 2) != BettiValue::Zero) {
        throw ContradictionError("normal generation requires K_{0,q} = 0 for q > 0");
    }
    for (Int p = 0; p <= g - 2; ++p) {
        if (s.value(p, 1) != s.value(g - 2 - p, 2)) {
            throw ContradictionError("duality broken at p = " + std::to_string(p));
        }
        BettiValue q0 = p == 0 ? BettiValue::Nonzero : BettiValue::Zero;
        if (s.value(p, 0) != q0) {
            throw ContradictionError("q=0 row pattern broken at p = " + std::to_string(p));
        }
        BettiValue q3 = p == g - 2 ? BettiValue::Nonzero : BettiValue::Zero;
        if (s.value(p, 3) != q3) {
            throw ContradictionError("q=3 row pattern broken at p = " + std::to_string(p));
        }
    }
    for (Int p = 1; p + 1 <= g - 2; ++p) {
        if (s.value(p, 1) == BettiValue::Zero && s.value(p + 1, 1) != BettiValue::Zero) {
            throw ContradictionError("q=1 monotonicity broken at p = " + std::to_string(p));
        }
        if (s.value(p, 2) == BettiValue::Zero && p >= 2 && s.value(p - 1, 2) != BettiValue::Zero) {
            throw ContradictionError("q=2 monotonicity broken at p = " + std::to_string(p));
        }
    }
}

KoszulHypotheses derive_hypotheses(const CurveGraph& g, const ConnectivityReport& conn,
                                   const CliffordBounds& bounds) {
    KoszulHypotheses h;
    h.three_connected = conn.at_least(3);
    h.four_connected = conn.at_least(4);
    TriBool hh = honestly_hyperelliptic_status(g);
    if (hh == TriBool::Yes) h.not_honestly_hyperelliptic = TriBool::No;
    else if (hh == TriBool::No) h.not_honestly_hyperelliptic = TriBool::Yes;
    else h.not_honestly_hyperelliptic = TriBool::Unknown;
    h.no_rational_components = true;
    for (const ComponentRecord& c : g.components()) {
        if (c.genus == 0) h.no_rational_components = false;
    }
    h.m_finite = !conn.infinite;
    h.m = conn.m;
    h.cliff_lower = bounds.lower;
    h.cliff_upper = bounds.upper;
    h.cliff_exact = bounds.exact;
    return h;
}

BettiShape base_shape(Int genus, const KoszulHypotheses& h) {
    if (genus < 3) throw CurveError("base_shape: requires genus >= 3");
    std::vector<std::string> warnings;
    bool met = h.three_connected && h.not_honestly_hyperelliptic == TriBool::Yes;
    if (!h.three_connected) {
        warnings.push_back("curve is not known to be 3-connected; no Betti claims are made");
    }
    if (h.not_honestly_hyperelliptic != TriBool::Yes) {
        warnings.push_back("curve is not known to avoid honest hyperellipticity; no Betti claims are made");
    }
    BettiShape s(genus, met, std::move(warnings));
    if (!met) return s;

    s.set(0, 0, BettiValue::Nonzero, Provenance::Structural);
    for (Int p = 1; p <= genus - 2; ++p) s.set(p, 0, BettiValue::Zero, Provenance::Structural);
    for (Int p = 0; p <= genus - 3; ++p) s.set(p, 3, BettiValue::Zero, Provenance::Structural);
    s.set(genus - 2, 3, BettiValue::Nonzero, Provenance::Structural);
    // normal generation: K_{0,q} = 0 for q > 0
    s.set(0, 1, BettiValue::Zero, Provenance::Structural);
    s.set(0, 2, BettiValue::Zero, Provenance::Structural);
    s.closure();
    return s;
}

BettiShape apply_nonvanishing(BettiShape s, const KoszulHypotheses& h) {
    if (!s.hypotheses_met()) return s;
    const Int pa = s.genus();
    if (h.four_connected && h.not_honestly_hyperelliptic == TriBool::Yes &&
        h.no_rational_components && pa >= 4) {
        std::optional<Int> cliff = h.cliff_exact ? h.cliff_exact : h.cliff_upper;
        if (cliff) {
            Int hi = std::min(pa - *cliff - 2, pa - 2);
            for (Int p = 1; p <= hi; ++p) s.set(p, 1, BettiValue::Nonzero, Provenance::NonvanishingCliff);
        }
    }
    if (h.no_rational_components && h.m_finite) {
        Int hi = std::min(pa - h.m, pa - 2);
        for (Int p = 1; p <= hi; ++p) s.set(p, 1, BettiValue::Nonzero, Provenance::NonvanishingConn);
    }
    s.closure();
    return s;
}

BettiShape apply_green_vanishing(BettiShape s, Int cliff, bool proven) {
    if (!s.hypotheses_met()) return s;
    const Int pa = s.genus();
    Provenance prov = proven ? Provenance::GreenProven : Provenance::GreenConjectural;
    for (Int p = std::max<Int>(pa - cliff - 1, 0); p <= pa - 2; ++p) {
        s.set(p, 1, BettiValue::Zero, prov);
    }
    s.closure();
    return s;
}

Green2Result green2_certificate(Int g1, Int g2, Int m) {
    if (m < 4) throw CurveError("green2_certificate: m = " + std::to_string(m) + " violates m >= 4");
    if (2 * m > g1 + 1) {
        throw CurveError("green2_certificate: m = " + std::to_string(m) +
                         " violates m <= (g1 + 1)/2 for g1 = " + std::to_string(g1));
    }
    if (g2 < 1) throw CurveError("green2_certificate: g2 = " + std::to_string(g2) + " violates g2 >= 1");

    CurveGraph graph = gen_two_component(g1, g2, m, true);
    ConnectivityReport conn = connectivity_number(graph);
    CliffordBounds bounds = clifford_bounds(graph);

    ProofTrace trace;
    trace.g1 = g1;
    trace.g2 = g2;
    trace.m = m;
    trace.pa = g1 + g2 + m - 1;
    trace.cliff = m - 2;
    trace.threshold_comp1_piece = g1 + g2;
    trace.threshold_comp0_piece = g2 + g1 + m - (g1 + 1) / 2;
    trace.vanishing_from = trace.pa - trace.cliff - 1;
    trace.pass = std::max(trace.threshold_comp1_piece, trace.threshold_comp0_piece) <= g1 + g2;

    if (graph.pa() != trace.pa) throw ContradictionError("green2_certificate: genus mismatch");
    if (!bounds.exact || *bounds.exact != trace.cliff) {
        throw ContradictionError("green2_certificate: Clifford index mismatch");
    }
    if (trace.vanishing_from != g1 + g2) {
        throw ContradictionError("green2_certificate: vanishing boundary mismatch");
    }

    KoszulHypotheses h = derive_hypotheses(graph, conn, bounds);
    BettiShape shape = base_shape(graph.pa(), h);
    shape = apply_nonvanishing(std::move(shape), h);
    shape = apply_green_vanishing(std::move(shape), trace.cliff, /*proven=*/true);

    for (Int p = 0; p <= trace.pa - 2; ++p) {
        BettiValue want = (p >= 1 && p <= trace.vanishing_from - 1) ? BettiValue::Nonzero : BettiValue::Zero;
        if (shape.value(p, 1) != want) {
            throw ContradictionError("green2_certificate: q=1 row not fully determined at p = " +
                                     std::to_string(p));
        }
    }
    return Green2Result{std::move(graph), std::move(shape), trace};
}

}  // namespace curvecliff
