#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecliff/clifford.hpp"
#include "curvecliff/connectivity.hpp"
#include "curvecliff/curve.hpp"

namespace curvecliff {

enum class BettiValue { Zero, Nonzero, Unknown };

enum class Provenance {
    Structural,        // normal generation, the q=0/q=3 rows, grid conventions
    NonvanishingCliff, // nonvanishing range derived from the Clifford bound
    NonvanishingConn,  // nonvanishing range derived from the connectivity number
    GreenConjectural,  // vanishing boundary assuming the Green statement
    GreenProven,       // vanishing boundary proven for the two-component family
    Duality,           // propagated through K_{p,1} ~ K_{g-2-p,2}
};

const char* to_string(BettiValue v);
const char* to_string(Provenance p);

// Three-valued grid over p in [0, g-2], q in {0,..,3} recording what is
// known about the Koszul groups K_{p,q}(C, w_C) of the canonical sheaf.
// Setting an entry to the opposite of an already-known value throws
// ContradictionError.  closure() keeps the grid stable under duality
// (value(p,1) == value(g-2-p,2)), rightward Zero / leftward Nonzero
// propagation on the q=1 row for p >= 1, and the mirror rules on q=2.
// The p = 0 cells of rows 1 and 2 are exempt from propagation: K_{0,q}
// vanishes for every q > 0 regardless of the rest of the row.
class BettiShape {
  public:
    BettiShape(Int genus, bool hypotheses_met, std::vector<std::string> warnings);

    Int genus() const { return genus_; }
    bool hypotheses_met() const { return hypotheses_met_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    Int num_columns() const { return genus_ - 1; }  // p in [0, g-2]

    BettiValue value(Int p, int q) const;
    Provenance provenance(Int p, int q) const;

    void set(Int p, int q, BettiValue v, Provenance prov);
    void closure();

    // Fixed-width text table, rows q = 0..3, symbols 0 / * / ?.
    std::string render() const;

  private:
    struct Cell {
        BettiValue value = BettiValue::Unknown;
        Provenance prov = Provenance::Structural;
    };
    Cell& cell(Int p, int q);
    const Cell& cell(Int p, int q) const;

    Int genus_ = 3;
    bool hypotheses_met_ = false;
    std::vector<std::string> warnings_;
    std::vector<Cell> cells_;  // 4 rows of (g-1) columns
};

// Throws ContradictionError if the grid violates duality, row
// monotonicity, or the fixed q=0 / q=3 patterns.
void check_shape_consistency(const BettiShape& s);

struct KoszulHypotheses {
    bool three_connected = false;
    bool four_connected = false;
    TriBool not_honestly_hyperelliptic = TriBool::Unknown;
    bool no_rational_components = false;
    bool m_finite = false;
    Int m = 0;
    std::optional<Int> cliff_lower;
    std::optional<Int> cliff_upper;
    std::optional<Int> cliff_exact;
};

KoszulHypotheses derive_hypotheses(const CurveGraph& g, const ConnectivityReport& conn,
                                   const CliffordBounds& bounds);

// Grid with the rows fixed by normal generation and duality; all-Unknown
// (with a warning) when the curve is not known to be 3-connected and not
// honestly hyperelliptic.  Requires genus >= 3.
BettiShape base_shape(Int genus, const KoszulHypotheses& h);

// Marks K_{p,1} Nonzero for 1 <= p <= pa - cliff - 2 (Clifford branch,
// 4-connected curves; an upper bound for cliff only widens the true range
// so substituting it is sound) and for 1 <= p <= pa - m (connectivity
// branch).  No-op on a grid whose base hypotheses failed.
BettiShape apply_nonvanishing(BettiShape s, const KoszulHypotheses& h);

// Marks K_{p,1} Zero for p >= pa - cliff - 1; requires the exact Clifford
// index.  Labeled GreenProven only for the certified family.
BettiShape apply_green_vanishing(BettiShape s, Int cliff, bool proven);

struct ProofTrace {
    Int g1 = 0;
    Int g2 = 0;
    Int m = 0;
    Int pa = 0;
    Int cliff = 0;
    // Vanishing thresholds of the two restriction pieces of the canonical
    // Koszul complex: the component-1 piece dies for p >= g1 + g2, the
    // component-0 piece for p >= g1 + g2 + m - (g1 + 1)/2.
    Int threshold_comp1_piece = 0;
    Int threshold_comp0_piece = 0;
    Int vanishing_from = 0;  // = pa - cliff - 1 = g1 + g2
    bool pass = false;       // max(thresholds) <= g1 + g2
};

struct Green2Result {
    CurveGraph graph;
    BettiShape shape;
    ProofTrace trace;
};

// Builds the two-component curve (genus g1 Brill-Noether general, genus
// g2, m nodes), derives the fully determined q=1 row with its proven
// vanishing boundary at p = pa - (m-2) - 1, and records the threshold
// arithmetic.  Hypothesis violations (m < 4, 2m > g1+1, g2 < 1) are
// reported by name.
Green2Result green2_certificate(Int g1, Int g2, Int m);

}  // namespace curvecliff
