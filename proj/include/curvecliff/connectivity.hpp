#pragma once

#include <optional>
#include <vector>

#include "curvecliff/curve.hpp"

namespace curvecliff {

enum class TriBool { No, Yes, Unknown };

struct ConnectivityOptions {
    // Largest V for which all 2^(V-1) - 1 bipartitions are enumerated
    // (fills all_min_decompositions and the geometry witness lists).
    int enumeration_guard = 22;
};

struct ConnectivityReport {
    // True for irreducible curves: no proper decomposition exists and the
    // minimum over the empty set is taken as infinite.
    bool infinite = false;
    Int m = 0;
    std::optional<Decomposition> witness;
    std::optional<std::vector<Decomposition>> all_min_decompositions;

    bool at_least(Int k) const { return infinite || m >= k; }
};

// Weighted global minimum cut over all proper decompositions.  m is found
// by a deterministic Stoer-Wagner pass; the witness is then refined to the
// canonical representative (lexicographically smallest B-membership vector
// with component 0 pinned to side A) by a greedy max-flow feasibility scan,
// so it matches the brute-force enumeration on every input.
ConnectivityReport connectivity_number(const CurveGraph& g, const ConnectivityOptions& opts = {});

bool is_m_connected(const CurveGraph& g, Int m, const ConnectivityOptions& opts = {});

// Verification oracle: exhaustive enumeration of all bipartitions.
// Throws GuardError above the enumeration guard.
ConnectivityReport min_cut_bruteforce(const CurveGraph& g, const ConnectivityOptions& opts = {});

// Three-valued honest-hyperellipticity of the whole curve.  A finite
// degree-2 morphism to the projective line admits at most two components,
// so the status is derivable for V >= 3 and for V = 2 with a positive-genus
// component; otherwise it comes from the user-asserted component flags.
TriBool honestly_hyperelliptic_status(const CurveGraph& g);

struct CanonicalGeometry {
    bool base_point_free = false;
    TriBool very_ample = TriBool::Unknown;
    std::vector<Decomposition> base_point_witnesses;  // decompositions with A.B = 1
    std::vector<Decomposition> separation_failures;   // decompositions with A.B = 2
    // False when V exceeded the enumeration guard and the lists above hold
    // only the canonical minimum-cut witness.
    bool witness_lists_complete = true;
};

// Base-point-freeness and very-ampleness of the canonical sheaf from the
// connectivity number and the hyperellipticity status.  Requires pa >= 2.
CanonicalGeometry canonical_geometry(const CurveGraph& g, const ConnectivityOptions& opts = {});

}  // namespace curvecliff
