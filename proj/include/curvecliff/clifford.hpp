#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecliff/connectivity.hpp"
#include "curvecliff/curve.hpp"

namespace curvecliff {

enum class ProfileKind { SplitCluster, WitnessInvertible, UserSupplied };

// Numerical profile of a nef rank-1 sheaf on the curve.  degree is the
// total degree; per_component_degree holds the restricted degrees, which
// sum to degree minus the number of nodes where the sheaf fails to be
// locally free (zero for invertible sheaves).
//
// Profiles emitted by the library always satisfy, exactly:
//   0 <= per_component_degree[i] <= canonical_degree_on({i})
//   h0 - h1 == degree + 1 - pa(C)
//   cliff == degree - 2*h0 + 2
struct SheafProfile {
    ProfileKind kind = ProfileKind::UserSupplied;
    bool invertible = false;
    std::vector<Int> per_component_degree;
    Int degree = 0;
    Int h0 = 0;
    Int h1 = 0;
    Int cliff = 0;

    // A sheaf contributes to the Clifford index of the curve iff both
    // cohomology spaces have dimension at least two.
    bool contributes() const { return h0 >= 2 && h1 >= 2; }
};

struct ProfileViolation {
    std::string constraint;  // stable machine-readable tag
    std::string detail;
};

struct ProfileValidation {
    bool valid = false;
    bool contributes = false;
    std::vector<ProfileViolation> violations;
};

// Consistency check of a profile against a curve.  Constraint tags:
//   component-count, degree-window, cohomology-nonnegative, riemann-roch,
//   clifford-definition, restriction-degree-sum,
//   invertible-clifford-nonnegative (h0 <= deg/2 + 1 for invertible sheaves).
ProfileValidation validate_sheaf_profile(const CurveGraph& g, const SheafProfile& p);

// 0 for irreducible or 4-connected curves, otherwise -V + 1.
Int lower_bound(const CurveGraph& g);

// min(m - 2, (pa - 1) / 2) when every component has positive genus;
// no claim (nullopt) when a rational component breaks the hypothesis.
std::optional<Int> theorem_upper_bound(const CurveGraph& g);

// Profile of I_S w_C where S is the set of all nodes crossing the
// partition.  Every part must be connected with pa >= 1, and the resulting
// restricted degrees must stay in the nef window.
SheafProfile split_cluster_profile(const CurveGraph& g, const SetPartition& p);

struct SearchOptions {
    // Largest V for which all set partitions are enumerated (exact mode).
    int partition_guard = 12;
    // Allow the greedy merge heuristic beyond the guard; the result is then
    // an admissible partition but not certified minimal.
    bool allow_heuristic = false;
};

struct SplitBound {
    Int cliff = 0;
    SetPartition partition;
    bool certified = true;
};

// Minimizes crossing(P) - 2k + 2 over admissible partitions.  Exact via
// restricted-growth-string enumeration up to the guard; ties broken by
// smallest k, then lexicographically smallest growth string.  nullopt when
// no admissible partition exists.
std::optional<SplitBound> best_split_bound(const CurveGraph& g, const SearchOptions& opts = {});

// Profile of the witness sheaf attached to a minimum-cut decomposition
// with both sides of positive genus; its Clifford index is m - 2.  For
// m >= 2 this is the invertible sheaf restricting to w_C on A and to O on
// B; for m = 1 it is the (non-invertible) ideal twist at the base point.
SheafProfile witness_invertible_profile(const CurveGraph& g, const Decomposition& d);

enum class BoundKind { Lower, Upper, Exact };

struct BoundCertificate {
    BoundKind kind = BoundKind::Lower;
    Int value = 0;
    std::string source;   // e.g. "cluster-count-lower", "split-cluster"
    std::string witness;  // rendered decomposition / partition, may be empty
    bool certified = true;
    std::vector<std::string> assumptions;
};

struct CliffordBounds {
    Int lower = 0;
    std::optional<Int> upper;
    std::optional<Int> exact;
    std::vector<BoundCertificate> certificates;
};

struct CliffordOptions {
    ConnectivityOptions connectivity;
    SearchOptions search;
};

// True when the curve matches the certified two-component family: two
// components, a Brill-Noether-general one of genus g1, the other of genus
// g2 >= 1, joined at m nodes with 4 <= m <= (g1 + 1) / 2.  The Clifford
// index is then exactly m - 2 and the Betti vanishing boundary is proven.
bool two_component_green_family(const CurveGraph& g);

CliffordBounds clifford_bounds(const CurveGraph& g, const CliffordOptions& opts = {});

}  // namespace curvecliff
