#include "curvecliff/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvecliff {

namespace {

Int lower_bound_impl(const CurveGraph& g, const ConnectivityReport& conn) {
    if (g.num_components() == 1 || conn.at_least(4)) return 0;
    return -static_cast<Int>(g.num_components()) + 1;
}

std::optional<Int> theorem_upper_impl(const CurveGraph& g, const ConnectivityReport& conn) {
    for (const ComponentRecord& c : g.components()) {
        if (c.genus == 0) return std::nullopt;  // a rational component breaks the hypothesis
    }
    Int m = conn.m;
    return std::min(m - 2, (g.pa() - 1) / 2);
}

// Restricted degrees of I_S w_C for the split cluster S of a partition,
// given per-component incident crossing multiplicities.
std::vector<Int> split_degrees(const CurveGraph& g, const std::vector<int>& label) {
    const int n = g.num_components();
    std::vector<Int> crossing_at(static_cast<size_t>(n), 0);
    for (const EdgeRecord& e : g.edges()) {
        if (label[static_cast<size_t>(e.a)] != label[static_cast<size_t>(e.b)]) {
            crossing_at[static_cast<size_t>(e.a)] += e.mult;
            crossing_at[static_cast<size_t>(e.b)] += e.mult;
        }
    }
    std::vector<Int> d(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        const ComponentRecord& c = g.component(v);
        d[static_cast<size_t>(v)] = 2 * c.genus - 2 + g.degree(v) - crossing_at[static_cast<size_t>(v)];
    }
    return d;
}

void check_internal(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal profile inconsistency: ") + what);
}

// Admissibility data of one candidate partition, evaluated from a label
// vector (component -> part index).
struct PartitionStats {
    bool admissible = false;
    int k = 0;
    Int crossing = 0;
    Int objective = 0;
};

PartitionStats evaluate_labels(const CurveGraph& g, const std::vector<int>& label, int k) {
    PartitionStats st;
    st.k = k;
    if (k < 2) return st;
    const int n = g.num_components();

    std::vector<Int> part_genus(static_cast<size_t>(k), 0);
    std::vector<Int> part_internal(static_cast<size_t>(k), 0);
    std::vector<Int> part_size(static_cast<size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
        part_genus[static_cast<size_t>(label[static_cast<size_t>(v)])] += g.component(v).genus;
        part_size[static_cast<size_t>(label[static_cast<size_t>(v)])] += 1;
    }
    st.crossing = 0;
    std::vector<Int> internal_deg(static_cast<size_t>(n), 0);
    for (const EdgeRecord& e : g.edges()) {
        if (label[static_cast<size_t>(e.a)] == label[static_cast<size_t>(e.b)]) {
            part_internal[static_cast<size_t>(label[static_cast<size_t>(e.a)])] += e.mult;
            internal_deg[static_cast<size_t>(e.a)] += e.mult;
            internal_deg[static_cast<size_t>(e.b)] += e.mult;
        } else {
            st.crossing += e.mult;
        }
    }
    Int h0 = 0;
    for (int j = 0; j < k; ++j) {
        Int pa = part_genus[static_cast<size_t>(j)] + part_internal[static_cast<size_t>(j)] -
                 part_size[static_cast<size_t>(j)] + 1;
        if (pa < 1) return st;  // subcanonicity guard
        h0 += pa;
    }
    if (h0 < 2) return st;  // the profile must contribute
    // nef window: only rational components can fall below zero
    for (int v = 0; v < n; ++v) {
        if (g.component(v).genus == 0 && internal_deg[static_cast<size_t>(v)] < 2) return st;
    }
    // connectivity of every part (union-find over internal edges)
    std::vector<int> root(static_cast<size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const EdgeRecord& e : g.edges()) {
        if (label[static_cast<size_t>(e.a)] == label[static_cast<size_t>(e.b)]) {
            root[static_cast<size_t>(find(e.a))] = find(e.b);
        }
    }
    std::vector<int> part_root(static_cast<size_t>(k), -1);
    for (int v = 0; v < n; ++v) {
        int j = label[static_cast<size_t>(v)];
        int r = find(v);
        if (part_root[static_cast<size_t>(j)] == -1) part_root[static_cast<size_t>(j)] = r;
        else if (part_root[static_cast<size_t>(j)] != r) return st;  // disconnected part
    }
    st.admissible = true;
    st.objective = st.crossing - 2 * static_cast<Int>(k) + 2;
    return st;
}

SetPartition partition_from_labels(const CurveGraph& g, const std::vector<int>& label, int k) {
    std::vector<Subcurve> parts(static_cast<size_t>(k));
    for (int v = 0; v < g.num_components(); ++v) {
        parts[static_cast<size_t>(label[static_cast<size_t>(v)])].members.push_back(v);
    }
    return make_set_partition(g, std::move(parts));
}

// Lexicographic successor of a restricted growth string (a[0] = 0,
// a[i] <= 1 + max(a[0..i-1])).
bool next_rgs(std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = n - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int j = 1; j < i; ++j) prefix_max = std::max(prefix_max, a[static_cast<size_t>(j)]);
        if (a[static_cast<size_t>(i)] <= prefix_max) {
            ++a[static_cast<size_t>(i)];
            std::fill(a.begin() + i + 1, a.end(), 0);
            return true;
        }
    }
    return false;
}

std::optional<SplitBound> exact_split_search(const CurveGraph& g) {
    const int n = g.num_components();
    std::vector<int> label(static_cast<size_t>(n), 0);
    bool have_best = false;
    std::vector<int> best_label;
    PartitionStats best;
    do {
        int k = 1 + *std::max_element(label.begin(), label.end());
        PartitionStats st = evaluate_labels(g, label, k);
        if (!st.admissible) continue;
        if (!have_best || st.objective < best.objective ||
            (st.objective == best.objective && st.k < best.k)) {
            have_best = true;
            best = st;
            best_label = label;
        }
    } while (next_rgs(label));
    if (!have_best) return std::nullopt;
    return SplitBound{best.objective, partition_from_labels(g, best_label, best.k), true};
}

// Greedy fallback beyond the guard: start from singletons, repair
// inadmissible parts by merging them into their strongest neighbor, then
// keep merging the pair with the heaviest crossing while that lowers the
// objective.  Merges only join adjacent parts, so parts stay connected.
std::optional<SplitBound> heuristic_split_search(const CurveGraph& g) {
    const int n = g.num_components();
    std::vector<int> label(static_cast<size_t>(n));
    std::iota(label.begin(), label.end(), 0);

    auto relabel = [&]() {
        std::vector<int> remap(static_cast<size_t>(n), -1);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            int& slot = remap[static_cast<size_t>(label[static_cast<size_t>(v)])];
            if (slot == -1) slot = next++;
            label[static_cast<size_t>(v)] = slot;
        }
        return next;
    };

    int k = n;
    auto merge = [&](int x, int y) {
        for (int v = 0; v < n; ++v) {
            if (label[static_cast<size_t>(v)] == y) label[static_cast<size_t>(v)] = x;
        }
        k = relabel();
    };

    auto pair_weight = [&](int k_now) {
        std::vector<std::vector<Int>> w(static_cast<size_t>(k_now),
                                        std::vector<Int>(static_cast<size_t>(k_now), 0));
        for (const EdgeRecord& e : g.edges()) {
            int x = label[static_cast<size_t>(e.a)];
            int y = label[static_cast<size_t>(e.b)];
            if (x != y) {
                w[static_cast<size_t>(x)][static_cast<size_t>(y)] += e.mult;
                w[static_cast<size_t>(y)][static_cast<size_t>(x)] += e.mult;
            }
        }
        return w;
    };

    // repair phase
    while (true) {
        if (k < 2) return std::nullopt;
        std::vector<Int> part_genus(static_cast<size_t>(k), 0), part_internal(static_cast<size_t>(k), 0),
            part_size(static_cast<size_t>(k), 0);
        std::vector<Int> internal_deg(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            part_genus[static_cast<size_t>(label[static_cast<size_t>(v)])] += g.component(v).genus;
            part_size[static_cast<size_t>(label[static_cast<size_t>(v)])] += 1;
        }
        for (const EdgeRecord& e : g.edges()) {
            if (label[static_cast<size_t>(e.a)] == label[static_cast<size_t>(e.b)]) {
                part_internal[static_cast<size_t>(label[static_cast<size_t>(e.a)])] += e.mult;
                internal_deg[static_cast<size_t>(e.a)] += e.mult;
                internal_deg[static_cast<size_t>(e.b)] += e.mult;
            }
        }
        int offender = -1;
        for (int j = 0; j < k && offender == -1; ++j) {
            if (part_genus[static_cast<size_t>(j)] + part_internal[static_cast<size_t>(j)] -
                    part_size[static_cast<size_t>(j)] + 1 < 1) {
                offender = j;
            }
        }
        for (int v = 0; v < n && offender == -1; ++v) {
            if (g.component(v).genus == 0 && internal_deg[static_cast<size_t>(v)] < 2) {
                offender = label[static_cast<size_t>(v)];
            }
        }
        if (offender == -1) break;
        if (k == 2) return std::nullopt;
        auto w = pair_weight(k);
        int buddy = -1;
        for (int j = 0; j < k; ++j) {
            if (j == offender || w[static_cast<size_t>(offender)][static_cast<size_t>(j)] == 0) continue;
            if (buddy == -1 ||
                w[static_cast<size_t>(offender)][static_cast<size_t>(j)] >
                    w[static_cast<size_t>(offender)][static_cast<size_t>(buddy)]) {
                buddy = j;
            }
        }
        if (buddy == -1) return std::nullopt;  // cannot happen on a connected curve
        merge(std::min(offender, buddy), std::max(offender, buddy));
    }

    // improvement phase: a merge changes the objective by 2 - cross(P, Q)
    while (k > 2) {
        auto w = pair_weight(k);
        int bx = -1, by = -1;
        for (int x = 0; x < k; ++x) {
            for (int y = x + 1; y < k; ++y) {
                if (w[static_cast<size_t>(x)][static_cast<size_t>(y)] > 2 &&
                    (bx == -1 || w[static_cast<size_t>(x)][static_cast<size_t>(y)] >
                                     w[static_cast<size_t>(bx)][static_cast<size_t>(by)])) {
                    bx = x;
                    by = y;
                }
            }
        }
        if (bx == -1) break;
        merge(bx, by);
    }

    PartitionStats st = evaluate_labels(g, label, k);
    if (!st.admissible) return std::nullopt;
    return SplitBound{st.objective, partition_from_labels(g, label, k), false};
}

}  // namespace

Int lower_bound(const CurveGraph& g) {
    g.require_valid(true, "lower_bound");
    if (g.pa() < 2) throw CurveError("lower_bound: requires pa >= 2");
    return lower_bound_impl(g, connectivity_number(g));
}

std::optional<Int> theorem_upper_bound(const CurveGraph& g) {
    g.require_valid(true, "theorem_upper_bound");
    if (g.num_components() < 2) throw CurveError("theorem_upper_bound: requires at least two components");
    return theorem_upper_impl(g, connectivity_number(g));
}

SheafProfile split_cluster_profile(const CurveGraph& g, const SetPartition& p) {
    g.require_valid(true, "split_cluster_profile");
    const int n = g.num_components();
    std::vector<int> label(static_cast<size_t>(n), -1);
    for (size_t j = 0; j < p.parts.size(); ++j) {
        if (!subcurve_connected(g, p.parts[j])) {
            throw CurveError("split_cluster_profile: part " + std::to_string(j) +
                             " is disconnected; profile not certified");
        }
        if (arithmetic_genus(g, p.parts[j]) < 1) {
            throw CurveError("split_cluster_profile: part " + std::to_string(j) +
                             " has arithmetic genus 0; profile not certified");
        }
        for (int v : p.parts[j].members) label[static_cast<size_t>(v)] = static_cast<int>(j);
    }

    SheafProfile prof;
    prof.kind = ProfileKind::SplitCluster;
    prof.invertible = false;
    prof.per_component_degree = split_degrees(g, label);
    for (int v = 0; v < n; ++v) {
        if (prof.per_component_degree[static_cast<size_t>(v)] < 0) {
            throw CurveError("split_cluster_profile: restricted degree on component " +
                             std::to_string(v) + " leaves the nef window; profile not certified");
        }
    }
    const Int k = static_cast<Int>(p.parts.size());
    prof.degree = 2 * g.pa() - 2 - p.crossing_edges;
    prof.h0 = 0;
    for (const Subcurve& part : p.parts) prof.h0 += arithmetic_genus(g, part);
    prof.h1 = k;
    prof.cliff = p.crossing_edges - 2 * k + 2;

    check_internal(prof.cliff == prof.degree - 2 * prof.h0 + 2, "clifford definition");
    check_internal(prof.h0 - prof.h1 == prof.degree + 1 - g.pa(), "riemann-roch");
    return prof;
}

std::optional<SplitBound> best_split_bound(const CurveGraph& g, const SearchOptions& opts) {
    g.require_valid(true, "best_split_bound");
    if (g.num_components() <= opts.partition_guard) return exact_split_search(g);
    if (!opts.allow_heuristic) {
        throw GuardError("best_split_bound: " + std::to_string(g.num_components()) +
                         " components exceed the set-partition guard of " +
                         std::to_string(opts.partition_guard) +
                         " (pass the heuristic option for a non-certified bound)");
    }
    return heuristic_split_search(g);
}

SheafProfile witness_invertible_profile(const CurveGraph& g, const Decomposition& d) {
    g.require_valid(true, "witness_invertible_profile");
    Int cross = intersection_product(g, d);
    ConnectivityReport conn = connectivity_number(g);
    if (conn.infinite || cross != conn.m) {
        throw CurveError("witness_invertible_profile: decomposition is not a minimum cut");
    }
    Int pa_a = arithmetic_genus(g, d.part_a);
    Int pa_b = arithmetic_genus(g, d.part_b);
    if (pa_a < 1 || pa_b < 1) {
        throw CurveError("witness_invertible_profile: a side has arithmetic genus 0");
    }

    if (cross == 1) {
        // Base-point case: the ideal twist I_P w_C at the separating node.
        // This is the split-cluster sheaf of the bipartition (degree drops
        // by one on each branch through the node), so delegate.
        return split_cluster_profile(g, make_set_partition(g, {d.part_a, d.part_b}));
    }

    // w_C on A, the structure sheaf on B, glued along a divisor supported
    // off the nodes.
    const int n = g.num_components();
    SheafProfile prof;
    prof.per_component_degree.assign(static_cast<size_t>(n), 0);
    prof.kind = ProfileKind::WitnessInvertible;
    prof.invertible = true;
    for (int v : d.part_a.members) {
        prof.per_component_degree[static_cast<size_t>(v)] =
            canonical_degree_on(g, make_subcurve(g, {v}));
    }
    prof.degree = canonical_degree_on(g, d.part_a);
    prof.h0 = 1 + pa_a;
    prof.h1 = 1 + pa_b;
    prof.cliff = cross - 2;

    check_internal(prof.cliff == prof.degree - 2 * prof.h0 + 2, "clifford definition");
    check_internal(prof.h0 - prof.h1 == prof.degree + 1 - g.pa(), "riemann-roch");
    return prof;
}

ProfileValidation validate_sheaf_profile(const CurveGraph& g, const SheafProfile& p) {
    g.require_valid(true, "validate_sheaf_profile");
    ProfileValidation out;
    const int n = g.num_components();

    if (static_cast<int>(p.per_component_degree.size()) != n) {
        out.violations.push_back({"component-count",
                                  "profile lists " + std::to_string(p.per_component_degree.size()) +
                                      " restricted degrees for " + std::to_string(n) + " components"});
        out.valid = false;
        out.contributes = p.contributes();
        return out;
    }
    Int restricted_sum = 0;
    for (int v = 0; v < n; ++v) {
        Int d = p.per_component_degree[static_cast<size_t>(v)];
        Int cap = canonical_degree_on(g, make_subcurve(g, {v}));
        restricted_sum += d;
        if (d < 0 || d > cap) {
            out.violations.push_back(
                {"degree-window", "restricted degree " + std::to_string(d) + " on component " +
                                      std::to_string(v) + " is outside [0, " + std::to_string(cap) + "]"});
        }
    }
    if (p.h0 < 0 || p.h1 < 0) {
        out.violations.push_back({"cohomology-nonnegative", "h0 and h1 must be nonnegative"});
    }
    if (p.h0 - p.h1 != p.degree + 1 - g.pa()) {
        out.violations.push_back(
            {"riemann-roch", "h0 - h1 = " + std::to_string(p.h0 - p.h1) + " but degree + 1 - pa = " +
                                 std::to_string(p.degree + 1 - g.pa())});
    }
    if (p.cliff != p.degree - 2 * p.h0 + 2) {
        out.violations.push_back({"clifford-definition",
                                  "cliff must equal degree - 2*h0 + 2 = " +
                                      std::to_string(p.degree - 2 * p.h0 + 2)});
    }
    if (p.invertible) {
        if (p.degree != restricted_sum) {
            out.violations.push_back({"restriction-degree-sum",
                                      "an invertible profile must have degree equal to the sum " +
                                          std::to_string(restricted_sum) + " of restricted degrees"});
        }
        if (2 * p.h0 > p.degree + 2) {
            out.violations.push_back({"invertible-clifford-nonnegative",
                                      "h0 = " + std::to_string(p.h0) + " exceeds degree/2 + 1; an "
                                      "invertible sheaf in the nef window has nonnegative Clifford index"});
        }
    } else {
        if (p.degree < restricted_sum || p.degree > restricted_sum + g.total_edge_multiplicity()) {
            out.violations.push_back(
                {"restriction-degree-sum",
                 "degree " + std::to_string(p.degree) + " must lie between the restricted-degree sum " +
                     std::to_string(restricted_sum) + " and that sum plus the node count"});
        }
    }
    out.valid = out.violations.empty();
    out.contributes = p.contributes();
    return out;
}

bool two_component_green_family(const CurveGraph& g) {
    if (!g.structurally_valid() || g.num_components() != 2 || !g.connected()) return false;
    Int m = g.total_edge_multiplicity();
    for (int v = 0; v < 2; ++v) {
        const ComponentRecord& c1 = g.component(v);
        const ComponentRecord& c2 = g.component(1 - v);
        if (c1.has_flag(ComponentFlag::BrillNoetherGeneral) && c2.genus >= 1 && m >= 4 &&
            2 * m <= c1.genus + 1) {
            return true;
        }
    }
    return false;
}

CliffordBounds clifford_bounds(const CurveGraph& g, const CliffordOptions& opts) {
    g.require_valid(true, "clifford_bounds");
    if (g.pa() < 2) throw CurveError("clifford_bounds: requires pa >= 2");

    ConnectivityReport conn = connectivity_number(g, opts.connectivity);
    CliffordBounds out;
    out.lower = lower_bound_impl(g, conn);
    {
        BoundCertificate cert;
        cert.kind = BoundKind::Lower;
        cert.value = out.lower;
        if (g.num_components() == 1) cert.source = "irreducible-nonnegative";
        else if (conn.at_least(4)) cert.source = "four-connected-nonnegative";
        else {
            cert.source = "cluster-count-lower";
            cert.witness = "n = " + std::to_string(g.num_components());
        }
        out.certificates.push_back(std::move(cert));
    }

    if (g.num_components() >= 2) {
        if (std::optional<Int> tu = theorem_upper_impl(g, conn)) {
            BoundCertificate cert;
            cert.kind = BoundKind::Upper;
            cert.value = *tu;
            cert.source = "connectivity-degree-upper";
            cert.witness = "min(m - 2, (pa - 1)/2) with m = " + std::to_string(conn.m) +
                           ", pa = " + std::to_string(g.pa());
            out.certificates.push_back(std::move(cert));
            out.upper = *tu;
        }
    }
    if (std::optional<SplitBound> sb = best_split_bound(g, opts.search)) {
        BoundCertificate cert;
        cert.kind = BoundKind::Upper;
        cert.value = sb->cliff;
        cert.source = "split-cluster";
        cert.certified = sb->certified;
        std::ostringstream w;
        for (size_t j = 0; j < sb->partition.parts.size(); ++j) {
            if (j) w << "|";
            w << "{";
            for (size_t i = 0; i < sb->partition.parts[j].members.size(); ++i) {
                if (i) w << ",";
                w << sb->partition.parts[j].members[i];
            }
            w << "}";
        }
        w << " (crossing " << sb->partition.crossing_edges << ", k = "
          << sb->partition.parts.size() << ")";
        cert.witness = w.str();
        cert.assumptions.push_back("sections vanishing on the split cluster decompose across parts");
        out.certificates.push_back(std::move(cert));
        out.upper = out.upper ? std::min(*out.upper, sb->cliff) : sb->cliff;
    }

    if (out.upper && out.lower == *out.upper) {
        out.exact = out.lower;
        out.certificates.push_back({BoundKind::Exact, out.lower, "bounds-coincide", "", true, {}});
    } else if (two_component_green_family(g)) {
        out.exact = conn.m - 2;
        out.certificates.push_back(
            {BoundKind::Exact, conn.m - 2, "two-component-green", "m = " + std::to_string(conn.m), true, {}});
    } else if (conn.at_least(4) && honestly_hyperelliptic_status(g) == TriBool::Yes) {
        out.exact = 0;
        out.certificates.push_back({BoundKind::Exact, 0, "honestly-hyperelliptic", "", true, {}});
    }

    if (out.exact) {
        bool in_range = *out.exact >= out.lower && (!out.upper || *out.exact <= *out.upper);
        if (!in_range) {
            throw ContradictionError("clifford_bounds: exact value " + std::to_string(*out.exact) +
                                     " escapes the certified interval");
        }
    }
    return out;
}

}  // namespace curvecliff
