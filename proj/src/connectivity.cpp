#include "curvecliff/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace curvecliff {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

// --- Stoer-Wagner global minimum cut on a dense weight matrix ------------
//
// Deterministic variant: the maximum-adjacency search always starts from
// the lowest-index live vertex and breaks key ties toward the lowest
// index, so repeated runs are identical.

Int stoer_wagner(const CurveGraph& g) {
    const int n = g.num_components();
    std::vector<std::vector<Int>> w(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
    for (const EdgeRecord& e : g.edges()) {
        w[static_cast<size_t>(e.a)][static_cast<size_t>(e.b)] += e.mult;
        w[static_cast<size_t>(e.b)][static_cast<size_t>(e.a)] += e.mult;
    }
    std::vector<int> live(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) live[static_cast<size_t>(i)] = i;

    Int best = kInf;
    while (live.size() > 1) {
        std::vector<char> added(static_cast<size_t>(n), 0);
        std::vector<Int> key(static_cast<size_t>(n), 0);
        int prev = -1;
        int last = -1;
        Int last_key = 0;
        for (size_t step = 0; step < live.size(); ++step) {
            int pick = -1;
            for (int v : live) {
                if (added[static_cast<size_t>(v)]) continue;
                if (pick == -1 || key[static_cast<size_t>(v)] > key[static_cast<size_t>(pick)]) pick = v;
            }
            added[static_cast<size_t>(pick)] = 1;
            prev = last;
            last = pick;
            last_key = key[static_cast<size_t>(pick)];
            for (int v : live) {
                if (!added[static_cast<size_t>(v)]) key[static_cast<size_t>(v)] += w[static_cast<size_t>(pick)][static_cast<size_t>(v)];
            }
        }
        best = std::min(best, last_key);
        // merge `last` into `prev`
        for (int v : live) {
            if (v == last || v == prev) continue;
            w[static_cast<size_t>(prev)][static_cast<size_t>(v)] += w[static_cast<size_t>(last)][static_cast<size_t>(v)];
            w[static_cast<size_t>(v)][static_cast<size_t>(prev)] = w[static_cast<size_t>(prev)][static_cast<size_t>(v)];
        }
        live.erase(std::find(live.begin(), live.end(), last));
    }
    return best;
}

// --- Dinic max-flow, used only to certify cut feasibility ----------------

class MaxFlow {
  public:
    explicit MaxFlow(int n) : adj_(static_cast<size_t>(n)) {}

    void add_undirected(int a, int b, Int cap) {
        Arc fwd{b, cap, static_cast<int>(adj_[static_cast<size_t>(b)].size())};
        Arc bwd{a, cap, static_cast<int>(adj_[static_cast<size_t>(a)].size())};
        adj_[static_cast<size_t>(a)].push_back(fwd);
        adj_[static_cast<size_t>(b)].push_back(bwd);
    }

    Int run(int s, int t) {
        Int flow = 0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            while (Int pushed = dfs(s, t, kInf)) flow += pushed;
        }
        return flow;
    }

  private:
    struct Arc {
        int to;
        Int cap;
        int rev;
    };

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : adj_[static_cast<size_t>(v)]) {
                if (a.cap > 0 && level_[static_cast<size_t>(a.to)] < 0) {
                    level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(v)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<size_t>(t)] >= 0;
    }

    Int dfs(int v, int t, Int limit) {
        if (v == t) return limit;
        for (size_t& i = iter_[static_cast<size_t>(v)]; i < adj_[static_cast<size_t>(v)].size(); ++i) {
            Arc& a = adj_[static_cast<size_t>(v)][i];
            if (a.cap <= 0 || level_[static_cast<size_t>(a.to)] != level_[static_cast<size_t>(v)] + 1) continue;
            Int pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                adj_[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<size_t> iter_;
};

// Minimum cut separating the contracted groups A and B (group labels:
// 0 = A, 1 = B, 2.. = free vertices).
Int min_cut_between(const CurveGraph& g, const std::vector<int>& group, int n_groups) {
    MaxFlow mf(n_groups);
    for (const EdgeRecord& e : g.edges()) {
        int ga = group[static_cast<size_t>(e.a)];
        int gb = group[static_cast<size_t>(e.b)];
        if (ga != gb) mf.add_undirected(ga, gb, e.mult);
    }
    return mf.run(0, 1);
}

// Bipartition encoding: components assigned to B, as a mask over
// {1, .., V-1} (bit i-1 <-> component i); component 0 is always in A.
// The canonical representative minimizes the B-membership vector
// (v[1], .., v[V-1]) lexicographically, i.e. prefers side A for low ids.

Decomposition decomposition_from_mask(const CurveGraph& g, std::uint32_t b_mask) {
    std::vector<int> a = {0};
    std::vector<int> b;
    for (int i = 1; i < g.num_components(); ++i) {
        if (b_mask & (1u << (i - 1))) b.push_back(i);
        else a.push_back(i);
    }
    return Decomposition{Subcurve{std::move(a)}, Subcurve{std::move(b)}};
}

// Reversed-bit key so that integer order equals lexicographic order of the
// membership vector.
std::uint64_t lex_key(std::uint32_t b_mask, int v) {
    std::uint64_t key = 0;
    for (int i = 1; i < v; ++i) {
        key <<= 1;
        key |= (b_mask >> (i - 1)) & 1u;
    }
    return key;
}

Int crossing_of_mask(const CurveGraph& g, std::uint32_t b_mask) {
    Int crossing = 0;
    for (const EdgeRecord& e : g.edges()) {
        bool a_in_b = e.a != 0 && (b_mask & (1u << (e.a - 1)));
        bool b_in_b = e.b != 0 && (b_mask & (1u << (e.b - 1)));
        if (a_in_b != b_in_b) crossing += e.mult;
    }
    return crossing;
}

struct Scan {
    Int m = kInf;
    std::vector<std::uint32_t> min_masks;  // sorted by lex_key
};

Scan enumerate_cuts(const CurveGraph& g) {
    const int v = g.num_components();
    Scan scan;
    const std::uint32_t limit = (1u << (v - 1));
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        Int c = crossing_of_mask(g, mask);
        if (c < scan.m) {
            scan.m = c;
            scan.min_masks.clear();
        }
        if (c == scan.m) scan.min_masks.push_back(mask);
    }
    std::sort(scan.min_masks.begin(), scan.min_masks.end(),
              [&](std::uint32_t x, std::uint32_t y) { return lex_key(x, v) < lex_key(y, v); });
    return scan;
}

// Greedy construction of the canonical witness: walk components 1..V-1 and
// keep each on side A whenever a cut of weight m separating the partial
// sides is still achievable (certified by max-flow), otherwise send it to
// B.  This is exactly the lexicographic minimum over min-cut bipartitions.
Decomposition lex_min_witness(const CurveGraph& g, Int m) {
    const int n = g.num_components();
    std::vector<int> side(static_cast<size_t>(n), -1);  // 0 = A, 1 = B, -1 = unassigned
    side[0] = 0;
    int b_count = 0;

    // Can component `next` still join side A while a cut of weight m stays
    // achievable (with B eventually nonempty)?
    auto feasible = [&](int next) {
        std::vector<int> group(static_cast<size_t>(n));
        int n_groups = 2;
        bool has_b = b_count > 0;
        for (int v = 0; v < n; ++v) {
            int s = v == next ? 0 : side[static_cast<size_t>(v)];
            if (s == 0) group[static_cast<size_t>(v)] = 0;
            else if (s == 1) group[static_cast<size_t>(v)] = 1;
            else group[static_cast<size_t>(v)] = -1;
        }
        std::vector<int> free_ids;
        for (int v = 0; v < n; ++v) {
            if (group[static_cast<size_t>(v)] == -1) free_ids.push_back(v);
        }
        for (int v : free_ids) group[static_cast<size_t>(v)] = n_groups++;
        if (has_b) return min_cut_between(g, group, n_groups) == m;
        // No B vertex committed yet: some later vertex must seed side B.
        for (int cand : free_ids) {
            std::vector<int> group2 = group;
            int old = group2[static_cast<size_t>(cand)];
            group2[static_cast<size_t>(cand)] = 1;
            for (int v = 0; v < n; ++v) {
                if (group2[static_cast<size_t>(v)] > old) group2[static_cast<size_t>(v)]--;
            }
            if (min_cut_between(g, group2, n_groups - 1) == m) return true;
        }
        return false;
    };

    for (int i = 1; i < n; ++i) {
        if (feasible(i)) {
            side[static_cast<size_t>(i)] = 0;
        } else {
            side[static_cast<size_t>(i)] = 1;
            ++b_count;
        }
    }
    std::uint32_t mask = 0;
    for (int i = 1; i < n; ++i) {
        if (side[static_cast<size_t>(i)] == 1) mask |= 1u << (i - 1);
    }
    return decomposition_from_mask(g, mask);
}

}  // namespace

ConnectivityReport connectivity_number(const CurveGraph& g, const ConnectivityOptions& opts) {
    g.require_valid(true, "connectivity_number");
    const int v = g.num_components();
    ConnectivityReport report;
    if (v == 1) {
        report.infinite = true;
        report.all_min_decompositions = std::vector<Decomposition>{};
        return report;
    }
    report.m = stoer_wagner(g);
    report.witness = lex_min_witness(g, report.m);
    if (v <= opts.enumeration_guard && v <= 31) {
        Scan scan = enumerate_cuts(g);
        std::vector<Decomposition> all;
        all.reserve(scan.min_masks.size());
        for (std::uint32_t mask : scan.min_masks) all.push_back(decomposition_from_mask(g, mask));
        report.all_min_decompositions = std::move(all);
    }
    return report;
}

bool is_m_connected(const CurveGraph& g, Int m, const ConnectivityOptions& opts) {
    g.require_valid(true, "is_m_connected");
    if (m < 1) throw CurveError("is_m_connected: m must be at least 1");
    return connectivity_number(g, opts).at_least(m);
}

ConnectivityReport min_cut_bruteforce(const CurveGraph& g, const ConnectivityOptions& opts) {
    g.require_valid(true, "min_cut_bruteforce");
    const int v = g.num_components();
    ConnectivityReport report;
    if (v == 1) {
        report.infinite = true;
        report.all_min_decompositions = std::vector<Decomposition>{};
        return report;
    }
    if (v > opts.enumeration_guard || v > 31) {
        throw GuardError("min_cut_bruteforce: " + std::to_string(v) +
                         " components exceed the enumeration guard of " +
                         std::to_string(opts.enumeration_guard));
    }
    Scan scan = enumerate_cuts(g);
    report.m = scan.m;
    std::vector<Decomposition> all;
    all.reserve(scan.min_masks.size());
    for (std::uint32_t mask : scan.min_masks) all.push_back(decomposition_from_mask(g, mask));
    report.witness = all.front();
    report.all_min_decompositions = std::move(all);
    return report;
}

TriBool honestly_hyperelliptic_status(const CurveGraph& g) {
    g.require_valid(false, "honestly_hyperelliptic_status");
    const int v = g.num_components();
    if (v >= 3) return TriBool::No;
    if (v == 2) {
        // A degree-2 cover with two components forces both to be rational.
        if (g.component(0).genus >= 1 || g.component(1).genus >= 1) return TriBool::No;
        return TriBool::Unknown;  // both rational: depends on the node positions
    }
    const ComponentRecord& c = g.component(0);
    if (c.has_flag(ComponentFlag::HonestlyHyperelliptic)) return TriBool::Yes;
    if (c.genus == 2) return TriBool::Yes;  // the canonical pencil is a finite double cover
    if (c.has_flag(ComponentFlag::BrillNoetherGeneral) && c.genus >= 3) return TriBool::No;
    return TriBool::Unknown;
}

CanonicalGeometry canonical_geometry(const CurveGraph& g, const ConnectivityOptions& opts) {
    g.require_valid(true, "canonical_geometry");
    if (g.pa() < 2) throw CurveError("canonical_geometry: requires pa >= 2");

    ConnectivityReport conn = connectivity_number(g, opts);
    CanonicalGeometry geo;
    geo.base_point_free = conn.at_least(2);
    TriBool hh = honestly_hyperelliptic_status(g);
    if (!conn.at_least(3) || hh == TriBool::Yes) geo.very_ample = TriBool::No;
    else if (hh == TriBool::No) geo.very_ample = TriBool::Yes;
    else geo.very_ample = TriBool::Unknown;

    const int v = g.num_components();
    if (v <= opts.enumeration_guard && v <= 31) {
        if (v > 1) {
            std::vector<std::pair<std::uint64_t, std::uint32_t>> ones;
            std::vector<std::pair<std::uint64_t, std::uint32_t>> twos;
            const std::uint32_t limit = (1u << (v - 1));
            for (std::uint32_t mask = 1; mask < limit; ++mask) {
                Int c = crossing_of_mask(g, mask);
                if (c == 1) ones.emplace_back(lex_key(mask, v), mask);
                if (c == 2) twos.emplace_back(lex_key(mask, v), mask);
            }
            std::sort(ones.begin(), ones.end());
            std::sort(twos.begin(), twos.end());
            for (auto& [key, mask] : ones) geo.base_point_witnesses.push_back(decomposition_from_mask(g, mask));
            for (auto& [key, mask] : twos) geo.separation_failures.push_back(decomposition_from_mask(g, mask));
        }
    } else {
        geo.witness_lists_complete = false;
        if (!conn.infinite && conn.m == 1) geo.base_point_witnesses.push_back(*conn.witness);
        if (!conn.infinite && conn.m == 2) geo.separation_failures.push_back(*conn.witness);
    }
    return geo;
}

}  // namespace curvecliff
