#include "curvecliff/generators.hpp"

#include <random>

namespace curvecliff {

namespace {

// Bounded draw by modulo over the raw 64-bit stream; the slight bias is
// irrelevant for test fuel and, unlike the standard distributions, the
// result is identical on every platform.
Int draw(std::mt19937_64& eng, Int lo, Int hi) {
    return lo + static_cast<Int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

GeneratedCurve gen_chain(const std::vector<Int>& genera) {
    const int n = static_cast<int>(genera.size());
    if (n < 2) throw CurveError("gen_chain: needs at least two components");
    GeneratedCurve out;
    std::vector<ComponentRecord> comps;
    std::vector<EdgeRecord> edges;
    for (int i = 0; i < n; ++i) {
        if (genera[static_cast<size_t>(i)] < 0) {
            throw CurveError("gen_chain: negative genus at position " + std::to_string(i));
        }
        if (genera[static_cast<size_t>(i)] == 0) {
            out.warnings.push_back("component " + std::to_string(i) +
                                   " has genus 0; the chain family assumes positive genus");
        }
        comps.push_back({i, genera[static_cast<size_t>(i)], 0});
        if (i > 0) edges.push_back({i - 1, i, 1});
    }
    out.graph = CurveGraph(std::move(comps), std::move(edges));
    return out;
}

CurveGraph gen_threecon(const std::vector<Int>& genera) {
    if (genera.size() != 6) {
        throw CurveError("gen_threecon: needs exactly six genera, got " +
                         std::to_string(genera.size()));
    }
    std::vector<ComponentRecord> comps;
    for (int i = 0; i < 6; ++i) {
        if (genera[static_cast<size_t>(i)] < 2) {
            throw CurveError("gen_threecon: component " + std::to_string(i) +
                             " needs genus >= 2, got " + std::to_string(genera[static_cast<size_t>(i)]));
        }
        comps.push_back({i, genera[static_cast<size_t>(i)], 0});
    }
    std::vector<EdgeRecord> edges = {{0, 1, 1}, {0, 4, 1}, {0, 5, 1}, {1, 2, 1}, {1, 3, 1},
                                     {2, 3, 1}, {2, 5, 1}, {3, 4, 1}, {4, 5, 1}};
    return CurveGraph(std::move(comps), std::move(edges));
}

CurveGraph gen_two_component(Int g1, Int g2, Int m, bool general) {
    if (g1 < 0 || g2 < 0) throw CurveError("gen_two_component: genera must be nonnegative");
    if (m < 1) throw CurveError("gen_two_component: m must be at least 1");
    ComponentRecord c0{0, g1, 0};
    if (general) c0.set_flag(ComponentFlag::BrillNoetherGeneral);
    ComponentRecord c1{1, g2, 0};
    return CurveGraph({c0, c1}, {{0, 1, m}});
}

CurveGraph gen_random(std::uint64_t seed, int n_components, Int edge_budget,
                      Int genus_min, Int genus_max) {
    if (n_components < 1) throw CurveError("gen_random: needs at least one component");
    if (genus_min < 0 || genus_min > genus_max) throw CurveError("gen_random: bad genus range");
    if (edge_budget < n_components - 1) {
        throw CurveError("gen_random: edge budget " + std::to_string(edge_budget) +
                         " cannot connect " + std::to_string(n_components) + " components");
    }
    if (n_components == 1 && edge_budget > 0) {
        throw CurveError("gen_random: cannot place edges on a single component");
    }

    std::mt19937_64 eng(seed);
    std::vector<ComponentRecord> comps;
    for (int i = 0; i < n_components; ++i) {
        comps.push_back({i, draw(eng, genus_min, genus_max), 0});
    }
    std::vector<EdgeRecord> edges;
    for (int i = 1; i < n_components; ++i) {
        edges.push_back({static_cast<int>(draw(eng, 0, i - 1)), i, 1});
    }
    for (Int extra = edge_budget - (n_components - 1); extra > 0; --extra) {
        int a = static_cast<int>(draw(eng, 0, n_components - 1));
        int b = static_cast<int>(draw(eng, 0, n_components - 1));
        while (b == a) b = static_cast<int>(draw(eng, 0, n_components - 1));
        edges.push_back({a, b, 1});
    }
    return CurveGraph(std::move(comps), std::move(edges));
}

}  // namespace curvecliff
