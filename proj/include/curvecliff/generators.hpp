#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvecliff/curve.hpp"

namespace curvecliff {

struct GeneratedCurve {
    CurveGraph graph;
    std::vector<std::string> warnings;
};

// Path of N >= 2 components with unit multiplicities.  Genus-0 entries are
// allowed but flagged: the chain family assumes positive genus.
GeneratedCurve gen_chain(const std::vector<Int>& genera);

// The fixed 3-regular graph on six components with edge set
// {01, 04, 05, 12, 13, 23, 25, 34, 45}; every genus must be >= 2.
CurveGraph gen_threecon(const std::vector<Int>& genera);

// Two components joined by one edge of multiplicity m; component 0 carries
// the BrillNoetherGeneral flag iff general.
CurveGraph gen_two_component(Int g1, Int g2, Int m, bool general);

// Seed-deterministic connected multigraph: genera first, then a random
// spanning tree, then the remaining edge budget as random pairs.
// PRNG: std::mt19937_64 seeded directly, bounded draws by modulo (v1);
// replays are byte-identical across platforms.
CurveGraph gen_random(std::uint64_t seed, int n_components, Int edge_budget,
                      Int genus_min, Int genus_max);

}  // namespace curvecliff
