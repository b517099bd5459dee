// Acceptance suite: every check is exact integer equality (tolerance 0).
// Prints one pass/fail line per criterion and exits nonzero on any failure.

#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "curvecliff/analysis.hpp"
#include "curvecliff/generators.hpp"
#include "curvecliff/io.hpp"
#include "oracles.hpp"

using namespace curvecliff;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = true;
    std::string error;
    try {
        body(detail);
    } catch (const std::exception& e) {
        ok = false;
        error = e.what();
    }
    if (!detail.str().empty() && detail.str().find("FAIL") != std::string::npos) ok = false;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!ok && !error.empty()) std::cout << " [" << error << "]";
    std::cout << "\n";
    if (!detail.str().empty()) std::cout << detail.str();
    if (!ok) ++g_failures;
}

void require(std::ostringstream& detail, bool cond, const std::string& what) {
    if (!cond) detail << "  FAIL: " << what << "\n";
}

CurveGraph random_small(std::uint64_t seed, int max_v, Int genus_min, Int genus_max) {
    int n = 2 + static_cast<int>(seed % static_cast<std::uint64_t>(max_v - 1));
    Int budget = n - 1 + static_cast<Int>((seed * 7 + 3) % 6);
    return gen_random(seed, n, budget, genus_min, genus_max);
}

std::vector<std::pair<CurveGraph, SheafProfile>> g_profile_corpus;

void emit(const CurveGraph& g, const SheafProfile& p) { g_profile_corpus.emplace_back(g, p); }

SetPartition singletons(const CurveGraph& g) {
    std::vector<Subcurve> parts;
    for (int v = 0; v < g.num_components(); ++v) parts.push_back(make_subcurve(g, {v}));
    return make_set_partition(g, std::move(parts));
}

}  // namespace

int main() {
    criterion(1, "chain sharpness: best split bound meets the cluster-count lower bound with equality",
              [](std::ostringstream& d) {
                  for (int n = 2; n <= 8; ++n) {
                      CurveGraph g = gen_chain(std::vector<Int>(static_cast<size_t>(n), 1)).graph;
                      Int lb = lower_bound(g);
                      std::optional<SplitBound> sb = best_split_bound(g);
                      require(d, sb.has_value(), "split bound exists for chain " + std::to_string(n));
                      if (!sb) continue;
                      require(d, sb->cliff == -n + 1,
                              "chain " + std::to_string(n) + " split bound is -n + 1");
                      require(d, lb == -n + 1, "chain " + std::to_string(n) + " lower bound is -n + 1");
                      CliffordBounds b = clifford_bounds(g);
                      require(d, b.exact && *b.exact == -n + 1,
                              "chain " + std::to_string(n) + " certifies the exact value");
                      emit(g, split_cluster_profile(g, sb->partition));
                  }
              });

    criterion(2, "six-component example: m, split cluster, degree, genus and bounds",
              [](std::ostringstream& d) {
                  CurveGraph g = gen_threecon({2, 2, 2, 2, 2, 2});
                  ConnectivityReport conn = connectivity_number(g);
                  require(d, !conn.infinite && conn.m == 3, "m = 3");
                  require(d, is_m_connected(g, 3) && !is_m_connected(g, 4), "3- but not 4-connected");
                  require(d, g.pa() == 16, "pa = 16");

                  SetPartition parts = singletons(g);
                  require(d, parts.crossing_edges == 9, "the split cluster has degree 9");
                  SheafProfile p = split_cluster_profile(g, parts);
                  require(d, p.cliff == -1, "singleton split cluster index is -1");
                  require(d, p.degree == 2 * 16 - 2 - 9, "profile degree is 21");
                  emit(g, p);

                  require(d, theorem_upper_bound(g) == 1, "connectivity-degree upper bound is 1");
                  CliffordBounds b = clifford_bounds(g);
                  require(d, b.lower == -5 && b.upper && *b.upper == -1, "bounds are [-5, -1]");
              });

    criterion(3, "two-component certificates with recomputed thresholds and named rejections",
              [](std::ostringstream& d) {
                  Green2Result r = green2_certificate(9, 1, 4);
                  require(d, r.trace.pa == 13, "(9,1,4) pa = 13");
                  require(d, r.trace.cliff == 2, "(9,1,4) cliff = 2");
                  require(d, r.trace.threshold_comp1_piece == 10 && r.trace.threshold_comp0_piece == 9,
                          "(9,1,4) thresholds are (10, 9)");
                  require(d, r.trace.pass, "(9,1,4) verdict pass");
                  for (Int p = 0; p <= r.trace.pa - 2; ++p) {
                      bool zero = r.shape.value(p, 1) == BettiValue::Zero;
                      require(d, zero == (p >= 10 || p == 0),
                              "(9,1,4) K_{p,1} zero exactly at p >= 10 (p=" + std::to_string(p) + ")");
                  }

                  bool rejected_low = false, rejected_high = false;
                  try {
                      green2_certificate(9, 1, 3);
                  } catch (const CurveError&) {
                      rejected_low = true;
                  }
                  try {
                      green2_certificate(9, 1, 6);
                  } catch (const CurveError&) {
                      rejected_high = true;
                  }
                  require(d, rejected_low && rejected_high, "(9,1,3) and (9,1,6) are rejected by name");

                  Green2Result s = green2_certificate(7, 1, 4);
                  require(d, s.trace.pa == 11 && s.trace.cliff == 2, "(7,1,4) pa = 11, cliff = 2");
                  require(d, s.trace.threshold_comp1_piece == 8 && s.trace.threshold_comp0_piece == 8,
                          "(7,1,4) thresholds are (8, 8)");
                  require(d, s.trace.vanishing_from == 8 && s.trace.pass, "(7,1,4) vanishing at p >= 8");

                  Green2Result t = green2_certificate(11, 2, 5);
                  require(d, t.trace.pa == 17 && t.trace.cliff == 3, "(11,2,5) pa = 17, cliff = 3");
                  require(d, t.trace.threshold_comp1_piece == 13 && t.trace.threshold_comp0_piece == 12,
                          "(11,2,5) thresholds are (13, 12)");
                  require(d, t.trace.vanishing_from == 13 && t.trace.pass, "(11,2,5) vanishing at p >= 13");
              });

    criterion(4, "witness and split profiles agree at minimum cuts on 100 seeded curves",
              [](std::ostringstream& d) {
                  int checked = 0;
                  for (std::uint64_t seed = 0; seed < 100; ++seed) {
                      CurveGraph g = random_small(seed, 7, 1, 3);  // V <= 8, genera >= 1
                      ConnectivityReport conn = connectivity_number(g);
                      require(d, conn.witness.has_value(), "witness exists");
                      if (!conn.witness) continue;
                      Int pa_a = arithmetic_genus(g, conn.witness->part_a);
                      Int pa_b = arithmetic_genus(g, conn.witness->part_b);
                      require(d, pa_a >= 1 && pa_b >= 1, "minimum cut splits into positive-genus sides");
                      SheafProfile w = witness_invertible_profile(g, *conn.witness);
                      SheafProfile s = split_cluster_profile(
                          g, make_set_partition(g, {conn.witness->part_a, conn.witness->part_b}));
                      require(d, w.cliff == conn.m - 2, "witness profile index is m - 2");
                      require(d, s.cliff == conn.m - 2, "split profile index is m - 2");
                      emit(g, w);
                      emit(g, s);
                      ++checked;
                  }
                  require(d, checked == 100, "checked 100 curves");
              });

    criterion(5, "minimum cut equals exhaustive enumeration on 200 seeded curves",
              [](std::ostringstream& d) {
                  for (std::uint64_t seed = 0; seed < 200; ++seed) {
                      CurveGraph g = random_small(seed, 9, 1, 3);  // V <= 10
                      ConnectivityReport fast = connectivity_number(g);
                      ConnectivityReport slow = min_cut_bruteforce(g);
                      require(d, fast.m == slow.m, "m agrees on seed " + std::to_string(seed));
                      require(d,
                              fast.witness && slow.witness &&
                                  fast.witness->part_b.members == slow.witness->part_b.members,
                              "witness agrees on seed " + std::to_string(seed));
                      require(d, intersection_product(g, *fast.witness) == fast.m,
                              "witness achieves m on seed " + std::to_string(seed));
                  }
              });

    criterion(6, "genus formula holds exactly on 1000 random decompositions",
              [](std::ostringstream& d) {
                  int checked = 0;
                  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
                      CurveGraph g = random_small(seed, 9, 0, 3);
                      int n = g.num_components();
                      std::uint32_t span = (1u << (n - 1)) - 1;
                      std::uint32_t mask = static_cast<std::uint32_t>((seed * 2654435761u) % span) + 1;
                      std::vector<int> b;
                      for (int i = 1; i < n; ++i) {
                          if (mask & (1u << (i - 1))) b.push_back(i);
                      }
                      if (b.empty()) continue;
                      Decomposition dec = make_decomposition(g, complement(g, make_subcurve(g, b)));
                      Int lhs = g.pa();
                      Int rhs = arithmetic_genus(g, dec.part_a) + arithmetic_genus(g, dec.part_b) +
                                intersection_product(g, dec) - 1;
                      require(d, lhs == rhs, "decomposition formula on seed " + std::to_string(seed));
                      ++checked;
                  }
              });

    criterion(7, "profile invariants across the corpus; 50 single-fault mutants rejected by name",
              [](std::ostringstream& d) {
                  require(d, g_profile_corpus.size() >= 100, "profile corpus accumulated");
                  for (const auto& [g, p] : g_profile_corpus) {
                      ProfileValidation v = validate_sheaf_profile(g, p);
                      require(d, v.valid, "emitted profile is valid");
                      require(d, p.h0 - p.h1 == p.degree + 1 - g.pa(), "emitted profile satisfies the index theorem");
                  }

                  int mutants = 0;
                  auto expect_single = [&](const CurveGraph& g, const SheafProfile& p,
                                           const std::string& tag) {
                      ProfileValidation v = validate_sheaf_profile(g, p);
                      require(d, !v.valid, "mutant " + std::to_string(mutants) + " rejected");
                      require(d, v.violations.size() == 1 && v.violations.front().constraint == tag,
                              "mutant " + std::to_string(mutants) + " names " + tag);
                      ++mutants;
                  };

                  for (std::uint64_t seed = 0; mutants < 50; ++seed) {
                      CurveGraph g = random_small(seed, 6, 1, 3);
                      Int pa = g.pa();
                      // window fault: shift one unit below zero, keep the sum
                      {
                          SheafProfile p;
                          p.kind = ProfileKind::UserSupplied;
                          p.invertible = true;
                          p.per_component_degree.assign(static_cast<size_t>(g.num_components()), 0);
                          p.per_component_degree[0] = -1;
                          p.per_component_degree[1] = 1;
                          p.degree = 0;
                          p.h0 = 1;
                          p.h1 = pa;
                          p.cliff = 0;
                          expect_single(g, p, "degree-window");
                      }
                      // Riemann-Roch fault with a consistent index field
                      {
                          SheafProfile p = split_cluster_profile(g, singletons(g));
                          p.h0 += 1;
                          p.cliff -= 2;
                          expect_single(g, p, "riemann-roch");
                      }
                      // index-definition fault
                      {
                          SheafProfile p = split_cluster_profile(g, singletons(g));
                          p.cliff += 1;
                          expect_single(g, p, "clifford-definition");
                      }
                      // invertible profile above the h0 ceiling (otherwise consistent)
                      if (pa >= 4) {
                          SheafProfile p;
                          p.kind = ProfileKind::UserSupplied;
                          p.invertible = true;
                          p.per_component_degree.assign(static_cast<size_t>(g.num_components()), 0);
                          Int left = 6;
                          for (int v = 0; v < g.num_components() && left > 0; ++v) {
                              Int cap = canonical_degree_on(g, make_subcurve(g, {v}));
                              Int take = std::min(cap, left);
                              p.per_component_degree[static_cast<size_t>(v)] = take;
                              left -= take;
                          }
                          if (left == 0) {
                              p.degree = 6;
                              p.h0 = 5;
                              p.h1 = p.h0 - (p.degree + 1 - pa);
                              p.cliff = p.degree - 2 * p.h0 + 2;
                              expect_single(g, p, "invertible-clifford-nonnegative");
                          }
                      }
                      // total degree escapes the restriction sum envelope
                      {
                          SheafProfile p = split_cluster_profile(g, singletons(g));
                          if (p.degree ==
                              std::accumulate(p.per_component_degree.begin(),
                                              p.per_component_degree.end(), Int{0}) +
                                  g.total_edge_multiplicity()) {
                              p.degree += 1;
                              p.h0 += 1;
                              p.cliff -= 1;
                              expect_single(g, p, "restriction-degree-sum");
                          }
                      }
                      // negative cohomology with everything else consistent
                      {
                          SheafProfile p;
                          p.kind = ProfileKind::UserSupplied;
                          p.invertible = false;
                          p.per_component_degree.assign(static_cast<size_t>(g.num_components()), 0);
                          Int left = pa - 2;
                          for (int v = 0; v < g.num_components() && left > 0; ++v) {
                              Int cap = canonical_degree_on(g, make_subcurve(g, {v}));
                              Int take = std::min(cap, left);
                              p.per_component_degree[static_cast<size_t>(v)] = take;
                              left -= take;
                          }
                          if (left == 0) {
                              p.degree = pa - 2;
                              p.h0 = -1;
                              p.h1 = 0;
                              p.cliff = p.degree - 2 * p.h0 + 2;
                              expect_single(g, p, "cohomology-nonnegative");
                          }
                      }
                  }
                  d << "  mutants checked: " << mutants << "\n";
              });

    criterion(8, "grid consistency on the emitted corpus; 20 adversarial overlaps all detected",
              [](std::ostringstream& d) {
                  // valid corpus: worked examples plus a certified family sweep
                  std::vector<BettiShape> corpus;
                  {
                      CurveGraph tc = gen_threecon({2, 2, 2, 2, 2, 2});
                      AnalyzeOptions opts;
                      opts.betti = true;
                      AnalysisReport r = analyze(tc, opts);
                      require(d, r.betti.has_value(), "three-connected grid emitted");
                      if (r.betti) corpus.push_back(*r.betti);
                  }
                  for (auto [g1, g2, m] : std::vector<std::array<Int, 3>>{
                           {9, 1, 4}, {7, 1, 4}, {11, 2, 5}, {9, 2, 5}, {13, 3, 4}}) {
                      corpus.push_back(green2_certificate(g1, g2, m).shape);
                  }
                  for (const BettiShape& s : corpus) {
                      try {
                          check_shape_consistency(s);
                      } catch (const ContradictionError& e) {
                          require(d, false, std::string("valid grid flagged: ") + e.what());
                      }
                      Int g = s.genus();
                      for (Int p = 0; p <= g - 2; ++p) {
                          require(d, s.value(p, 1) == s.value(g - 2 - p, 2), "duality symmetry");
                          require(d,
                                  s.value(p, 3) ==
                                      (p == g - 2 ? BettiValue::Nonzero : BettiValue::Zero),
                                  "q=3 single corner");
                      }
                  }

                  int fired = 0;
                  for (int i = 0; i < 20; ++i) {
                      Int g = 8 + i;
                      Int nonzero_until = g / 2;
                      KoszulHypotheses h;
                      h.three_connected = true;
                      h.four_connected = true;
                      h.not_honestly_hyperelliptic = TriBool::Yes;
                      h.no_rational_components = true;
                      h.m_finite = true;
                      h.m = 4;
                      h.cliff_upper = g - nonzero_until - 2;  // nonvanishing through nonzero_until
                      BettiShape s = apply_nonvanishing(base_shape(g, h), h);
                      try {
                          // mislabeled index: zeros would start inside the nonzero range
                          apply_green_vanishing(std::move(s), *h.cliff_upper + 1, false);
                      } catch (const ContradictionError&) {
                          ++fired;
                      }
                  }
                  require(d, fired == 20, "all 20 adversarial overlaps detected");
              });

    criterion(9, "connectivity nonvanishing on the six-component example: K_{p,1} != 0 for p <= pa - m",
              [](std::ostringstream& d) {
                  CurveGraph tc = gen_threecon({2, 2, 2, 2, 2, 2});
                  AnalyzeOptions opts;
                  opts.betti = true;
                  AnalysisReport r = analyze(tc, opts);
                  require(d, r.betti.has_value(), "grid emitted");
                  if (!r.betti) return;
                  const BettiShape& s = *r.betti;
                  for (Int p = 1; p <= 13; ++p) {
                      require(d, s.value(p, 1) == BettiValue::Nonzero,
                              "K_{" + std::to_string(p) + ",1} nonzero");
                  }
                  // p = 0 carries the structural zero of normal generation
                  require(d, s.value(0, 1) == BettiValue::Zero, "K_{0,1} = 0");
                  require(d, s.value(14, 1) == BettiValue::Zero, "K_{14,1} = 0 by duality");
              });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
