#pragma once

#include <optional>
#include <string>

#include "curvecliff/clifford.hpp"
#include "curvecliff/connectivity.hpp"
#include "curvecliff/curve.hpp"
#include "curvecliff/koszul.hpp"

namespace curvecliff {

inline constexpr const char* kToolName = "curvecliff";
inline constexpr const char* kToolVersion = "1.0.0";

struct AnalyzeOptions {
    bool betti = false;
    ConnectivityOptions connectivity;
    SearchOptions search;
};

struct AnalysisReport {
    std::string tool;
    std::string version;
    std::string input_hash;

    int num_components = 0;
    Int total_nodes = 0;
    Int pa = 0;
    std::vector<Int> genera;

    ValidationReport validation;
    std::optional<ConnectivityReport> connectivity;
    std::optional<CanonicalGeometry> geometry;
    std::optional<CliffordBounds> clifford;
    std::optional<BettiShape> betti;
    std::vector<std::string> warnings;
};

// Full pipeline: validation, connectivity, canonical geometry, Clifford
// bounds and (on request, when the hypotheses hold) the Betti grid.
// Throws CurveError on invalid input and lets ContradictionError /
// GuardError escape for the caller to map to exit codes.
AnalysisReport analyze(const CurveGraph& g, const AnalyzeOptions& opts = {});

std::string render_text(const AnalysisReport& r);

// Lossless structured rendering (stable key order, re-parseable JSON).
std::string render_structured(const AnalysisReport& r);

std::string render_text(const ProofTrace& t);
std::string render_structured(const Green2Result& r);

std::string render_text(const ProfileValidation& v);
std::string render_structured(const ProfileValidation& v);

// Canonical one-line rendering of decompositions / partitions, used in
// reports and certificates.
std::string render(const Decomposition& d);
std::string render(const SetPartition& p);

}  // namespace curvecliff
