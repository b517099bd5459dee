#pragma once

#include <string>

#include "curvecliff/clifford.hpp"
#include "curvecliff/curve.hpp"

namespace curvecliff {

// Curve file: JSON document with exactly the top-level keys "components"
// (list of {"id", "genus", "flags"}) and "edges" (list of {"a", "b",
// "mult"}); unknown keys are rejected.  Canonical serialization sorts
// components by id and edges by (min, max) endpoint, merging duplicate
// pairs.  Parsing a canonical file and re-serializing is the identity.
CurveGraph parse_curve(const std::string& text);
std::string serialize_curve(const CurveGraph& g);

// Profile file: JSON mirroring SheafProfile ("kind", "invertible",
// "per_component_degree" as a list indexed by component id, "degree",
// "h0", "h1", "cliff").
SheafProfile parse_profile(const std::string& text);
std::string serialize_profile(const SheafProfile& p);

const char* to_string(ProfileKind k);

// FNV-1a 64-bit hex digest; used to stamp reports with their input.
std::string fnv1a_hex(const std::string& data);

}  // namespace curvecliff
