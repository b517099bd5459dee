#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecliff/errors.hpp"

namespace curvecliff {

using Int = std::int64_t;

// Assertions about an irreducible component that cannot be read off the
// dual graph; they are provided by the user and only checked for
// internal consistency.
enum class ComponentFlag : unsigned {
    Smooth = 1u,
    BrillNoetherGeneral = 2u,
    HonestlyHyperelliptic = 4u,
};

struct ComponentRecord {
    int id = 0;
    Int genus = 0;  // arithmetic genus of the component, own singularities included
    unsigned flags = 0;

    bool has_flag(ComponentFlag f) const { return (flags & static_cast<unsigned>(f)) != 0; }
    void set_flag(ComponentFlag f) { flags |= static_cast<unsigned>(f); }
};

// One bundle of `mult` distinct transverse nodes joining components a and b.
struct EdgeRecord {
    int a = 0;
    int b = 0;
    Int mult = 1;
};

// Genus-weighted dual multigraph of a reduced nodal curve: one vertex per
// irreducible component, one edge per node joining two distinct components.
// Construction normalizes order (endpoints, edge list, component list) but
// never repairs structural violations; validate_curve reports them.
class CurveGraph {
  public:
    CurveGraph() = default;
    CurveGraph(std::vector<ComponentRecord> components, std::vector<EdgeRecord> edges);

    const std::vector<ComponentRecord>& components() const { return components_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    int num_components() const { return static_cast<int>(components_.size()); }
    Int total_edge_multiplicity() const { return total_mult_; }

    // Sigma genus + E - V + 1.  Defined for any structurally sound graph,
    // connected or not (Euler-characteristic additivity).
    Int pa() const { return pa_; }

    bool connected() const { return connected_; }

    // ids contiguous from 0, no self-loops, positive multiplicities,
    // endpoints in range.
    bool structurally_valid() const { return structural_ok_; }
    const std::vector<std::string>& structural_errors() const { return structural_errors_; }

    // Total multiplicity of edges incident to component v.
    Int degree(int v) const;

    const ComponentRecord& component(int id) const { return components_.at(static_cast<size_t>(id)); }

    // Throws CurveError unless the graph is structurally valid (and, when
    // require_connected, connected).  Every analysis operation goes
    // through this gate.
    void require_valid(bool require_connected, const char* op) const;

  private:
    std::vector<ComponentRecord> components_;
    std::vector<EdgeRecord> edges_;
    Int total_mult_ = 0;
    Int pa_ = 0;
    bool connected_ = false;
    bool structural_ok_ = false;
    std::vector<std::string> structural_errors_;
};

// Nonempty subset of component ids of some parent graph.  Operations take
// the parent explicitly; members are kept sorted and duplicate-free.
struct Subcurve {
    std::vector<int> members;
};

Subcurve make_subcurve(const CurveGraph& g, std::vector<int> members);
Subcurve complement(const CurveGraph& g, const Subcurve& b);
bool subcurve_connected(const CurveGraph& g, const Subcurve& b);

// Total multiplicity of edges with both endpoints in b.
Int internal_edge_multiplicity(const CurveGraph& g, const Subcurve& b);

// C = A u B with A, B disjoint nonempty covering all components.
struct Decomposition {
    Subcurve part_a;
    Subcurve part_b;
};

// Builds the decomposition (a, complement of a); throws if improper.
Decomposition make_decomposition(const CurveGraph& g, const Subcurve& a);

// Partition of the component set into k >= 2 subcurves; crossing_edges is
// the total multiplicity of edges with endpoints in distinct parts.
struct SetPartition {
    std::vector<Subcurve> parts;
    Int crossing_edges = 0;
};

SetPartition make_set_partition(const CurveGraph& g, std::vector<Subcurve> parts);

struct ValidationReport {
    bool valid = false;
    bool connected = false;
    Int pa = 0;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

ValidationReport validate_curve(const CurveGraph& g);

// Sigma_{v in b} genus(v) + E(b) - |b| + 1.
Int arithmetic_genus(const CurveGraph& g, const Subcurve& b);

// A.B = total multiplicity of edges crossing the bipartition.
Int intersection_product(const CurveGraph& g, const Decomposition& d);

// deg of the canonical sheaf restricted to b: 2 pa(b) - 2 + (edges leaving b).
Int canonical_degree_on(const CurveGraph& g, const Subcurve& b);

}  // namespace curvecliff
