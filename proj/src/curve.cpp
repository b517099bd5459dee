#include "curvecliff/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvecliff {

namespace {

std::vector<char> membership_mask(const CurveGraph& g, const Subcurve& b) {
    std::vector<char> mask(static_cast<size_t>(g.num_components()), 0);
    for (int v : b.members) mask[static_cast<size_t>(v)] = 1;
    return mask;
}

}  // namespace

CurveGraph::CurveGraph(std::vector<ComponentRecord> components, std::vector<EdgeRecord> edges)
    : components_(std::move(components)), edges_(std::move(edges)) {
    std::stable_sort(components_.begin(), components_.end(),
                     [](const ComponentRecord& x, const ComponentRecord& y) { return x.id < y.id; });
    for (EdgeRecord& e : edges_) {
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    std::stable_sort(edges_.begin(), edges_.end(), [](const EdgeRecord& x, const EdgeRecord& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });

    const int v = num_components();
    for (int i = 0; i < v; ++i) {
        if (components_[static_cast<size_t>(i)].id != i) {
            structural_errors_.push_back("component ids must be unique and contiguous from 0");
            break;
        }
    }
    for (const ComponentRecord& c : components_) {
        if (c.genus < 0) {
            structural_errors_.push_back("component " + std::to_string(c.id) + " has negative genus");
        }
    }
    bool endpoints_ok = true;
    for (const EdgeRecord& e : edges_) {
        std::ostringstream name;
        name << "edge {" << e.a << "," << e.b << "}";
        if (e.a < 0 || e.b < 0 || e.a >= v || e.b >= v) {
            structural_errors_.push_back(name.str() + " has an endpoint outside the component range");
            endpoints_ok = false;
            continue;
        }
        if (e.a == e.b) {
            structural_errors_.push_back(name.str() +
                                         " is a self-loop; a component's own nodes belong in its genus");
        }
        if (e.mult < 1) {
            structural_errors_.push_back(name.str() + " has non-positive multiplicity " +
                                         std::to_string(e.mult));
        }
    }
    structural_ok_ = structural_errors_.empty() && v > 0;

    total_mult_ = 0;
    for (const EdgeRecord& e : edges_) total_mult_ += e.mult;
    Int genus_sum = 0;
    for (const ComponentRecord& c : components_) genus_sum += c.genus;
    pa_ = genus_sum + total_mult_ - v + 1;

    // Connectivity of the underlying graph (only meaningful when endpoints
    // are in range).
    connected_ = false;
    if (v > 0 && endpoints_ok) {
        std::vector<char> seen(static_cast<size_t>(v), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const EdgeRecord& e : edges_) {
                int other = -1;
                if (e.a == cur) other = e.b;
                else if (e.b == cur) other = e.a;
                if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                    seen[static_cast<size_t>(other)] = 1;
                    ++reached;
                    stack.push_back(other);
                }
            }
        }
        connected_ = reached == v;
    }
}

Int CurveGraph::degree(int v) const {
    Int d = 0;
    for (const EdgeRecord& e : edges_) {
        if (e.a == v) d += e.mult;
        if (e.b == v) d += e.mult;
    }
    return d;
}

void CurveGraph::require_valid(bool require_connected, const char* op) const {
    if (!structural_ok_) {
        std::string msg = std::string(op) + ": structurally invalid curve";
        if (!structural_errors_.empty()) msg += " (" + structural_errors_.front() + ")";
        throw CurveError(msg);
    }
    if (require_connected && !connected_) {
        throw CurveError(std::string(op) + ": requires a connected curve");
    }
}

Subcurve make_subcurve(const CurveGraph& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw CurveError("subcurve: must be nonempty");
    if (members.front() < 0 || members.back() >= g.num_components()) {
        throw CurveError("subcurve: member id outside the component range");
    }
    return Subcurve{std::move(members)};
}

Subcurve complement(const CurveGraph& g, const Subcurve& b) {
    std::vector<char> in = membership_mask(g, b);
    std::vector<int> rest;
    for (int v = 0; v < g.num_components(); ++v) {
        if (!in[static_cast<size_t>(v)]) rest.push_back(v);
    }
    if (rest.empty()) throw CurveError("complement: subcurve is the whole curve");
    return Subcurve{std::move(rest)};
}

bool subcurve_connected(const CurveGraph& g, const Subcurve& b) {
    if (b.members.empty()) return false;
    std::vector<char> in = membership_mask(g, b);
    std::vector<char> seen(in.size(), 0);
    std::vector<int> stack = {b.members.front()};
    seen[static_cast<size_t>(b.members.front())] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const EdgeRecord& e : g.edges()) {
            int other = -1;
            if (e.a == cur) other = e.b;
            else if (e.b == cur) other = e.a;
            if (other >= 0 && in[static_cast<size_t>(other)] && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = 1;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    return reached == b.members.size();
}

Int internal_edge_multiplicity(const CurveGraph& g, const Subcurve& b) {
    std::vector<char> in = membership_mask(g, b);
    Int total = 0;
    for (const EdgeRecord& e : g.edges()) {
        if (in[static_cast<size_t>(e.a)] && in[static_cast<size_t>(e.b)]) total += e.mult;
    }
    return total;
}

Decomposition make_decomposition(const CurveGraph& g, const Subcurve& a) {
    if (a.members.empty()) throw CurveError("decomposition: side A is empty");
    if (static_cast<int>(a.members.size()) == g.num_components()) {
        throw CurveError("decomposition: side A is the whole curve, side B is empty");
    }
    return Decomposition{a, complement(g, a)};
}

SetPartition make_set_partition(const CurveGraph& g, std::vector<Subcurve> parts) {
    if (parts.size() < 2) throw CurveError("set partition: needs at least two parts");
    std::vector<char> seen(static_cast<size_t>(g.num_components()), 0);
    Int covered = 0;
    for (const Subcurve& p : parts) {
        if (p.members.empty()) throw CurveError("set partition: empty part");
        for (int v : p.members) {
            if (v < 0 || v >= g.num_components()) {
                throw CurveError("set partition: member id outside the component range");
            }
            if (seen[static_cast<size_t>(v)]) {
                throw CurveError("set partition: component " + std::to_string(v) +
                                 " appears in two parts");
            }
            seen[static_cast<size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != g.num_components()) {
        throw CurveError("set partition: parts do not cover every component");
    }
    Int internal = 0;
    for (const Subcurve& p : parts) internal += internal_edge_multiplicity(g, p);
    return SetPartition{std::move(parts), g.total_edge_multiplicity() - internal};
}

ValidationReport validate_curve(const CurveGraph& g) {
    ValidationReport r;
    r.errors = g.structural_errors();
    if (g.num_components() == 0) r.errors.push_back("curve has no components");
    r.connected = g.connected();
    r.pa = g.pa();

    for (const ComponentRecord& c : g.components()) {
        if (c.genus == 0 && c.has_flag(ComponentFlag::HonestlyHyperelliptic)) {
            r.errors.push_back("component " + std::to_string(c.id) +
                               ": genus 0 contradicts the HonestlyHyperelliptic flag");
        }
    }
    if (g.num_components() >= 3) {
        for (const ComponentRecord& c : g.components()) {
            if (c.has_flag(ComponentFlag::HonestlyHyperelliptic)) {
                r.warnings.push_back(
                    "HonestlyHyperelliptic flag on component " + std::to_string(c.id) +
                    " is vacuous: a degree-2 cover admits at most two components");
                break;
            }
        }
    }
    if (!r.connected && g.structurally_valid()) {
        r.warnings.push_back("curve is disconnected; connectivity and Clifford analyses are unavailable");
    }
    r.valid = r.errors.empty();
    return r;
}

Int arithmetic_genus(const CurveGraph& g, const Subcurve& b) {
    g.require_valid(false, "arithmetic_genus");
    if (b.members.empty()) throw CurveError("arithmetic_genus: empty subcurve");
    Int genus_sum = 0;
    for (int v : b.members) genus_sum += g.component(v).genus;
    return genus_sum + internal_edge_multiplicity(g, b) - static_cast<Int>(b.members.size()) + 1;
}

Int intersection_product(const CurveGraph& g, const Decomposition& d) {
    g.require_valid(false, "intersection_product");
    if (d.part_a.members.empty() || d.part_b.members.empty()) {
        throw CurveError("intersection_product: improper decomposition");
    }
    if (static_cast<int>(d.part_a.members.size() + d.part_b.members.size()) != g.num_components()) {
        throw CurveError("intersection_product: parts do not cover the curve");
    }
    std::vector<char> in_a = membership_mask(g, d.part_a);
    for (int v : d.part_b.members) {
        if (in_a[static_cast<size_t>(v)]) {
            throw CurveError("intersection_product: sides overlap at component " + std::to_string(v));
        }
    }
    Int crossing = 0;
    for (const EdgeRecord& e : g.edges()) {
        if (in_a[static_cast<size_t>(e.a)] != in_a[static_cast<size_t>(e.b)]) crossing += e.mult;
    }
    return crossing;
}

Int canonical_degree_on(const CurveGraph& g, const Subcurve& b) {
    g.require_valid(true, "canonical_degree_on");
    if (b.members.empty()) throw CurveError("canonical_degree_on: empty subcurve");
    if (static_cast<int>(b.members.size()) == g.num_components()) return 2 * g.pa() - 2;
    std::vector<char> in = membership_mask(g, b);
    Int outgoing = 0;
    for (const EdgeRecord& e : g.edges()) {
        if (in[static_cast<size_t>(e.a)] != in[static_cast<size_t>(e.b)]) outgoing += e.mult;
    }
    return 2 * arithmetic_genus(g, b) - 2 + outgoing;
}

}  // namespace curvecliff
