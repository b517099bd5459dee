#include "curvecliff/io.hpp"

#include <cstdint>
#include <map>

#include "json.hpp"

namespace curvecliff {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

const std::pair<ComponentFlag, const char*> kFlagNames[] = {
    {ComponentFlag::Smooth, "Smooth"},
    {ComponentFlag::BrillNoetherGeneral, "BrillNoetherGeneral"},
    {ComponentFlag::HonestlyHyperelliptic, "HonestlyHyperelliptic"},
};

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // message carries line and column
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) known = true;
        }
        if (!known) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
    }
}

Int require_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(where + ": key \"" + std::string(key) + "\" must be an integer");
    return v.get<Int>();
}

int require_id(const json& obj, const char* key, const std::string& where) {
    Int v = require_int(obj, key, where);
    if (v < 0 || v > 1000000) {
        throw ParseError(where + ": key \"" + std::string(key) + "\" is outside the component-id range");
    }
    return static_cast<int>(v);
}

}  // namespace

const char* to_string(ProfileKind k) {
    switch (k) {
        case ProfileKind::SplitCluster: return "SplitCluster";
        case ProfileKind::WitnessInvertible: return "WitnessInvertible";
        default: return "UserSupplied";
    }
}

CurveGraph parse_curve(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("curve file: top level must be an object");
    reject_unknown_keys(doc, {"components", "edges"}, "curve file");
    if (!doc.contains("components") || !doc["components"].is_array()) {
        throw ParseError("curve file: missing \"components\" list");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("curve file: missing \"edges\" list");
    }

    std::vector<ComponentRecord> comps;
    size_t idx = 0;
    for (const json& c : doc["components"]) {
        std::string where = "components[" + std::to_string(idx++) + "]";
        if (!c.is_object()) throw ParseError(where + ": must be an object");
        reject_unknown_keys(c, {"id", "genus", "flags"}, where);
        ComponentRecord rec;
        rec.id = require_id(c, "id", where);
        rec.genus = require_int(c, "genus", where);
        if (!c.contains("flags") || !c["flags"].is_array()) {
            throw ParseError(where + ": missing \"flags\" list");
        }
        for (const json& f : c["flags"]) {
            if (!f.is_string()) throw ParseError(where + ": flags must be strings");
            bool known = false;
            for (auto& [flag, name] : kFlagNames) {
                if (f.get<std::string>() == name) {
                    rec.set_flag(flag);
                    known = true;
                }
            }
            if (!known) throw ParseError(where + ": unknown flag \"" + f.get<std::string>() + "\"");
        }
        comps.push_back(rec);
    }

    std::vector<EdgeRecord> edges;
    idx = 0;
    for (const json& e : doc["edges"]) {
        std::string where = "edges[" + std::to_string(idx++) + "]";
        if (!e.is_object()) throw ParseError(where + ": must be an object");
        reject_unknown_keys(e, {"a", "b", "mult"}, where);
        EdgeRecord rec;
        rec.a = require_id(e, "a", where);
        rec.b = require_id(e, "b", where);
        rec.mult = require_int(e, "mult", where);
        edges.push_back(rec);
    }
    return CurveGraph(std::move(comps), std::move(edges));
}

std::string serialize_curve(const CurveGraph& g) {
    ordered doc;
    doc["components"] = ordered::array();
    for (const ComponentRecord& c : g.components()) {
        ordered comp;
        comp["id"] = c.id;
        comp["genus"] = c.genus;
        comp["flags"] = ordered::array();
        for (auto& [flag, name] : kFlagNames) {
            if (c.has_flag(flag)) comp["flags"].push_back(name);
        }
        doc["components"].push_back(std::move(comp));
    }
    // merge duplicate endpoint pairs; the constructor already sorted them
    std::map<std::pair<int, int>, Int> merged;
    for (const EdgeRecord& e : g.edges()) {
        merged[{std::min(e.a, e.b), std::max(e.a, e.b)}] += e.mult;
    }
    doc["edges"] = ordered::array();
    for (auto& [pair, mult] : merged) {
        ordered edge;
        edge["a"] = pair.first;
        edge["b"] = pair.second;
        edge["mult"] = mult;
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

SheafProfile parse_profile(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("profile file: top level must be an object");
    reject_unknown_keys(doc, {"kind", "invertible", "per_component_degree", "degree", "h0", "h1", "cliff"},
                        "profile file");
    SheafProfile p;
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw ParseError("profile file: missing \"kind\"");
    }
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "SplitCluster") p.kind = ProfileKind::SplitCluster;
    else if (kind == "WitnessInvertible") p.kind = ProfileKind::WitnessInvertible;
    else if (kind == "UserSupplied") p.kind = ProfileKind::UserSupplied;
    else throw ParseError("profile file: unknown kind \"" + kind + "\"");
    if (!doc.contains("invertible") || !doc["invertible"].is_boolean()) {
        throw ParseError("profile file: missing boolean \"invertible\"");
    }
    p.invertible = doc["invertible"].get<bool>();
    if (!doc.contains("per_component_degree") || !doc["per_component_degree"].is_array()) {
        throw ParseError("profile file: missing \"per_component_degree\" list");
    }
    for (const json& d : doc["per_component_degree"]) {
        if (!d.is_number_integer()) throw ParseError("profile file: restricted degrees must be integers");
        p.per_component_degree.push_back(d.get<Int>());
    }
    p.degree = require_int(doc, "degree", "profile file");
    p.h0 = require_int(doc, "h0", "profile file");
    p.h1 = require_int(doc, "h1", "profile file");
    p.cliff = require_int(doc, "cliff", "profile file");
    return p;
}

std::string serialize_profile(const SheafProfile& p) {
    ordered doc;
    doc["kind"] = to_string(p.kind);
    doc["invertible"] = p.invertible;
    doc["per_component_degree"] = p.per_component_degree;
    doc["degree"] = p.degree;
    doc["h0"] = p.h0;
    doc["h1"] = p.h1;
    doc["cliff"] = p.cliff;
    return doc.dump(2) + "\n";
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace curvecliff
