#pragma once

// Serialization: Graph JSON, mapping certificates, edge sets as sorted
// index arrays, and import of the graph6 format (simple graphs only).

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ccgraph/gf2.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/mapping.hpp"

namespace ccg {

using nlohmann::json;

inline json graph_to_json(const MultiGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
    if (!g.labels().empty()) {
        json labels = json::object();
        for (auto& [v, s] : g.labels()) labels[std::to_string(v)] = s;
        j["labels"] = labels;
    }
    return j;
}

inline MultiGraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON: missing 'n' or 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON: edge must be a [u,v] pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    MultiGraph g(n, std::move(es));
    if (j.contains("labels"))
        for (auto& [key, val] : j.at("labels").items())
            g.set_label(std::stoi(key), val.get<std::string>());
    return g;
}

inline json mapping_to_json(const EdgeMapping& f, const std::string& source_ref,
                            const std::string& target_ref) {
    return json{{"source", source_ref}, {"target", target_ref}, {"map", f.map}};
}

inline std::vector<EdgeId> mapping_array_from_json(const json& j) {
    if (!j.contains("map")) throw std::invalid_argument("mapping JSON: missing 'map'");
    return j.at("map").get<std::vector<EdgeId>>();
}

inline json edge_set_to_json(const EdgeSet& s) { return json(s.members()); }

// graph6 (McKay's format) decodes to a simple graph; anything else —
// sparse6, digraph6, stray bytes — is rejected.
inline MultiGraph graph_from_graph6(std::string s) {
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] == ':' || s[0] == ';' || s[0] == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 input not supported");
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
        return c - 63;
    };
    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (byte(1) < 63) {
            n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
            pos = 4;
        } else {
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
            pos = 8;
        }
    }
    if (n > 100000) throw std::invalid_argument("graph6: vertex count too large");
    std::vector<std::pair<Vertex, Vertex>> es;
    int bits = 0, cur = 0;
    for (long long v = 1; v < n; ++v)
        for (long long u = 0; u < v; ++u) {
            if (bits == 0) {
                cur = byte(pos++);
                bits = 6;
            }
            if (cur & (1 << (bits - 1)))
                es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            --bits;
        }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return MultiGraph(static_cast<int>(n), std::move(es));
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace ccg
