#pragma once

// Fixed edge lists for the graphs the constructions build on. The
// Blanusa lists were generated as Petersen dot products and are
// validated by the test suite (cubic, girth 5, snark, critical,
// mutually nonisomorphic).

#include <string>

#include "ccgraph/graph.hpp"

namespace ccg {

inline MultiGraph k2_3_graph() { return build_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline MultiGraph k4_graph() {
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline MultiGraph triangle_graph() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MultiGraph prism_graph() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline MultiGraph petersen_graph() {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);           // outer cycle
    for (int i = 0; i < 5; ++i) es.emplace_back(5 + i, 5 + (i + 2) % 5);   // inner pentagram
    for (int i = 0; i < 5; ++i) es.emplace_back(i, 5 + i);                 // spokes
    return build_graph(10, std::move(es));
}

// First Blanusa snark: |Aut| = 8.
inline MultiGraph blanusa1_graph() {
    return build_graph(18, {{0, 4},   {0, 5},   {0, 13},  {1, 2},   {1, 6},   {1, 12},  {2, 3},
                            {2, 7},   {3, 4},   {3, 8},   {4, 9},   {5, 7},   {5, 8},   {6, 8},
                            {6, 9},   {7, 10},  {9, 14},  {10, 11}, {10, 15}, {11, 12}, {11, 16},
                            {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}});
}

// Second Blanusa snark: |Aut| = 4; has edges lying in no 5-cycle.
inline MultiGraph blanusa2_graph() {
    return build_graph(18, {{0, 4},   {0, 5},   {0, 13},  {1, 2},   {1, 6},   {1, 12},  {2, 3},
                            {2, 7},   {3, 4},   {3, 8},   {4, 9},   {5, 8},   {5, 10},  {6, 8},
                            {6, 9},   {7, 9},   {7, 14},  {10, 11}, {10, 15}, {11, 12}, {11, 16},
                            {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}});
}

inline MultiGraph named_graph(const std::string& name) {
    if (name == "k2_3") return k2_3_graph();
    if (name == "petersen") return petersen_graph();
    if (name == "blanusa1") return blanusa1_graph();
    if (name == "blanusa2") return blanusa2_graph();
    if (name == "k4") return k4_graph();
    if (name == "triangle") return triangle_graph();
    if (name == "prism") return prism_graph();
    throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace ccg
