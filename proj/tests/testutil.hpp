#pragma once

#include <random>
#include <vector>

#include "girth4/graph.hpp"

namespace testutil {

// G(n, p) with p = percent/100, deterministic for a given generator state.
inline girth4::Graph random_graph(int n, int percent, std::mt19937& gen) {
    girth4::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(gen() % 100) < percent) g.add_edge(u, v);
    return g;
}

inline girth4::Graph graph_from_edges(int n, const std::vector<girth4::Edge>& edges) {
    girth4::Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline girth4::Graph petersen() {
    return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                 {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                 {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline girth4::Graph cycle(int n) {
    girth4::Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline girth4::Graph path(int n) {
    girth4::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline girth4::Graph complete_bipartite(int a, int b) {
    girth4::Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

} // namespace testutil
