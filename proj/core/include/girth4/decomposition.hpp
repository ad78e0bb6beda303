#pragma once

#include <vector>

#include "girth4/graph.hpp"

namespace girth4 {

// Edge partition of K_n into parts claimed to be planar with girth at least
// girth_claim. Parts are spanning subgraphs over the common vertex set
// 0..n-1; empty parts are legal. The optimal flag records whether the part
// count is known to equal the 4-girth-thickness of K_n.
struct Decomposition {
    int n = 0;
    std::vector<std::vector<Edge>> parts;
    int girth_claim = 4;
    bool optimal = false;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Graph view of one part (edges must be valid for order n).
Graph part_graph(const Decomposition& d, std::size_t part);

} // namespace girth4
