#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "girth4/graph.hpp"

namespace girth4 {

struct PlanarityVerdict {
    bool planar = false;
    // Edge set of a K_5 or K_{3,3} subdivision, when non-planar and a witness
    // was requested. Extraction is brute force and only attempted for n <= 8.
    std::optional<std::vector<Edge>> witness;
};

// Exact combinatorial planarity decision.
PlanarityVerdict is_planar(const Graph& g, bool want_witness = false);

// Exhaustive search for a K_5 or K_{3,3} subdivision contained in g.
// Intended for small graphs; cost grows quickly with the vertex count.
std::optional<std::vector<Edge>> find_kuratowski_subdivision(const Graph& g);

// Maximum size of a planar graph of order n whose girth is at least girth_lb:
// n-1 for n in {1,2} and for infinite girth_lb, otherwise
// floor(g(n-2)/(g-2)). Rejects n = 0.
std::int64_t max_planar_size(std::int64_t n, Girth girth_lb);

} // namespace girth4
