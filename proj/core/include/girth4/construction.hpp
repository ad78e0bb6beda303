#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "girth4/decomposition.hpp"
#include "girth4/graph.hpp"

namespace girth4 {

// Requested order is the open case (K_10), which has no direct construction.
struct excluded_case_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Zig-zag index sequence i, i+1, i-1, i+2, i-2, ..., i+k+1, i+k with all sums
// reduced to representatives 1..2k. Consecutive entries traced in order are
// the i-th Hamiltonian path of the cyclic factorization of K_2k.
struct ZigZag {
    ZigZag(int k, int i);

    int k;
    int base;
    std::vector<int> sequence;
};

// Bijection between construction labels and dense vertex ids:
//   v_j  <-> j - 1        (j in 1..2k)
//   v'_j <-> 2k + j - 1
//   x    <-> 4k,  y <-> 4k + 1   (present only for orders 4k+2)
class VertexMap {
public:
    explicit VertexMap(int k, bool with_xy = false);

    int k() const { return k_; }
    bool with_xy() const { return with_xy_; }
    int unprimed(int j) const;
    int primed(int j) const;
    int x() const;
    int y() const;
    std::string label(int id) const;

private:
    int k_;
    bool with_xy_;
};

// K_2k as k pairwise edge-disjoint Hamiltonian paths, each the consecutive-pair
// edge list of ZigZag(k, i). The middle edge of path i is
// v_{i+ceil(k/2)} v_{i+ceil(3k/2)}.
std::vector<std::vector<Edge>> hamiltonian_factorization(int k);

// K_4k into k+1 parts (k >= 2): for i in 1..k a chain of K_{2,2} blocks over
// the pair classes {v_s, v'_s} in zig-zag order (size 8k-4, girth 4), plus the
// perfect matching v_j v'_j (size 2k).
Decomposition build_case_4k(int k);

// K_{4k+2} into k+1 parts (k >= 3): each G_i gains x, y and four edges chosen
// by the parity subcases; the matching gains x, y, the edge xy and the 4k
// alternating star edges. k = 2 is rejected as the excluded K_10 case.
Decomposition build_case_4k_plus_2(int k);

// Decomposition of K_n with part count ceil((n+2)/4) for n not in {6,10},
// 3 for n=6 and 4 for n=10 (not known optimal). Orders 4k-1 and 4k+1 restrict
// the 4k and 4k+2 constructions by dropping the highest vertex id; n <= 6 and
// n = 9 load search-generated fixtures from fixtures_dir and are re-verified.
Decomposition decompose(int n, const std::filesystem::path& fixtures_dir = "fixtures");

// Induced restriction to vertices 0..new_n-1. Throws if a part would vanish.
Decomposition restrict_to_prefix(const Decomposition& d, int new_n);

} // namespace girth4
