#include "girth4/planarity.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace girth4 {

namespace {

bool boyer_myrvold_decision(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

// Backtracking search for internally vertex-disjoint paths between the
// required branch-vertex pairs. Interiors come from the non-blocked vertices.
struct SubdivisionSearch {
    const Graph& g;
    std::vector<char> blocked;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> paths;

    bool connect(std::size_t idx) {
        if (idx == pairs.size())
            return true;
        auto [a, b] = pairs[idx];
        std::vector<int> path{a};
        return extend(a, b, path, idx);
    }

    bool extend(int cur, int target, std::vector<int>& path, std::size_t idx) {
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                paths.push_back(path);
                paths.back().push_back(target);
                if (connect(idx + 1))
                    return true;
                paths.pop_back();
            } else if (!blocked[static_cast<std::size_t>(w)]) {
                blocked[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                if (extend(w, target, path, idx))
                    return true;
                path.pop_back();
                blocked[static_cast<std::size_t>(w)] = 0;
            }
        }
        return false;
    }
};

std::vector<Edge> collect_edges(const std::vector<std::vector<int>>& paths) {
    std::vector<Edge> out;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            out.push_back(make_edge(p[i], p[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Fn>
bool for_each_combination(const std::vector<int>& items, int k, Fn&& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(pick.size()) == k)
            return fn(pick);
        for (std::size_t i = start; i + (static_cast<std::size_t>(k) - pick.size()) <= items.size(); ++i) {
            pick.push_back(items[i]);
            if (self(self, i + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

std::optional<std::vector<Edge>> find_k5_subdivision(const Graph& g) {
    std::vector<int> cand;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 4)
            cand.push_back(v);
    if (cand.size() < 5)
        return std::nullopt;
    std::optional<std::vector<Edge>> found;
    for_each_combination(cand, 5, [&](const std::vector<int>& branch) {
        SubdivisionSearch s{g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), {}, {}};
        for (int b : branch)
            s.blocked[static_cast<std::size_t>(b)] = 1;
        for (std::size_t i = 0; i < branch.size(); ++i)
            for (std::size_t j = i + 1; j < branch.size(); ++j)
                s.pairs.emplace_back(branch[i], branch[j]);
        if (s.connect(0)) {
            found = collect_edges(s.paths);
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::vector<Edge>> find_k33_subdivision(const Graph& g) {
    std::vector<int> cand;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3)
            cand.push_back(v);
    if (cand.size() < 6)
        return std::nullopt;
    std::optional<std::vector<Edge>> found;
    for_each_combination(cand, 3, [&](const std::vector<int>& side_a) {
        std::vector<int> rest;
        for (int v : cand)
            if (std::find(side_a.begin(), side_a.end(), v) == side_a.end() && v > side_a[0])
                rest.push_back(v);
        return for_each_combination(rest, 3, [&](const std::vector<int>& side_b) {
            SubdivisionSearch s{g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), {}, {}};
            for (int b : side_a)
                s.blocked[static_cast<std::size_t>(b)] = 1;
            for (int b : side_b)
                s.blocked[static_cast<std::size_t>(b)] = 1;
            for (int a : side_a)
                for (int b : side_b)
                    s.pairs.emplace_back(a, b);
            if (s.connect(0)) {
                found = collect_edges(s.paths);
                return true;
            }
            return false;
        });
    });
    return found;
}

} // namespace

std::optional<std::vector<Edge>> find_kuratowski_subdivision(const Graph& g) {
    if (auto k5 = find_k5_subdivision(g))
        return k5;
    return find_k33_subdivision(g);
}

PlanarityVerdict is_planar(const Graph& g, bool want_witness) {
    PlanarityVerdict verdict;
    // A Kuratowski subdivision has at least nine edges.
    if (g.size() <= 8)
        verdict.planar = true;
    else
        verdict.planar = boyer_myrvold_decision(g);
    if (!verdict.planar && want_witness && g.order() <= 8)
        verdict.witness = find_kuratowski_subdivision(g);
    return verdict;
}

std::int64_t max_planar_size(std::int64_t n, Girth girth_lb) {
    if (n <= 0)
        throw std::invalid_argument("order must be positive");
    if (n <= 2 || girth_lb.is_infinite())
        return n - 1;
    std::int64_t g = girth_lb.value();
    return g * (n - 2) / (g - 2);
}

} // namespace girth4
