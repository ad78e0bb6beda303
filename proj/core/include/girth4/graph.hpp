#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace girth4 {

// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<int, int>;

// Normalizes (u,v) to u < v. Rejects self-loops and negative ids.
Edge make_edge(int u, int v);

// Undirected simple graph on vertices 0..n-1. Edge list is kept sorted,
// so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Length of a shortest cycle; acyclic graphs have infinite girth.
class Girth {
public:
    static Girth infinite() { return Girth{}; }
    static Girth finite(int value);

    bool is_infinite() const { return !value_.has_value(); }
    int value() const;
    bool at_least(int claim) const { return is_infinite() || *value_ >= claim; }
    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    std::optional<int> value_;
};

Graph complete_graph(int n);

Girth girth(const Graph& g);

// Girth plus a witness: vertex sequence of one shortest cycle (empty when acyclic).
std::pair<Girth, std::vector<int>> girth_with_cycle(const Graph& g);

// Induced subgraph on the vertices outside `drop`, relabeled to 0..n-|drop|-1
// preserving relative order.
Graph remove_vertices(const Graph& g, const std::set<int>& drop);

} // namespace girth4
