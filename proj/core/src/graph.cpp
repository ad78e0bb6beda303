#include "girth4/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace girth4 {

Edge make_edge(int u, int v) {
    if (u < 0 || v < 0)
        throw std::invalid_argument("edge endpoint must be non-negative");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    Edge e = make_edge(u, v);
    if (e.second >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (has_edge(e.first, e.second))
        throw std::invalid_argument("duplicate edge");
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex id out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

Girth Girth::finite(int value) {
    if (value < 3)
        throw std::invalid_argument("finite girth must be at least 3");
    Girth g;
    g.value_ = value;
    return g;
}

int Girth::value() const {
    if (is_infinite())
        throw std::logic_error("girth is infinite");
    return *value_;
}

std::string Girth::to_string() const {
    return is_infinite() ? "inf" : std::to_string(*value_);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            g.add_edge(u, v);
    return g;
}

namespace {

// BFS from `root`, recording the best cycle-through-root candidate. Candidates
// are dist[u] + dist[v] + 1 over non-tree edges (u,v); the reconstructed cycle
// goes through the lowest common ancestor of u and v, so its length never
// exceeds the candidate value.
struct RootScan {
    int best = -1;
    int cand_u = -1, cand_v = -1;
    std::vector<int> dist, parent;
};

void scan_from_root(const Graph& g, int root, int upper, RootScan& out) {
    const int n = g.order();
    out.best = -1;
    out.dist.assign(static_cast<std::size_t>(n), -1);
    out.parent.assign(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    out.dist[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        int du = out.dist[static_cast<std::size_t>(u)];
        // No candidate discovered from u onward can beat `upper`.
        if (upper > 0 && 2 * du >= upper)
            break;
        for (int w : g.neighbors(u)) {
            auto wi = static_cast<std::size_t>(w);
            if (out.dist[wi] < 0) {
                out.dist[wi] = du + 1;
                out.parent[wi] = u;
                q.push(w);
            } else if (w != out.parent[static_cast<std::size_t>(u)]) {
                int cand = du + out.dist[wi] + 1;
                if (out.best < 0 || cand < out.best) {
                    out.best = cand;
                    out.cand_u = u;
                    out.cand_v = w;
                }
            }
        }
    }
}

// Cycle through the LCA of u and v in the BFS tree plus the edge (u,v).
std::vector<int> reconstruct_cycle(const RootScan& scan, int u, int v) {
    std::vector<int> path_u, path_v;
    for (int a = u; a >= 0; a = scan.parent[static_cast<std::size_t>(a)])
        path_u.push_back(a);
    for (int b = v; b >= 0; b = scan.parent[static_cast<std::size_t>(b)])
        path_v.push_back(b);
    // Strip the common tail (root-side) down to the LCA.
    while (path_u.size() >= 2 && path_v.size() >= 2 &&
           path_u[path_u.size() - 2] == path_v[path_v.size() - 2]) {
        path_u.pop_back();
        path_v.pop_back();
    }
    std::vector<int> cycle(path_u.begin(), path_u.end());
    cycle.insert(cycle.end(), path_v.rbegin() + 1, path_v.rend());
    return cycle;
}

} // namespace

std::pair<Girth, std::vector<int>> girth_with_cycle(const Graph& g) {
    int best = -1;
    int best_u = -1, best_v = -1;
    RootScan scan, best_scan;
    for (int root = 0; root < g.order(); ++root) {
        scan_from_root(g, root, best, scan);
        if (scan.best > 0 && (best < 0 || scan.best < best)) {
            best = scan.best;
            best_u = scan.cand_u;
            best_v = scan.cand_v;
            best_scan = scan;
            if (best == 3)
                break;
        }
    }
    if (best < 0)
        return {Girth::infinite(), {}};
    std::vector<int> cycle = reconstruct_cycle(best_scan, best_u, best_v);
    // A root on a shortest cycle yields an exact candidate, so the
    // reconstructed cycle realizes the girth.
    return {Girth::finite(static_cast<int>(cycle.size())), cycle};
}

Girth girth(const Graph& g) {
    return girth_with_cycle(g).first;
}

Graph remove_vertices(const Graph& g, const std::set<int>& drop) {
    for (int v : drop)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("vertex id out of range");
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!drop.contains(v))
            relabel[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (const auto& [u, v] : g.edges()) {
        int ru = relabel[static_cast<std::size_t>(u)];
        int rv = relabel[static_cast<std::size_t>(v)];
        if (ru >= 0 && rv >= 0)
            out.add_edge(ru, rv);
    }
    return out;
}

} // namespace girth4
