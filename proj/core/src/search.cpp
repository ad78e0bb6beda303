#include "girth4/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>

#include "girth4/planarity.hpp"
#include "girth4/serialize.hpp"
#include "girth4/theta.hpp"
#include "girth4/verification.hpp"

namespace girth4 {
namespace {

// Assignment order: all edges into vertex v before any edge into v+1, so a
// prefix of the order is exactly E(K_m) for growing m and contradictions
// surface while the graph is still small.
std::vector<Edge> incremental_edge_order(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.push_back({u, v});
    return edges;
}

void validate(const SearchConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("order must be positive");
    if (cfg.n > 64) throw std::invalid_argument("order above 64 not supported by the search");
    if (cfg.parts < 1) throw std::invalid_argument("need at least one part");
    if (cfg.girth < 3) throw std::invalid_argument("girth bound must be at least 3");
    if (cfg.node_budget < 1) throw std::invalid_argument("node budget must be positive");
    if (!(cfg.time_budget_seconds > 0)) throw std::invalid_argument("time budget must be positive");
}

enum class Step { Exhausted, Found, Budget };

struct Searcher {
    explicit Searcher(const SearchConfig& config)
        : cfg(config),
          edges(incremental_edge_order(cfg.n)),
          m(static_cast<int>(edges.size())),
          cap(static_cast<int>(
              std::max<std::int64_t>(cfg.n - 1, max_planar_size(cfg.n, Girth::finite(cfg.girth))))),
          planar_threshold((cap + 1) / 2),
          assignment(edges.size(), -1),
          part_size(static_cast<std::size_t>(cfg.parts), 0),
          adjacency(static_cast<std::size_t>(cfg.parts),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(cfg.n), 0)),
          start(std::chrono::steady_clock::now()) {
        // Parts are tried in index order by default; a nonzero seed swaps in
        // one shuffled order per depth instead (cheap restarts). The whole
        // table is a pure function of the seed; hand-rolled shuffle because
        // std::shuffle's output is not pinned down by the standard.
        std::mt19937_64 gen(cfg.seed);
        part_order.resize(edges.size());
        for (auto& order : part_order) {
            order.resize(static_cast<std::size_t>(cfg.parts));
            for (int p = 0; p < cfg.parts; ++p) order[static_cast<std::size_t>(p)] = p;
            if (cfg.seed != 0)
                for (std::size_t i = order.size(); i > 1; --i)
                    std::swap(order[i - 1], order[gen() % i]);
        }
    }

    const SearchConfig& cfg;
    std::vector<Edge> edges;
    int m;
    int cap;
    int planar_threshold;
    std::vector<int> assignment;
    std::vector<int> part_size;
    std::vector<std::vector<std::uint64_t>> adjacency;
    std::vector<std::vector<int>> part_order;
    int used_parts = 0;
    std::chrono::steady_clock::time_point start;
    SearchStats stats;
    std::optional<Decomposition> found;

    bool over_time() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               cfg.time_budget_seconds;
    }

    // Would adding (u,v) to part p close a cycle shorter than cfg.girth? The
    // part currently has girth >= cfg.girth, so only cycles through the new
    // edge matter: a u-v path of at most girth-2 edges.
    bool creates_short_cycle(int p, int u, int v) const {
        const auto& adj = adjacency[static_cast<std::size_t>(p)];
        if (cfg.girth == 4)
            return (adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]) != 0;
        const int limit = cfg.girth - 2;
        std::vector<int> dist(static_cast<std::size_t>(cfg.n), -1);
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(cfg.n));
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int a = queue[head];
            int da = dist[static_cast<std::size_t>(a)];
            if (da == limit) break;
            std::uint64_t nbrs = adj[static_cast<std::size_t>(a)];
            while (nbrs) {
                int b = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (dist[static_cast<std::size_t>(b)] >= 0) continue;
                if (b == v) return true;
                dist[static_cast<std::size_t>(b)] = da + 1;
                queue.push_back(b);
            }
        }
        return false;
    }

    Graph part_with(int p, int u, int v) const {
        Graph g(cfg.n);
        const auto& adj = adjacency[static_cast<std::size_t>(p)];
        for (int a = 0; a + 1 < cfg.n; ++a) {
            std::uint64_t higher = adj[static_cast<std::size_t>(a)] >> (a + 1) << (a + 1);
            while (higher) {
                int b = std::countr_zero(higher);
                higher &= higher - 1;
                g.add_edge(a, b);
            }
        }
        g.add_edge(u, v);
        return g;
    }

    Step leaf() {
        Decomposition d;
        d.n = cfg.n;
        d.girth_claim = cfg.girth;
        d.parts.assign(static_cast<std::size_t>(cfg.parts), {});
        for (int e = 0; e < m; ++e)
            d.parts[static_cast<std::size_t>(assignment[static_cast<std::size_t>(e)])].push_back(
                edges[static_cast<std::size_t>(e)]);
        for (auto& part : d.parts) std::sort(part.begin(), part.end());
        // The incremental checks should never let a bad assignment through;
        // the full re-verification keeps Found trustworthy regardless.
        if (!verify(d).ok) {
            ++stats.prunes.leaf;
            return Step::Exhausted;
        }
        d.optimal = cfg.girth == 4 && cfg.parts == theta4(cfg.n).lower();
        found = std::move(d);
        return Step::Found;
    }

    Step dfs(int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        if (depth == m) return leaf();
        const auto [u, v] = edges[static_cast<std::size_t>(depth)];
        const int max_part = cfg.symmetry_breaking ? std::min(used_parts, cfg.parts - 1)
                                                   : cfg.parts - 1;
        for (int p : part_order[static_cast<std::size_t>(depth)]) {
            if (p > max_part) continue;  // symmetric to a part relabeling already tried
            if (stats.nodes >= cfg.node_budget) return Step::Budget;
            ++stats.nodes;
            if ((stats.nodes & 4095) == 0 && over_time()) return Step::Budget;

            auto& size = part_size[static_cast<std::size_t>(p)];
            if (size + 1 > cap) {
                ++stats.prunes.size;
                continue;
            }
            if (creates_short_cycle(p, u, v)) {
                ++stats.prunes.girth;
                continue;
            }
            if (size + 1 >= planar_threshold && !is_planar(part_with(p, u, v)).planar) {
                ++stats.prunes.planarity;
                continue;
            }

            auto& adj = adjacency[static_cast<std::size_t>(p)];
            adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            ++size;
            assignment[static_cast<std::size_t>(depth)] = p;
            const int prev_used = used_parts;
            used_parts = std::max(used_parts, p + 1);

            Step step = dfs(depth + 1);

            used_parts = prev_used;
            assignment[static_cast<std::size_t>(depth)] = -1;
            --size;
            adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
            adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);

            if (step != Step::Exhausted) return step;
        }
        return Step::Exhausted;
    }
};

} // namespace

SearchOutcome search_decomposition(const SearchConfig& cfg) {
    validate(cfg);
    Searcher searcher(cfg);
    SearchOutcome outcome;
    outcome.config = cfg;

    // Capacity certificate: if even filling every part to the planar girth
    // bound cannot hold all of E(K_n), no assignment exists.
    Step step;
    if (static_cast<std::uint64_t>(searcher.m) >
        static_cast<std::uint64_t>(cfg.parts) * static_cast<std::uint64_t>(searcher.cap)) {
        ++searcher.stats.prunes.size;
        step = Step::Exhausted;
    } else {
        step = searcher.dfs(0);
    }

    switch (step) {
    case Step::Found: outcome.status = SearchStatus::Found; break;
    case Step::Exhausted: outcome.status = SearchStatus::ExhaustedNoSolution; break;
    case Step::Budget: outcome.status = SearchStatus::BudgetExceeded; break;
    }
    outcome.decomposition = std::move(searcher.found);
    outcome.stats = searcher.stats;
    outcome.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - searcher.start)
            .count();
    return outcome;
}

RamseyCount ramsey_triangle_check(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("exhaustive 2-coloring check is limited to orders 1..7");
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
    int m = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m++;
        }
    struct Triple {
        int a, b, c;
    };
    std::vector<Triple> triangles;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                triangles.push_back({index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)],
                                     index[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)],
                                     index[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]});

    RamseyCount count;
    count.colorings = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < count.colorings; ++mask) {
        bool monochromatic = false;
        for (const Triple& t : triangles) {
            std::uint64_t bits = ((mask >> t.a) & 1) + ((mask >> t.b) & 1) + ((mask >> t.c) & 1);
            if (bits == 0 || bits == 3) {
                monochromatic = true;
                break;
            }
        }
        if (!monochromatic) ++count.both_triangle_free;
    }
    return count;
}

SearchOutcome k10_experiment(SearchConfig cfg, const std::filesystem::path& log_path) {
    cfg.n = 10;
    cfg.parts = 3;
    cfg.girth = 4;
    SearchOutcome outcome = search_decomposition(cfg);
    std::ofstream log(log_path, std::ios::app);
    if (!log) throw std::runtime_error("cannot write " + log_path.string());
    log << search_log_line(outcome, utc_timestamp());
    return outcome;
}

} // namespace girth4
