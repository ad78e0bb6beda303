#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "girth4/decomposition.hpp"

namespace girth4 {

struct SearchConfig {
    int n = 0;
    int parts = 1;
    int girth = 4;
    std::uint64_t node_budget = 1'000'000;
    double time_budget_seconds = 60.0;
    std::uint64_t seed = 0;
    bool symmetry_breaking = true;
    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

enum class SearchStatus { Found, ExhaustedNoSolution, BudgetExceeded };

// Rejections by rule. `leaf` counts complete assignments rejected by the
// final full re-verification.
struct PruneStats {
    std::uint64_t size = 0;
    std::uint64_t girth = 0;
    std::uint64_t planarity = 0;
    std::uint64_t leaf = 0;
    friend bool operator==(const PruneStats&, const PruneStats&) = default;
};

struct SearchStats {
    std::uint64_t nodes = 0;  // edge-assignment attempts
    int max_depth = 0;        // deepest edge index reached
    PruneStats prunes;
    double wall_ms = 0.0;     // not part of the deterministic contract
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExceeded;
    SearchConfig config;
    std::optional<Decomposition> decomposition;  // present iff Found
    SearchStats stats;
};

// Backtracking search for a partition of E(K_n) into `parts` planar parts of
// girth >= `girth`. Edges are assigned in the order that grows K_m into
// K_{m+1}. Seed 0 tries parts in index order; a nonzero seed permutes the
// part order tried at each depth. Every Found decomposition has passed
// verify; ExhaustedNoSolution is a proof of nonexistence (pruning is sound
// and, with symmetry breaking, complete up to part relabeling). Stats and
// status are deterministic for a fixed config.
SearchOutcome search_decomposition(const SearchConfig& cfg);

// Counts of all 2-colorings of E(K_n) and of those where neither color class
// contains a triangle. (6 -> (32768, 0) is the Ramsey step behind the K_6
// lower bound; 5 still admits such colorings.)
struct RamseyCount {
    std::uint64_t colorings = 0;
    std::uint64_t both_triangle_free = 0;
    friend bool operator==(const RamseyCount&, const RamseyCount&) = default;
};
RamseyCount ramsey_triangle_check(int n);

// One bounded attempt at the open question whether K_10 splits into three
// girth-4 planar parts. Forces n=10, parts=3, girth=4, runs the search under
// cfg's budgets and appends one JSON line of stats to log_path. Found would
// settle the question one way, ExhaustedNoSolution the other; BudgetExceeded
// is reported as inconclusive.
SearchOutcome k10_experiment(SearchConfig cfg, const std::filesystem::path& log_path);

} // namespace girth4
