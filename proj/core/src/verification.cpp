#include "girth4/verification.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "girth4/planarity.hpp"

namespace girth4 {
namespace {

bool edge_in_range(const Edge& e, int n) {
    return e.first != e.second && e.first >= 0 && e.second >= 0 && e.first < n && e.second < n;
}

Edge normalized(const Edge& e) {
    return e.first <= e.second ? e : Edge{e.second, e.first};
}

std::uint64_t edge_key(const Edge& e, int n) {
    return static_cast<std::uint64_t>(e.first) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(e.second);
}

} // namespace

Graph part_graph(const Decomposition& d, std::size_t part) {
    if (part >= d.parts.size()) {
        throw std::out_of_range("part index out of range");
    }
    const int n = std::max(d.n, 0);
    Graph g(n);
    for (const Edge& raw : d.parts[part]) {
        const Edge e = normalized(raw);
        if (edge_in_range(e, n) && !g.has_edge(e.first, e.second)) {
            g.add_edge(e.first, e.second);
        }
    }
    return g;
}

VerificationReport verify(const Decomposition& d, std::size_t violation_cap) {
    VerificationReport report;
    report.n = d.n;
    report.girth_claim = d.girth_claim;

    const int n = std::max(d.n, 0);
    std::vector<Violation> found;

    // Edge accounting: foreign edges are reported and then ignored; every
    // remaining K_n edge must occur exactly once across all parts.
    std::size_t listed = 0;
    for (const auto& part : d.parts) listed += part.size();
    std::unordered_map<std::uint64_t, int> first_part;
    first_part.reserve(listed);
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
        for (const Edge& raw : d.parts[p]) {
            const Edge e = normalized(raw);
            if (!edge_in_range(e, n)) {
                found.push_back(ForeignEdge{raw.first, raw.second, static_cast<int>(p)});
                continue;
            }
            auto [it, inserted] = first_part.try_emplace(edge_key(e, n), static_cast<int>(p));
            if (!inserted) {
                found.push_back(DuplicateEdge{e.first, e.second, it->second, static_cast<int>(p)});
            }
        }
    }

    // Per-part structure, on the deduplicated in-range edges.
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
        const Graph g = part_graph(d, p);
        PartResult result;
        result.size = d.parts[p].size();
        result.planar = is_planar(g).planar;
        auto [girth_value, cycle] = girth_with_cycle(g);
        result.girth = girth_value;
        if (!result.planar) {
            found.push_back(NonPlanar{static_cast<int>(p)});
        }
        if (!girth_value.at_least(d.girth_claim)) {
            found.push_back(GirthViolation{static_cast<int>(p), std::move(cycle)});
        }
        report.part_results.push_back(std::move(result));
    }

    // Coverage. The count comparison avoids scanning all of K_n when nothing
    // is missing; at most violation_cap misses are materialized since missing
    // edges sort first anyway.
    const std::uint64_t covered = first_part.size();
    const std::uint64_t total =
        static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
    std::uint64_t missing = covered < total ? total - covered : 0;
    std::uint64_t materialized = 0;
    for (int u = 0; u < n && materialized < missing && materialized < violation_cap; ++u) {
        for (int v = u + 1; v < n && materialized < missing && materialized < violation_cap; ++v) {
            if (!first_part.contains(edge_key({u, v}, n))) {
                found.push_back(MissingEdge{u, v});
                ++materialized;
            }
        }
    }

    std::sort(found.begin(), found.end());
    if (found.size() > violation_cap || materialized < missing) {
        report.truncated = true;
        found.resize(std::min<std::size_t>(found.size(), violation_cap));
    }
    report.violations = std::move(found);
    report.ok = report.violations.empty() && !report.truncated;
    return report;
}

std::variant<UpperBoundClaim, VerificationReport> certify_upper_bound(const Decomposition& d) {
    VerificationReport report = verify(d);
    if (!report.ok) return report;
    return UpperBoundClaim{d.n, static_cast<int>(d.parts.size())};
}

} // namespace girth4
