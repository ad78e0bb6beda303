#pragma once

#include <compare>
#include <cstddef>
#include <variant>
#include <vector>

#include "girth4/decomposition.hpp"
#include "girth4/graph.hpp"

namespace girth4 {

// Typed findings, each carrying a concrete witness. The variant order below
// plus the defaulted comparisons define the report's sort order.
struct MissingEdge {
    int u, v;
    friend auto operator<=>(const MissingEdge&, const MissingEdge&) = default;
};
struct DuplicateEdge {
    int u, v;
    int part_a, part_b;  // equal when the same part lists an edge twice
    friend auto operator<=>(const DuplicateEdge&, const DuplicateEdge&) = default;
};
struct ForeignEdge {
    int u, v;
    int part;
    friend auto operator<=>(const ForeignEdge&, const ForeignEdge&) = default;
};
struct NonPlanar {
    int part;
    friend auto operator<=>(const NonPlanar&, const NonPlanar&) = default;
};
struct GirthViolation {
    int part;
    std::vector<int> cycle;
    friend auto operator<=>(const GirthViolation&, const GirthViolation&) = default;
};

using Violation = std::variant<MissingEdge, DuplicateEdge, ForeignEdge, NonPlanar, GirthViolation>;

struct PartResult {
    std::size_t size = 0;
    bool planar = false;
    Girth girth;
    friend bool operator==(const PartResult&, const PartResult&) = default;
};

struct VerificationReport {
    bool ok = false;
    int n = 0;
    int girth_claim = 4;
    std::vector<PartResult> part_results;
    std::vector<Violation> violations;
    bool truncated = false;  // the violation cap was reached
};

// Checks that d is an exact edge partition of K_n and that every part is
// planar with girth at least d.girth_claim (infinite girth passes). Malformed
// inputs produce violations, never failures. Violations are sorted and
// reported up to `violation_cap`.
VerificationReport verify(const Decomposition& d, std::size_t violation_cap = 100);

// The certified statement "theta(girth_claim, K_n) <= parts_count": issued
// only when verify passes.
struct UpperBoundClaim {
    int n = 0;
    int parts_count = 0;
    friend bool operator==(const UpperBoundClaim&, const UpperBoundClaim&) = default;
};

// Claim on success, full report on rejection.
std::variant<UpperBoundClaim, VerificationReport> certify_upper_bound(const Decomposition& d);

} // namespace girth4
