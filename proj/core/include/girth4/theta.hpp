#pragma once

#include <cstdint>
#include <variant>

namespace girth4 {

// Known value of the 4-girth-thickness of K_n: exact for every n except 10,
// where only the bracket [3,4] is established.
struct ThetaValue {
    struct Exact {
        int value;
        friend bool operator==(const Exact&, const Exact&) = default;
    };
    struct Range {
        int lo, hi;
        friend bool operator==(const Range&, const Range&) = default;
    };

    int n = 0;
    std::variant<Exact, Range> kind;

    bool is_exact() const { return std::holds_alternative<Exact>(kind); }
    // Best proven upper bound (= the value when exact).
    int upper() const;
    int lower() const;

    friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
};

ThetaValue theta4(int n);

// Edge-counting lower bound ceil(C(n,2) / max_planar_size(n,4)), which
// collapses to the closed form ceil((n+2)/4). Both routes use integer
// arithmetic; the quotient route applies for n >= 3.
std::int64_t girth4_lower_bound_closed_form(std::int64_t n);
std::int64_t girth4_lower_bound_quotient(std::int64_t n);
std::int64_t girth4_lower_bound(std::int64_t n);

} // namespace girth4
