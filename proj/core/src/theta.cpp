#include "girth4/theta.hpp"

#include <stdexcept>

#include "girth4/planarity.hpp"

namespace girth4 {

int ThetaValue::upper() const {
    if (const auto* e = std::get_if<Exact>(&kind))
        return e->value;
    return std::get<Range>(kind).hi;
}

int ThetaValue::lower() const {
    if (const auto* e = std::get_if<Exact>(&kind))
        return e->value;
    return std::get<Range>(kind).lo;
}

ThetaValue theta4(int n) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n == 6)
        return {n, ThetaValue::Exact{3}};
    if (n == 10)
        return {n, ThetaValue::Range{3, 4}};
    return {n, ThetaValue::Exact{static_cast<int>((n + 2 + 3) / 4)}};
}

std::int64_t girth4_lower_bound_closed_form(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    return (n + 2 + 3) / 4;
}

std::int64_t girth4_lower_bound_quotient(std::int64_t n) {
    if (n < 3)
        throw std::invalid_argument("quotient bound requires n >= 3");
    std::int64_t edges = n * (n - 1) / 2;
    std::int64_t cap = max_planar_size(n, Girth::finite(4));
    return (edges + cap - 1) / cap;
}

std::int64_t girth4_lower_bound(std::int64_t n) {
    std::int64_t closed = girth4_lower_bound_closed_form(n);
    if (n >= 3 && girth4_lower_bound_quotient(n) != closed)
        throw std::logic_error("lower-bound routes disagree");
    return closed;
}

} // namespace girth4
