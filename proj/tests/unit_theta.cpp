#include "doctest.h"

#include <stdexcept>

#include "girth4/theta.hpp"

using girth4::ThetaValue;

TEST_CASE("theta values for the special and generic orders") {
    CHECK(girth4::theta4(6) == ThetaValue{6, ThetaValue::Exact{3}});
    CHECK(girth4::theta4(10) == ThetaValue{10, ThetaValue::Range{3, 4}});
    CHECK(girth4::theta4(1) == ThetaValue{1, ThetaValue::Exact{1}});
    CHECK(girth4::theta4(2) == ThetaValue{2, ThetaValue::Exact{1}});
    CHECK(girth4::theta4(9) == ThetaValue{9, ThetaValue::Exact{3}});
    CHECK(girth4::theta4(12) == ThetaValue{12, ThetaValue::Exact{4}});
    CHECK_THROWS_AS(girth4::theta4(0), std::invalid_argument);
    CHECK_THROWS_AS(girth4::theta4(-3), std::invalid_argument);

    for (int n = 1; n <= 200; ++n) {
        ThetaValue t = girth4::theta4(n);
        if (n == 10) {
            CHECK_FALSE(t.is_exact());
            CHECK(t.lower() == 3);
            CHECK(t.upper() == 4);
        } else {
            CHECK(t.is_exact());
            CHECK(t.lower() == t.upper());
            int expected = n == 6 ? 3 : (n + 2 + 3) / 4;
            CHECK(t.upper() == expected);
        }
    }
}

TEST_CASE("the two lower-bound routes agree") {
    CHECK(girth4::girth4_lower_bound(2) == 1);
    CHECK(girth4::girth4_lower_bound(6) == 2);
    CHECK(girth4::girth4_lower_bound(10) == 3);
    CHECK(girth4::girth4_lower_bound(12) == 4);
    for (std::int64_t n = 3; n <= 1'000'000; ++n) {
        if (girth4::girth4_lower_bound_quotient(n) != girth4::girth4_lower_bound_closed_form(n)) {
            REQUIRE(girth4::girth4_lower_bound_quotient(n) ==
                    girth4::girth4_lower_bound_closed_form(n));
        }
    }
    // girth4_lower_bound itself cross-checks internally; exercise the full range endpoints
    CHECK(girth4::girth4_lower_bound(1'000'000) == 250'001);
    CHECK_THROWS_AS(girth4::girth4_lower_bound(0), std::invalid_argument);
}
