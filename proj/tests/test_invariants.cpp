#include <doctest.h>

#include "cubicfano/invariants.hpp"

using namespace cubicfano;
using namespace cubicfano::invariants;

TEST_CASE("anticanonical cube") {
    CHECK(anticanonical_cube({0, 5}) == 2);
    CHECK(anticanonical_cube({2, 6}) == 2);
    CHECK(anticanonical_cube({0, 6}) == -2);
    CHECK(anticanonical_cube({4, 6}) == 6);
}

TEST_CASE("positivity equivalence over a grid") {
    for (long long g = 0; g <= 30; ++g)
        for (long long d = 1; d <= 30; ++d) {
            Int cube = anticanonical_cube({g, d});
            CHECK((cube > 0) == (2 * (d - 5) <= g));
        }
}

TEST_CASE("cube plus K^2.E is 24 - 2d") {
    for (long long g = 0; g <= 20; ++g)
        for (long long d = 1; d <= 20; ++d)
            CHECK(anticanonical_cube({g, d}) + k2e({g, d}) == 24 - 2 * Int(d));
}

TEST_CASE("secant line counts") {
    CHECK(*secant_line_count({4, 6}) == 27);
    CHECK(*secant_line_count({0, 5}) == 31);
    CHECK(*secant_line_count({0, 1}) == 1);
    CHECK(secant_count_is_conventional({0, 1}));
    CHECK_FALSE(secant_count_is_conventional({0, 2}));
    // large genus makes the formula negative: inapplicable
    CHECK_FALSE(secant_line_count({10, 2}).has_value());
}

TEST_CASE("hyperplane dimension bounds") {
    auto b = dim_hyperplanes_through({1, 3});
    CHECK(b.which == HyperplaneBound::Case::large_degree);
    CHECK(*b.bound == 1);  // pencil of hyperplanes

    b = dim_hyperplanes_through({4, 6});
    CHECK(b.which == HyperplaneBound::Case::near_canonical);
    CHECK(*b.bound == 0);

    b = dim_hyperplanes_through({0, 5});
    CHECK(b.which == HyperplaneBound::Case::large_degree);
    CHECK(*b.bound == -2);

    // neither hypothesis: d < 2g-4 with g >= 2
    b = dim_hyperplanes_through({5, 3});
    CHECK(b.which == HyperplaneBound::Case::none);
    CHECK_FALSE(b.bound.has_value());
}

TEST_CASE("quadric dimension bound") {
    CHECK(*dim_quadrics_through({2, 6}) == 3);
    CHECK(*dim_quadrics_through({0, 5}) == 3);
    CHECK(*dim_quadrics_through({0, 1}) == 11);
    CHECK_FALSE(dim_quadrics_through({7, 3}).has_value());
}

TEST_CASE("Castelnuovo bounds") {
    CHECK(castelnuovo_bound(6, 4) == 2);
    CHECK(castelnuovo_bound(6, 3) == 4);
    CHECK(castelnuovo_bound(1, 4) == 0);  // lines are rational
    CHECK(castelnuovo_bound(1, 3) == 0);
    for (long long d = 6; d <= 100; ++d) CHECK(castelnuovo_bound(d, 4) <= castelnuovo_bound(d, 3));
    CHECK_THROWS_AS(castelnuovo_bound(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(castelnuovo_bound(5, 5), std::invalid_argument);
}

TEST_CASE("tau table") {
    CHECK(tau_max_genus(1) == 0);
    CHECK(tau_max_genus(2) == 0);
    CHECK(tau_max_genus(3) == 1);
    CHECK(tau_max_genus(4) == 1);
    CHECK(tau_max_genus(5) == 2);
    CHECK(tau_max_genus(6) == 4);
    for (long long d = 4; d <= 6; ++d) CHECK(tau_max_genus(d) == castelnuovo_bound(d, 3));
    CHECK_THROWS_AS(tau_max_genus(0), std::out_of_range);
    CHECK_THROWS_AS(tau_max_genus(7), std::out_of_range);
}

TEST_CASE("bundled invariants") {
    BlowupInvariants b = blowup_invariants({2, 6});
    CHECK(b.anticanonical_cube == 2);
    CHECK(b.k2e == 10);
    CHECK(*b.secant_count == 39);
    CHECK(*b.dim_anticanonical == 3);

    BlowupInvariants neg = blowup_invariants({0, 6});
    CHECK_FALSE(neg.dim_anticanonical.has_value());
}
