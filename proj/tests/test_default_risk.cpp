#include <doctest.h>

#include <cmath>

#include "eps/default_risk.hpp"
#include "test_util.hpp"

using namespace eps;

TEST_CASE("constant intensity survival") {
    CHECK_CLOSE(survival_probability(0.1, 1.0), 0.9048374180359595, 1e-14);
    CHECK_CLOSE(survival_probability(0.0, 5.0), 1.0, 0.0);
    CHECK_CLOSE(survival_probability(0.3, 0.0), 1.0, 0.0);
    CHECK_CLOSE(default_probability(0.1, 1.0), 1.0 - 0.9048374180359595, 1e-14);
}

TEST_CASE("piecewise schedule is multiplicative") {
    const std::vector<IntensitySegment> schedule{{0.5, 0.1}, {0.5, 0.3}, {1.0, 0.05}};
    CHECK_CLOSE(survival_probability(schedule, 2.0),
                std::exp(-(0.05 + 0.15 + 0.05)), 1e-14);
    // within a segment
    CHECK_CLOSE(survival_probability(schedule, 0.75),
                std::exp(-(0.05 + 0.25 * 0.3)), 1e-14);
    // past the schedule the last intensity extends
    CHECK_CLOSE(survival_probability(schedule, 3.0),
                std::exp(-(0.05 + 0.15 + 0.05 + 0.05)), 1e-14);
    // flat schedule matches the constant form
    const std::vector<IntensitySegment> flat{{10.0, 0.2}};
    for (double t : {0.1, 1.0, 4.0})
        CHECK_CLOSE(survival_probability(flat, t), survival_probability(0.2, t), 1e-15);
}

TEST_CASE("zero recovery discounting") {
    CHECK_CLOSE(defaultable_price(8.6728, 0.1, 1.0), 8.6728 * std::exp(-0.1), 1e-12);
    CHECK_CLOSE(defaultable_price(5.0, 0.0, 1.0), 5.0, 0.0);
    // discounting twice composes
    CHECK_CLOSE(defaultable_price(defaultable_price(3.0, 0.1, 2.0), 0.2, 2.0),
                defaultable_price(3.0, 0.3, 2.0), 1e-12);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(survival_probability(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(survival_probability(0.1, -1.0), DomainError);
    CHECK_THROWS_AS(defaultable_price(-1.0, 0.1, 1.0), DomainError);
    DefaultParams bad{-0.1, 0.0};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
