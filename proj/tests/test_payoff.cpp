#include <doctest.h>

#include <random>

#include "eps/payoff.hpp"
#include "test_util.hpp"

using namespace eps;

TEST_CASE("adjusted return of the named products") {
    const EpsSpec buffer = make_buffer(-0.05, 0.10, 0.8, 0.5);
    CHECK(adjusted_return(buffer, 0.0) == 0.0);
    CHECK_CLOSE(adjusted_return(buffer, -0.03), 0.0, 1e-15);
    CHECK_CLOSE(adjusted_return(buffer, 0.07), 0.0, 1e-15);
    CHECK_CLOSE(adjusted_return(buffer, -0.30), -0.20, 1e-14);
    CHECK_CLOSE(adjusted_return(buffer, 0.20), 0.05, 1e-14);

    const EpsSpec floor = make_floor(-0.15, 0.8, 0.10, 0.5);
    CHECK_CLOSE(adjusted_return(floor, -0.10), -0.08, 1e-14);
    CHECK_CLOSE(adjusted_return(floor, -0.50), -0.12, 1e-14);
    CHECK_CLOSE(adjusted_return(floor, 0.30), 0.10, 1e-14);

    const EpsSpec fc = make_floor_cap(-0.10, 0.01, 0.008, 0.008);
    CHECK_CLOSE(adjusted_return(fc, -0.50), -0.0008, 1e-15);
    CHECK_CLOSE(adjusted_return(fc, 0.50), 0.00008, 1e-15);
    CHECK_CLOSE(adjusted_return(fc, -0.05), -0.0004, 1e-15);
}

TEST_CASE("legs decompose the adjusted return") {
    std::mt19937_64 rng(2024);
    for (int s = 0; s < 50; ++s) {
        const EpsSpec spec = testutil::random_spec(rng);
        for (int i = 0; i <= 200; ++i) {
            const double r = -0.99 + 1.99 * i / 200;
            const double psi = adjusted_return(spec, r);
            CHECK_CLOSE(protection_leg(spec, r) + fee_leg(spec, r), psi, 1e-14);
            CHECK(protection_leg(spec, r) <= 0.0);
            CHECK(fee_leg(spec, r) >= 0.0);
        }
    }
}

TEST_CASE("adjusted return is continuous and non-decreasing") {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 50; ++s) {
        const EpsSpec spec = testutil::random_spec(rng);
        CHECK(adjusted_return(spec, 0.0) == 0.0);
        double prev = adjusted_return(spec, -0.999);
        for (int i = 1; i <= 4000; ++i) {
            const double r = -0.999 + 2.0 * i / 4000;
            const double cur = adjusted_return(spec, r);
            CHECK(cur >= prev - 1e-14);
            CHECK(cur - prev <= 2.0 / 4000 + 1e-12);  // participation rates are at most one
            prev = cur;
        }
    }
}

TEST_CASE("invalid specs are rejected") {
    EpsSpec s = make_buffer(-0.05, 0.10, 0.8, 0.5);
    s.protection_rates[1] = 1.5;
    CHECK_THROWS_AS(s.validate(), ValidationError);

    s = make_buffer(-0.05, 0.10, 0.8, 0.5);
    s.protection_levels = {-0.05, -0.04};  // not decreasing
    s.protection_rates = {0.0, 0.5, 0.5};
    CHECK_THROWS_AS(s.validate(), ValidationError);

    s = make_buffer(-0.05, 0.10, 0.8, 0.5);
    s.fee_levels = {-0.1};
    s.fee_rates = {0.0, 0.5};
    CHECK_THROWS_AS(s.validate(), ValidationError);

    s = make_buffer(-0.05, 0.10, 0.8, 0.5);
    s.nominal = 0.0;
    CHECK_THROWS_AS(s.validate(), ValidationError);

    CHECK_THROWS_AS(protection_leg(make_buffer(-0.05, 0.10, 0.8, 0.5), -1.0), DomainError);
}

TEST_CASE("kind strings round trip") {
    for (EpsKind k : {EpsKind::buffer, EpsKind::floor, EpsKind::floor_cap, EpsKind::general})
        CHECK(eps_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(eps_kind_from_string("warrant"), ConfigError);
}
