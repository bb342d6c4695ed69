#include <doctest.h>

#include <cmath>
#include <random>

#include "eps/black_scholes.hpp"
#include "test_util.hpp"

using namespace eps;

namespace {

const MarketParams kBase{100.0, 0.015, 0.20, 1.0};

// Discounted lognormal expectation of the payoff by Simpson quadrature in
// x = log S_T; independent of the closed form.
double quadrature_price(const MarketParams& mkt, double strike, OptionKind kind) {
    const double m =
        std::log(mkt.spot) + (mkt.rate - 0.5 * mkt.sigma * mkt.sigma) * mkt.maturity;
    const double s = mkt.sigma * std::sqrt(mkt.maturity);
    const double lo = m - 12.0 * s, hi = m + 12.0 * s;
    const int n = 20000;  // even
    const double h = (hi - lo) / n;
    auto f = [&](double x) {
        const double payoff = kind == OptionKind::call ? std::max(std::exp(x) - strike, 0.0)
                                                       : std::max(strike - std::exp(x), 0.0);
        const double z = (x - m) / s;
        return payoff * std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * M_PI));
    };
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return std::exp(-mkt.rate * mkt.maturity) * acc * h / 3.0;
}

}  // namespace

TEST_CASE("frozen at-the-money values") {
    CHECK_CLOSE(bs_call(kBase, 100.0), 8.6728260148, 1e-8);
    CHECK_CLOSE(bs_put(kBase, 100.0), 7.1840199751, 1e-8);
    CHECK_CLOSE(bs_put(kBase, 95.0), 4.9210443367, 1e-8);
    CHECK_CLOSE(bs_call(kBase, 110.0), 4.7750255005, 1e-8);
}

TEST_CASE("closed form agrees with lognormal quadrature") {
    for (double k : {80.0, 95.0, 100.0, 105.0, 120.0}) {
        for (OptionKind kind : {OptionKind::call, OptionKind::put})
            CHECK_CLOSE(bs_price(kBase, k, kind), quadrature_price(kBase, k, kind), 5e-6);
    }
}

TEST_CASE("normal cdf and quantile") {
    CHECK_CLOSE(std_normal_cdf(0.0), 0.5, 1e-15);
    CHECK_CLOSE(std_normal_cdf(1.96), 0.9750021048517795, 1e-12);
    CHECK_CLOSE(std_normal_ppf(0.975), 1.959963984540054, 1e-10);
    for (double x : {-3.0, -1.0, -0.1, 0.0, 0.4, 2.5}) {
        CHECK_CLOSE(std_normal_ppf(std_normal_cdf(x)), x, 1e-10);
        CHECK_CLOSE(std_normal_cdf(x) + std_normal_cdf(-x), 1.0, 1e-14);
    }
}

TEST_CASE("put call parity over random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> spot(10.0, 500.0), rate(-0.02, 0.10),
        sigma(0.05, 0.80), mat(0.05, 10.0), money(0.4, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const MarketParams mkt{spot(rng), rate(rng), sigma(rng), mat(rng)};
        const double k = money(rng) * mkt.spot;
        const double lhs = bs_call(mkt, k) - bs_put(mkt, k);
        const double rhs = mkt.spot - k * std::exp(-mkt.rate * mkt.maturity);
        CHECK_CLOSE(lhs, rhs, 1e-10 * mkt.spot);
    }
}

TEST_CASE("limits and domain checks") {
    CHECK_CLOSE(bs_call(kBase, 1e-8), kBase.spot, 1e-7);
    CHECK_CLOSE(bs_put(kBase, 1e-8), 0.0, 1e-9);

    MarketParams bad = kBase;
    bad.sigma = -0.1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kBase;
    bad.spot = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(std_normal_ppf(0.0), DomainError);
    CHECK_THROWS_AS(bs_call(kBase, -5.0), DomainError);
}
