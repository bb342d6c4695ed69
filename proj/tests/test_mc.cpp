#include <doctest.h>

#include <cmath>
#include <numeric>

#include "eps/mc.hpp"
#include "test_util.hpp"

using namespace eps;

namespace {

const MarketParams kBase{100.0, 0.015, 0.20, 1.0};

JumpParams jp(double lambda, double alpha, double delta) {
    JumpParams p;
    p.lambda = lambda;
    p.alpha = alpha;
    p.delta = delta;
    return p;
}

SimConfig sim(std::size_t paths, std::uint64_t seed) {
    SimConfig c;
    c.paths = paths;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("same seed reproduces bit identical estimates") {
    const JumpParams p = jp(0.2, -0.2, 0.1);
    const McEstimate a = mc_option_price(kBase, p, sim(50000, 42), 100.0, OptionKind::call);
    const McEstimate b = mc_option_price(kBase, p, sim(50000, 42), 100.0, OptionKind::call);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    const McEstimate c = mc_option_price(kBase, p, sim(50000, 43), 100.0, OptionKind::call);
    CHECK(a.value != c.value);
    CHECK(a.paths == 50000);
    CHECK(a.seed == 42);
}

TEST_CASE("discounted terminal value is a martingale") {
    const JumpParams p = jp(0.3, -0.25, 0.15);
    const auto draws = simulate_terminal(kBase, p, sim(400000, 7));
    double mean = 0.0, m2 = 0.0;
    std::size_t n = 0;
    for (double s : draws) {
        ++n;
        const double x = std::exp(-kBase.rate * kBase.maturity) * s;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    const double se = std::sqrt(m2 / (n - 1) / n);
    CHECK(std::fabs(mean - kBase.spot) < 4.0 * se);
}

TEST_CASE("estimates agree with the closed forms") {
    // pure diffusion
    const McEstimate bs = mc_option_price(kBase, jp(0.0, 0.0, 0.0), sim(400000, 11), 100.0,
                                          OptionKind::call);
    CHECK(std::fabs(bs.value - bs_price(kBase, 100.0, OptionKind::call)) <
          4.0 * bs.std_error);

    // jump diffusion
    const JumpParams p = jp(0.2, -0.2, 0.1);
    for (OptionKind kind : {OptionKind::call, OptionKind::put}) {
        const McEstimate est = mc_option_price(kBase, p, sim(400000, 17), 100.0, kind);
        CHECK(std::fabs(est.value - merton_price(kBase, p, 100.0, kind)) <
              4.0 * est.std_error);
    }
}

TEST_CASE("conditional simulation matches the conditional closed form") {
    const JumpParams p = jp(0.2, -0.2, 0.1);
    SimConfig c = sim(400000, 23);
    c.conditioning = Conditioning::exactly_n;
    c.n_jumps = 2;
    const McEstimate est = mc_option_price(kBase, p, c, 100.0, OptionKind::call);
    const double closed = conditional_n_price(kBase, p, 100.0, 2, OptionKind::call);
    CHECK_CLOSE(closed, 0.7654405617, 1e-8);  // frozen
    CHECK(std::fabs(est.value - closed) < 4.0 * est.std_error);

    c.conditioning = Conditioning::at_most_one;
    c.n_jumps = 0;
    const McEstimate amo = mc_option_price(kBase, p, c, 100.0, OptionKind::put);
    CHECK(std::fabs(amo.value - at_most_one_jump_price(kBase, p, 100.0, OptionKind::put)) <
          4.0 * amo.std_error);
}

TEST_CASE("antithetic variates stay unbiased and cut the error") {
    SimConfig plain = sim(200000, 31);
    SimConfig anti = plain;
    anti.antithetic = true;
    const JumpParams none = jp(0.0, 0.0, 0.0);
    const McEstimate a = mc_option_price(kBase, none, plain, 100.0, OptionKind::call);
    const McEstimate b = mc_option_price(kBase, none, anti, 100.0, OptionKind::call);
    const double closed = bs_price(kBase, 100.0, OptionKind::call);
    CHECK(std::fabs(a.value - closed) < 4.0 * a.std_error);
    CHECK(std::fabs(b.value - closed) < 4.0 * b.std_error);
    CHECK(b.std_error < a.std_error);
}

TEST_CASE("default adjustment estimator brackets the closed form") {
    const EpsSpec spec = make_buffer(-0.05, 0.10, 0.8, 0.5);
    const std::optional<JumpParams> p = jp(0.1, -0.2, 0.1);
    const DaEstimates est = mc_default_adjustment(kBase, p, 0.05, spec, sim(400000, 37));
    const double closed = default_adjustment(spec, kBase, p, 0.05, JumpMode::full);
    CHECK(std::fabs(est.partial_expectation.value - closed) <
          4.0 * est.partial_expectation.std_error);
    CHECK(est.shortfall.value >= 0.0);
}

TEST_CASE("cash flow distribution at the fair premium") {
    const EpsSpec spec = make_buffer(-0.05, 0.10, 0.8, 0.5);
    const HedgePortfolio port = build_hedge(spec, kBase.spot);
    const double h0 = hedge_cost(port, kBase, Engine{});
    const CashflowSummary s = mc_hedged_cashflow_distribution(
        spec, port, h0, h0, kBase, std::nullopt, 0.0, sim(100000, 41));
    // perfectly hedged without default: identically zero
    CHECK_CLOSE(s.mean, 0.0, 1e-10);
    CHECK_CLOSE(s.min, 0.0, 1e-10);
}

TEST_CASE("config validation") {
    SimConfig c = sim(0, 1);
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = sim(1000, 1);
    c.conditioning = Conditioning::exactly_n;
    c.n_jumps = -1;
    CHECK_THROWS_AS(c.validate(), DomainError);
}
