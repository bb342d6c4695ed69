#include "eps/mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace eps {

void SimConfig::validate() const {
    if (paths < 1000) throw DomainError("SimConfig: need at least 1000 paths");
    if (n_jumps < 0) throw DomainError("SimConfig: n_jumps must be >= 0");
}

namespace {

constexpr std::size_t kBlock = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Uniforms {
    std::mt19937_64 rng;
    explicit Uniforms(std::uint64_t seed) : rng(seed) {}
    double next() {
        // 53-bit uniform, clamped inside (0, 1) for the quantile transform.
        double u = (rng() >> 11) * 0x1.0p-53;
        return std::min(std::max(u, 1e-16), 1.0 - 1e-16);
    }
};

int draw_jump_count(Uniforms& rng, const JumpParams& jp, const SimConfig& cfg, double T) {
    switch (cfg.conditioning) {
        case Conditioning::exactly_n:
            return cfg.n_jumps;
        case Conditioning::at_most_one: {
            const double lT = jp.lambda * T;
            return rng.next() < lT / (1.0 + lT) ? 1 : 0;
        }
        case Conditioning::unconditional:
        default: {
            const double lT = jp.lambda * T;
            if (lT == 0.0) return 0;
            const double u = rng.next();
            double pmf = std::exp(-lT);
            double cdf = pmf;
            int n = 0;
            while (u > cdf && n < 400) {
                ++n;
                pmf *= lT / n;
                cdf += pmf;
            }
            return n;
        }
    }
}

// One antithetic pair of log-return exponents (diffusion + jumps), sharing a
// jump count; without antithetics only the first entry is used.
struct PathPair {
    double a;
    double b;
};

PathPair draw_exponents(Uniforms& rng, const MarketParams& mkt, const JumpParams& jp,
                        const SimConfig& cfg) {
    const double T = mkt.maturity;
    const double mu_j = compensator(jp);
    const double drift = (mkt.rate + mu_j - 0.5 * mkt.sigma * mkt.sigma) * T;
    const double vol = mkt.sigma * std::sqrt(T);
    const int n = draw_jump_count(rng, jp, cfg, T);
    const double z = std_normal_ppf(rng.next());
    double jumps = 0.0;
    double jumps_anti = 0.0;
    for (int i = 0; i < n; ++i) {
        const double y = jp.alpha + jp.delta * std_normal_ppf(rng.next());
        jumps += y;
        jumps_anti += 2.0 * jp.alpha - y;  // mirrored around the jump mean
    }
    return {drift + vol * z + jumps, drift - vol * z + jumps_anti};
}

McEstimate finish(double sum, double sum_sq, std::size_t n, const SimConfig& cfg) {
    McEstimate est;
    est.value = sum / n;
    const double var = std::max(sum_sq / n - est.value * est.value, 0.0);
    est.std_error = std::sqrt(var / n);
    est.paths = cfg.paths;
    est.seed = cfg.seed;
    return est;
}

// Runs fn over every path observation (pair-averaged when antithetic) and
// returns mean and standard error. Observations are reduced in ascending
// block order for reproducibility.
template <typename PayoffFn>
McEstimate estimate(const MarketParams& mkt, const JumpParams& jp, const SimConfig& cfg,
                    PayoffFn&& fn) {
    cfg.validate();
    mkt.validate();
    jp.validate();
    const std::size_t draws = cfg.antithetic ? (cfg.paths + 1) / 2 : cfg.paths;
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t done = 0;
    for (std::size_t block = 0; done < draws; ++block) {
        Uniforms rng(splitmix64(cfg.seed ^ (0x51ed2701ULL + block)));
        const std::size_t count = std::min(kBlock, draws - done);
        for (std::size_t i = 0; i < count; ++i) {
            const PathPair pp = draw_exponents(rng, mkt, jp, cfg);
            double obs = fn(mkt.spot * std::exp(pp.a));
            if (cfg.antithetic) obs = 0.5 * (obs + fn(mkt.spot * std::exp(pp.b)));
            sum += obs;
            sum_sq += obs * obs;
        }
        done += count;
    }
    return finish(sum, sum_sq, draws, cfg);
}

}  // namespace

std::vector<double> simulate_terminal(const MarketParams& mkt, const JumpParams& jp,
                                      const SimConfig& cfg) {
    cfg.validate();
    mkt.validate();
    jp.validate();
    std::vector<double> out;
    out.reserve(cfg.paths);
    const std::size_t draws = cfg.antithetic ? (cfg.paths + 1) / 2 : cfg.paths;
    std::size_t done = 0;
    for (std::size_t block = 0; done < draws; ++block) {
        Uniforms rng(splitmix64(cfg.seed ^ (0x51ed2701ULL + block)));
        const std::size_t count = std::min(kBlock, draws - done);
        for (std::size_t i = 0; i < count; ++i) {
            const PathPair pp = draw_exponents(rng, mkt, jp, cfg);
            out.push_back(mkt.spot * std::exp(pp.a));
            if (cfg.antithetic && out.size() < cfg.paths)
                out.push_back(mkt.spot * std::exp(pp.b));
        }
        done += count;
    }
    return out;
}

McEstimate mc_option_price(const MarketParams& mkt, const JumpParams& jp,
                           const SimConfig& cfg, double strike, OptionKind kind) {
    if (!(strike > 0.0)) throw DomainError("mc_option_price: strike must be positive");
    const double df = std::exp(-mkt.rate * mkt.maturity);
    return estimate(mkt, jp, cfg, [&](double s_t) {
        const double payoff = kind == OptionKind::call ? std::max(s_t - strike, 0.0)
                                                       : std::max(strike - s_t, 0.0);
        return df * payoff;
    });
}

DaEstimates mc_default_adjustment(const MarketParams& mkt,
                                  const std::optional<JumpParams>& jp,
                                  double gamma_counterparty, const EpsSpec& spec,
                                  const SimConfig& cfg) {
    const auto fp = first_protection_level(spec);
    if (!fp) throw DomainError("mc_default_adjustment: spec has no protection leg");
    const JumpParams jumps = jp.value_or(JumpParams{});
    const double pd = default_probability(gamma_counterparty, mkt.maturity);
    const double level = fp->level;
    const double rate = fp->rate;

    DaEstimates out;
    out.partial_expectation = estimate(mkt, jumps, cfg, [&](double s_t) {
        const double ret = s_t / mkt.spot - 1.0;
        return ret <= level ? pd * rate * (s_t / mkt.spot) : 0.0;
    });
    SimConfig cfg2 = cfg;
    cfg2.seed = splitmix64(cfg.seed ^ 0xda5e11ULL);
    out.shortfall = estimate(mkt, jumps, cfg2, [&](double s_t) {
        const double ret = s_t / mkt.spot - 1.0;
        return pd * rate * std::max(level - ret, 0.0);
    });
    return out;
}

CashflowSummary mc_hedged_cashflow_distribution(const EpsSpec& spec,
                                                const HedgePortfolio& port, double premium,
                                                double hedge_cost0, const MarketParams& mkt,
                                                const std::optional<JumpParams>& jp,
                                                double gamma_counterparty,
                                                const SimConfig& cfg) {
    cfg.validate();
    const JumpParams jumps = jp.value_or(JumpParams{});
    const double pd = default_probability(gamma_counterparty, mkt.maturity);

    std::vector<double> samples = simulate_terminal(mkt, jumps, cfg);
    Uniforms default_rng(splitmix64(cfg.seed ^ 0xdefa17ULL));
    std::vector<double> flows;
    flows.reserve(samples.size());
    for (double s_t : samples) {
        const double ret = s_t / mkt.spot - 1.0;
        const bool defaulted = default_rng.next() < pd;
        flows.push_back(defaulted
                            ? defaulted_cash_flow(spec, premium, hedge_cost0, mkt, ret)
                            : hedged_cash_flow(spec, port, premium, hedge_cost0, mkt, ret));
    }
    CashflowSummary summary;
    double sum = 0.0, sum_sq = 0.0;
    for (double f : flows) {
        sum += f;
        sum_sq += f * f;
    }
    const double n = static_cast<double>(flows.size());
    summary.mean = sum / n;
    summary.std_error = std::sqrt(std::max(sum_sq / n - summary.mean * summary.mean, 0.0) / n);
    std::sort(flows.begin(), flows.end());
    summary.min = flows.front();
    summary.q05 = flows[static_cast<std::size_t>(0.05 * (flows.size() - 1))];
    summary.median = flows[flows.size() / 2];
    return summary;
}

}  // namespace eps
