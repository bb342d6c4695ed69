#include "eps/hedging.hpp"

#include <cmath>

namespace eps {

JumpMode jump_mode_from_string(const std::string& s) {
    if (s == "none") return JumpMode::none;
    if (s == "at_most_one") return JumpMode::at_most_one;
    if (s == "exactly_one") return JumpMode::exactly_one;
    if (s == "full") return JumpMode::full;
    throw ConfigError("unknown jump mode: " + s);
}

const char* to_string(JumpMode m) {
    switch (m) {
        case JumpMode::none: return "none";
        case JumpMode::at_most_one: return "at_most_one";
        case JumpMode::exactly_one: return "exactly_one";
        default: return "full";
    }
}

Engine Engine::from_tag(const std::string& tag, const std::optional<JumpParams>& jumps,
                        const DefaultParams& defaults) {
    Engine e;
    e.jumps = jumps;
    auto need_jumps = [&] {
        if (!jumps) throw ConfigError("engine '" + tag + "' requires a jump section");
    };
    if (tag == "vanilla") {
        e.mode = JumpMode::none;
    } else if (tag == "merton") {
        need_jumps();
        e.mode = JumpMode::full;
    } else if (tag == "exactly_one_jump") {
        need_jumps();
        e.mode = JumpMode::exactly_one;
    } else if (tag == "at_most_one_jump") {
        need_jumps();
        e.mode = JumpMode::at_most_one;
    } else if (tag == "vanilla_with_default") {
        e.mode = JumpMode::none;
        e.defaults = defaults;
    } else if (tag == "merton_with_default") {
        need_jumps();
        e.mode = JumpMode::full;
        e.defaults = defaults;
    } else if (tag == "at_most_one_with_default") {
        need_jumps();
        e.mode = JumpMode::at_most_one;
        e.defaults = defaults;
    } else if (tag == "exactly_one_with_default") {
        need_jumps();
        e.mode = JumpMode::exactly_one;
        e.defaults = defaults;
    } else if (tag == "random_time") {
        e.mode = JumpMode::none;
        e.defaults = defaults;
        e.default_all_legs = true;
    } else {
        throw ConfigError("unknown engine tag: " + tag);
    }
    return e;
}

HedgePortfolio build_hedge(const EpsSpec& spec, double spot) {
    spec.validate();
    if (!(spot > 0.0)) throw DomainError("build_hedge: spot must be positive");
    HedgePortfolio port;

    // Puts at K_i^l = S_0 (1 + l_i), quantity (p_{i+1} - p_i) / S_0, l_0 = 0.
    double prev_rate = 0.0;
    for (std::size_t i = 0; i < spec.protection_rates.size(); ++i) {
        const double level = i == 0 ? 0.0 : spec.protection_levels[i - 1];
        const double qty = (spec.protection_rates[i] - prev_rate) / spot;
        prev_rate = spec.protection_rates[i];
        if (qty != 0.0)
            port.legs.push_back({OptionKind::put, spot * (1.0 + level), qty});
    }
    // Calls at K_j^g = S_0 (1 + g_j), quantity -(f_{j+1} - f_j) / S_0, g_0 = 0.
    prev_rate = 0.0;
    for (std::size_t j = 0; j < spec.fee_rates.size(); ++j) {
        const double level = j == 0 ? 0.0 : spec.fee_levels[j - 1];
        const double qty = -(spec.fee_rates[j] - prev_rate) / spot;
        prev_rate = spec.fee_rates[j];
        if (qty != 0.0)
            port.legs.push_back({OptionKind::call, spot * (1.0 + level), qty});
    }
    return port;
}

double hedge_payoff(const HedgePortfolio& port, double spot, double r_t) {
    const double terminal = spot * (1.0 + r_t);
    double value = 0.0;
    for (const auto& leg : port.legs) {
        const double intrinsic = leg.kind == OptionKind::put
                                     ? std::max(leg.strike - terminal, 0.0)
                                     : std::max(terminal - leg.strike, 0.0);
        value += leg.quantity * intrinsic;
    }
    return value;
}

namespace {

double base_price(const MarketParams& mkt, const Engine& engine, double strike,
                  OptionKind kind) {
    switch (engine.mode) {
        case JumpMode::none:
            return bs_price(mkt, strike, kind);
        case JumpMode::at_most_one:
            return at_most_one_jump_price(mkt, *engine.jumps, strike, kind);
        case JumpMode::exactly_one:
            return exactly_one_jump_price(mkt, *engine.jumps, strike, kind);
        case JumpMode::full:
        default:
            return merton_price(mkt, *engine.jumps, strike, kind);
    }
}

}  // namespace

double leg_price(const HedgeLeg& leg, const MarketParams& mkt, const Engine& engine) {
    if (engine.mode != JumpMode::none && !engine.jumps)
        throw ConfigError("leg_price: engine needs jump parameters");
    engine.defaults.validate();
    double price = base_price(mkt, engine, leg.strike, leg.kind);
    const double T = mkt.maturity;
    if (leg.kind == OptionKind::put) {
        const double gamma = leg.quantity >= 0.0 ? engine.defaults.gamma_counterparty
                                                 : engine.defaults.gamma_provider;
        price = defaultable_price(price, gamma, T);
    } else if (engine.default_all_legs) {
        price = defaultable_price(price, engine.defaults.gamma_counterparty, T);
    }
    return price;
}

double hedge_cost(const HedgePortfolio& port, const MarketParams& mkt, const Engine& engine,
                  bool protection_only) {
    double cost = 0.0;
    for (const auto& leg : port.legs) {
        if (protection_only && leg.kind == OptionKind::call) continue;
        cost += leg.quantity * leg_price(leg, mkt, engine);
    }
    return cost;
}

double hedged_cash_flow(const EpsSpec& spec, const HedgePortfolio& port, double premium,
                        double hedge_cost0, const MarketParams& mkt, double r_t) {
    return (premium - hedge_cost0) * std::exp(mkt.rate * mkt.maturity) +
           hedge_payoff(port, mkt.spot, r_t) + adjusted_return(spec, r_t);
}

double defaulted_cash_flow(const EpsSpec& spec, double premium, double hedge_cost0,
                           const MarketParams& mkt, double r_t) {
    if (!(r_t > -1.0)) throw DomainError("defaulted_cash_flow: return must exceed -1");
    const double surplus = (premium - hedge_cost0) * std::exp(mkt.rate * mkt.maturity);
    const auto fp = first_protection_level(spec);
    if (!fp) return surplus;
    return surplus - fp->rate * std::max(fp->level - r_t, 0.0);
}

std::optional<FirstProtection> first_protection_level(const EpsSpec& spec) {
    spec.validate();
    for (std::size_t i = 0; i < spec.protection_rates.size(); ++i) {
        if (spec.protection_rates[i] > 0.0) {
            const double level = i == 0 ? 0.0 : spec.protection_levels[i - 1];
            return FirstProtection{level, spec.protection_rates[i]};
        }
    }
    return std::nullopt;
}

namespace {

// e^{r_c T} N((ln(1+l-hat) - (r_c + sigma_c^2/2) T) / (sigma_c sqrt(T))):
// future value of the partial expectation of S_T / S_0 on the loss region,
// under drift r_c and volatility sigma_c.
double severity_kernel(double level, double rate_c, double sigma_c, double T) {
    const double d = (std::log1p(level) - (rate_c + 0.5 * sigma_c * sigma_c) * T) /
                     (sigma_c * std::sqrt(T));
    return std::exp(rate_c * T) * std_normal_cdf(d);
}

}  // namespace

double default_adjustment(const EpsSpec& spec, const MarketParams& mkt,
                          const std::optional<JumpParams>& jp, double gamma_counterparty,
                          JumpMode jump_mode) {
    mkt.validate();
    if (!(gamma_counterparty >= 0.0))
        throw DomainError("default_adjustment: gamma must be >= 0");
    const auto fp = first_protection_level(spec);
    if (!fp) return 0.0;
    if (!(1.0 + fp->level > 0.0))
        throw DomainError("default_adjustment: 1 + l-hat must be positive");
    const double pd = default_probability(gamma_counterparty, mkt.maturity);
    const double T = mkt.maturity;

    double severity;
    if (jump_mode == JumpMode::none) {
        severity = severity_kernel(fp->level, mkt.rate, mkt.sigma, T);
    } else {
        if (!jp) throw ConfigError("default_adjustment: jump mode needs jump parameters");
        const JumpDerived d = derive(*jp);
        auto cond = [&](int n) {
            return severity_kernel(fp->level, d.rate_n(mkt, n), d.sigma_n(mkt, n), T);
        };
        const double lT = jp->lambda * T;
        switch (jump_mode) {
            case JumpMode::exactly_one:
                severity = cond(1);
                break;
            case JumpMode::at_most_one:
                severity = (cond(0) + lT * cond(1)) / (1.0 + lT);
                break;
            case JumpMode::full:
            default: {
                severity = 0.0;
                double weight = std::exp(-lT);
                for (int n = 0; n <= jp->n_max; ++n) {
                    if (n > 0) weight *= lT / n;
                    if (n > lT && weight < jp->tail_tol) break;
                    severity += weight * cond(n);
                }
                break;
            }
        }
    }
    return pd * fp->rate * severity;
}

PremiumReport premium_report(const EpsSpec& spec, const MarketParams& mkt,
                             const std::optional<JumpParams>& jp,
                             const DefaultParams& defaults, const Engine& engine) {
    PremiumReport rep;
    const HedgePortfolio port = build_hedge(spec, mkt.spot);
    rep.hedge_cost = hedge_cost(port, mkt, engine);
    rep.fair_premium = rep.hedge_cost;
    rep.default_adjustment =
        default_adjustment(spec, mkt, jp, defaults.gamma_counterparty, engine.mode);
    const double df = std::exp(-mkt.rate * mkt.maturity);
    rep.adjusted_premium = rep.hedge_cost + df * rep.default_adjustment;
    const auto fp = first_protection_level(spec);
    rep.first_loss_level = fp ? fp->level : 0.0;
    rep.first_loss_rate = fp ? fp->rate : 0.0;
    const double worst = fp ? fp->rate * (1.0 + fp->level) : 0.0;
    rep.super_premium =
        rep.hedge_cost +
        df * worst * default_probability(defaults.gamma_counterparty, mkt.maturity);
    rep.engine_tag = to_string(engine.mode);
    return rep;
}

}  // namespace eps
