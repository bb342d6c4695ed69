#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eps/black_scholes.hpp"
#include "eps/default_risk.hpp"
#include "eps/merton.hpp"
#include "eps/payoff.hpp"

namespace eps {

struct HedgeLeg {
    OptionKind kind;
    double strike;
    double quantity;  // signed, per unit nominal
};

// Buy-and-hold vanilla portfolio replicating -psi(R_T).
struct HedgePortfolio {
    std::vector<HedgeLeg> legs;
};

// Jump treatment selected by a pricing engine.
enum class JumpMode { none, at_most_one, exactly_one, full };

JumpMode jump_mode_from_string(const std::string& s);
const char* to_string(JumpMode m);

// Pricing engine for hedge legs. Long puts are discounted by the
// counterparty's default intensity, short puts by the provider's; calls are
// never discounted unless default_all_legs is set (the random-time-only
// convention, where every leg carries the same intensity).
struct Engine {
    JumpMode mode = JumpMode::none;
    std::optional<JumpParams> jumps;
    DefaultParams defaults;
    bool default_all_legs = false;

    static Engine from_tag(const std::string& tag, const std::optional<JumpParams>& jumps,
                           const DefaultParams& defaults);
};

struct PremiumReport {
    double hedge_cost;          // H(0) under the selected engine
    double fair_premium;        // c-hat = H(0)
    double default_adjustment;  // DA
    double adjusted_premium;    // c^D = H(0) + e^{-rT} DA
    double super_premium;       // c^{SD}
    std::string engine_tag;
    double first_loss_level;    // l-hat
    double first_loss_rate;     // p-hat
};

HedgePortfolio build_hedge(const EpsSpec& spec, double spot);

// Terminal payoff of the portfolio at return r_t; equals -psi(r_t).
double hedge_payoff(const HedgePortfolio& port, double spot, double r_t);

// Signed sum of leg quantities times engine prices. protection_only skips
// call legs (diagnostic used for one published table column).
double hedge_cost(const HedgePortfolio& port, const MarketParams& mkt, const Engine& engine,
                  bool protection_only = false);

// Price of a single leg (per option) under an engine.
double leg_price(const HedgeLeg& leg, const MarketParams& mkt, const Engine& engine);

// CF_T(c, H) = (c - H(0)) e^{rT} + H(T) + psi(R_T).
double hedged_cash_flow(const EpsSpec& spec, const HedgePortfolio& port, double premium,
                        double hedge_cost0, const MarketParams& mkt, double r_t);

// CF_T^D(c, H) = (c - H(0)) e^{rT} - p-hat (l-hat - R_T)^+ after the
// counterparty defaulted on the long puts.
double defaulted_cash_flow(const EpsSpec& spec, double premium, double hedge_cost0,
                           const MarketParams& mkt, double r_t);

// (l-hat, p-hat): upper edge of the first loss interval with a positive
// participation, and that rate.
struct FirstProtection {
    double level;
    double rate;
};
std::optional<FirstProtection> first_protection_level(const EpsSpec& spec);

// Expected residual after-hedge loss caused by counterparty default,
// future-valued at T. jump_mode selects the conditioning of the severity.
double default_adjustment(const EpsSpec& spec, const MarketParams& mkt,
                          const std::optional<JumpParams>& jp, double gamma_counterparty,
                          JumpMode jump_mode);

PremiumReport premium_report(const EpsSpec& spec, const MarketParams& mkt,
                             const std::optional<JumpParams>& jp,
                             const DefaultParams& defaults, const Engine& engine);

}  // namespace eps
