#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eps/hedging.hpp"
#include "eps/merton.hpp"
#include "eps/payoff.hpp"

namespace eps {

enum class Conditioning { unconditional, exactly_n, at_most_one };

// Terminal-value simulation settings. Deterministic for a fixed seed.
struct SimConfig {
    std::size_t paths = 1'000'000;
    std::uint64_t seed = 1;
    Conditioning conditioning = Conditioning::unconditional;
    int n_jumps = 0;  // used with exactly_n
    bool antithetic = false;

    void validate() const;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t paths = 0;
    std::uint64_t seed = 0;
};

// Draws of S_T under the risk-neutral jump-diffusion terminal law.
std::vector<double> simulate_terminal(const MarketParams& mkt, const JumpParams& jp,
                                      const SimConfig& cfg);

McEstimate mc_option_price(const MarketParams& mkt, const JumpParams& jp,
                           const SimConfig& cfg, double strike, OptionKind kind);

// Both labeled variants of the default adjustment: the partial-expectation
// form used by the closed formula, and the expected-shortfall form.
struct DaEstimates {
    McEstimate partial_expectation;
    McEstimate shortfall;
};
DaEstimates mc_default_adjustment(const MarketParams& mkt,
                                  const std::optional<JumpParams>& jp,
                                  double gamma_counterparty, const EpsSpec& spec,
                                  const SimConfig& cfg);

struct CashflowSummary {
    double mean = 0.0;
    double std_error = 0.0;
    double min = 0.0;
    double q05 = 0.0;
    double median = 0.0;
};
CashflowSummary mc_hedged_cashflow_distribution(const EpsSpec& spec,
                                                const HedgePortfolio& port, double premium,
                                                double hedge_cost0, const MarketParams& mkt,
                                                const std::optional<JumpParams>& jp,
                                                double gamma_counterparty,
                                                const SimConfig& cfg);

}  // namespace eps
