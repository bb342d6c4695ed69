#pragma once

#include <complex>
#include <string>

#include "eps/black_scholes.hpp"

namespace eps {

// Convention for the drift correction that compensates the jump part.
// `exact` keeps the discounted stock a martingale; `paper_approx` uses the
// first-order -lambda*alpha shortcut quoted alongside some published tables.
enum class CompensatorMode { exact, paper_approx };

CompensatorMode compensator_mode_from_string(const std::string& s);
const char* to_string(CompensatorMode m);

// Compound Poisson jumps with normal log-jump sizes Y ~ N(alpha, delta^2).
struct JumpParams {
    double lambda = 0.0;  // jumps per year
    double alpha = 0.0;   // mean log-jump size
    double delta = 0.0;   // log-jump stdev
    CompensatorMode mode = CompensatorMode::exact;
    int n_max = 20;
    double tail_tol = 1e-12;

    void validate() const;
};

// Quantities derived from JumpParams that the pricing series reuses.
struct JumpDerived {
    double mu_j;          // compensator
    double zeta;          // mean relative jump e^{alpha+delta^2/2} - 1
    double lambda_prime;  // lambda * e^{alpha+delta^2/2}
    double half_law;      // alpha + delta^2/2
    double delta;

    double rate_n(const MarketParams& mkt, int n) const;   // per-n drift r_n
    double sigma_n(const MarketParams& mkt, int n) const;  // per-n volatility
};

double compensator(const JumpParams& jp);
JumpDerived derive(const JumpParams& jp);

// Poisson-weighted Black-Scholes series (weights in lambda'), truncated at
// n_max or once the weight tail drops below tail_tol.
double merton_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                    OptionKind kind);

// Price conditional on exactly n jumps: e^{(r_n - r)T} * BS(S, K, r_n, sigma_n, T).
double conditional_n_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                           int n, OptionKind kind);

// Closed form for the exactly-one-jump conditioning; coincides with
// conditional_n_price(n = 1).
double exactly_one_jump_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                              OptionKind kind);

// Renormalized mixture of the zero- and one-jump conditional prices.
double at_most_one_jump_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                              OptionKind kind);

enum class ParityModel { full, exactly_one, at_most_one };

// call - put - e^{-rT}(E[S_T | conditioning] - K) under the model's own
// conditional terminal mean.
double parity_gap(const MarketParams& mkt, const JumpParams& jp, double strike,
                  ParityModel model);

// Conditional terminal mean E[S_T | conditioning] used by parity_gap.
double conditional_terminal_mean(const MarketParams& mkt, const JumpParams& jp,
                                 ParityModel model);

// Characteristic function of x_T = log(S_T / (S_0 e^{rT})).
std::complex<double> characteristic_function(const MarketParams& mkt, const JumpParams& jp,
                                             double u);

}  // namespace eps
