#pragma once

#include <string>

#include "eps/errors.hpp"

namespace eps {

enum class OptionKind { call, put };

inline const char* to_string(OptionKind k) { return k == OptionKind::call ? "call" : "put"; }

// Flat market: spot, continuously compounded rate, lognormal volatility,
// maturity in years. Valuation is always at t = 0; time-t prices are obtained
// by passing the remaining maturity.
struct MarketParams {
    double spot = 100.0;
    double rate = 0.015;
    double sigma = 0.20;
    double maturity = 1.0;

    void validate() const;
};

// Standard normal cumulative distribution function, accurate to ~1e-15.
double std_normal_cdf(double x);

// Inverse of std_normal_cdf, accurate to ~1e-14 on (0, 1).
double std_normal_ppf(double p);

double bs_call(const MarketParams& mkt, double strike);
double bs_put(const MarketParams& mkt, double strike);
double bs_price(const MarketParams& mkt, double strike, OptionKind kind);

}  // namespace eps
