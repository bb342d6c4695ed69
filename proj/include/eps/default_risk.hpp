#pragma once

#include <vector>

#include "eps/errors.hpp"

namespace eps {

// Constant Q-intensities of the exogenous default times of the put
// counterparty and of the EPS provider.
struct DefaultParams {
    double gamma_counterparty = 0.0;
    double gamma_provider = 0.0;

    void validate() const;
};

// P(tau > t) = e^{-gamma t} for a constant intensity.
double survival_probability(double gamma, double t);

// Deterministic piecewise-constant intensity: segments of (duration, gamma).
struct IntensitySegment {
    double duration;
    double gamma;
};
double survival_probability(const std::vector<IntensitySegment>& schedule, double t);

// P(tau < T) = 1 - e^{-gamma T}.
double default_probability(double gamma, double maturity);

// Zero-recovery discount of any base price: e^{-gamma T} * base.
double defaultable_price(double base_price, double gamma, double maturity);

}  // namespace eps
