#include "eps/default_risk.hpp"

#include <cmath>

namespace eps {

void DefaultParams::validate() const {
    if (!(gamma_counterparty >= 0.0))
        throw DomainError("DefaultParams: gamma_counterparty must be >= 0");
    if (!(gamma_provider >= 0.0))
        throw DomainError("DefaultParams: gamma_provider must be >= 0");
}

double survival_probability(double gamma, double t) {
    if (!(gamma >= 0.0)) throw DomainError("survival_probability: gamma must be >= 0");
    if (!(t >= 0.0)) throw DomainError("survival_probability: t must be >= 0");
    return std::exp(-gamma * t);
}

double survival_probability(const std::vector<IntensitySegment>& schedule, double t) {
    if (!(t >= 0.0)) throw DomainError("survival_probability: t must be >= 0");
    double hazard = 0.0;
    double elapsed = 0.0;
    for (const auto& seg : schedule) {
        if (!(seg.duration >= 0.0) || !(seg.gamma >= 0.0))
            throw DomainError("survival_probability: schedule entries must be >= 0");
        const double dt = std::min(seg.duration, t - elapsed);
        if (dt <= 0.0) break;
        hazard += seg.gamma * dt;
        elapsed += dt;
    }
    if (!schedule.empty() && t > elapsed) hazard += schedule.back().gamma * (t - elapsed);
    return std::exp(-hazard);
}

double default_probability(double gamma, double maturity) {
    return 1.0 - survival_probability(gamma, maturity);
}

double defaultable_price(double base_price, double gamma, double maturity) {
    if (!(base_price >= 0.0)) throw DomainError("defaultable_price: price must be >= 0");
    return survival_probability(gamma, maturity) * base_price;
}

}  // namespace eps
