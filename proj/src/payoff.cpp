#include "eps/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eps {

EpsKind eps_kind_from_string(const std::string& s) {
    if (s == "buffer") return EpsKind::buffer;
    if (s == "floor") return EpsKind::floor;
    if (s == "floor_cap") return EpsKind::floor_cap;
    if (s == "general") return EpsKind::general;
    throw ConfigError("unknown EPS kind: " + s);
}

const char* to_string(EpsKind k) {
    switch (k) {
        case EpsKind::buffer: return "buffer";
        case EpsKind::floor: return "floor";
        case EpsKind::floor_cap: return "floor_cap";
        default: return "general";
    }
}

void EpsSpec::validate() const {
    if (protection_rates.size() != protection_levels.size() + 1)
        throw ValidationError("EpsSpec: need one more protection rate than levels");
    if (fee_rates.size() != fee_levels.size() + 1)
        throw ValidationError("EpsSpec: need one more fee rate than levels");
    if (!(nominal > 0.0)) throw ValidationError("EpsSpec: nominal must be positive");

    double prev = 0.0;
    for (double l : protection_levels) {
        if (!(l < prev)) throw ValidationError("EpsSpec: protection levels must decrease from 0");
        if (!(l > -1.0)) throw ValidationError("EpsSpec: protection levels must exceed -1");
        prev = l;
    }
    prev = 0.0;
    for (double g : fee_levels) {
        if (!(g > prev)) throw ValidationError("EpsSpec: fee levels must increase from 0");
        prev = g;
    }
    for (double p : protection_rates)
        if (!(p >= 0.0 && p <= 1.0))
            throw ValidationError("EpsSpec: protection rates must lie in [0, 1]");
    for (double f : fee_rates)
        if (!(f >= 0.0 && f <= 1.0))
            throw ValidationError("EpsSpec: fee rates must lie in [0, 1]");
}

namespace {

// Continuous piecewise-linear accumulation of slope segments away from 0.
// levels are the interior breakpoints ordered away from zero; rates[i] is the
// slope between levels[i-1] (or 0) and levels[i], rates.back() extends past
// the last level.
double accumulate_leg(const std::vector<double>& levels, const std::vector<double>& rates,
                      double r) {
    double value = 0.0;
    double edge = 0.0;
    const double sign = r < 0.0 ? -1.0 : 1.0;
    const double target = std::abs(r);
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const double next = i < levels.size() ? std::abs(levels[i])
                                              : std::numeric_limits<double>::infinity();
        const double run = std::min(target, next) - edge;
        if (run <= 0.0) break;
        value += rates[i] * run;
        edge += run;
        if (edge >= target) break;
    }
    return sign * value;
}

}  // namespace

double adjusted_return(const EpsSpec& spec, double r_t) {
    return protection_leg(spec, r_t) + fee_leg(spec, r_t);
}

double protection_leg(const EpsSpec& spec, double r_t) {
    spec.validate();
    if (!(r_t > -1.0)) throw DomainError("protection_leg: return must exceed -1");
    if (r_t >= 0.0) return 0.0;
    return accumulate_leg(spec.protection_levels, spec.protection_rates, r_t);
}

double fee_leg(const EpsSpec& spec, double r_t) {
    spec.validate();
    if (!(r_t > -1.0)) throw DomainError("fee_leg: return must exceed -1");
    if (r_t <= 0.0) return 0.0;
    return accumulate_leg(spec.fee_levels, spec.fee_rates, r_t);
}

EpsSpec make_buffer(double l1, double g1, double p2, double f2) {
    EpsSpec s;
    s.protection_levels = {l1};
    s.protection_rates = {0.0, p2};
    s.fee_levels = {g1};
    s.fee_rates = {0.0, f2};
    s.kind = EpsKind::buffer;
    s.validate();
    return s;
}

EpsSpec make_floor(double l1, double p1, double g1, double f2) {
    EpsSpec s;
    s.protection_levels = {l1};
    s.protection_rates = {p1, 0.0};
    s.fee_levels = {g1};
    s.fee_rates = {0.0, f2};
    s.kind = EpsKind::floor;
    s.validate();
    return s;
}

EpsSpec make_floor_cap(double l1, double g1, double p1, double f1) {
    EpsSpec s;
    s.protection_levels = {l1};
    s.protection_rates = {p1, 0.0};
    s.fee_levels = {g1};
    s.fee_rates = {f1, 0.0};
    s.kind = EpsKind::floor_cap;
    s.validate();
    return s;
}

}  // namespace eps
