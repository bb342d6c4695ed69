#pragma once

#include <string>
#include <vector>

#include "eps/errors.hpp"

namespace eps {

enum class EpsKind { buffer, floor, floor_cap, general };

EpsKind eps_kind_from_string(const std::string& s);
const char* to_string(EpsKind k);

// Piecewise-linear adjusted-return structure of a standard equity protection
// swap. Losses are mapped through participation rates p_1..p_{n+1} between
// levels 0 > l_1 > ... > l_n, gains through f_1..f_{m+1} between levels
// 0 < g_1 < ... < g_m. The last rate extends beyond the last level. The
// induced map psi is continuous, non-decreasing and psi(0) = 0.
struct EpsSpec {
    std::vector<double> protection_levels;  // l_1..l_n, strictly decreasing, in (-1, 0)
    std::vector<double> protection_rates;   // p_1..p_{n+1}, each in [0, 1]
    std::vector<double> fee_levels;         // g_1..g_m, strictly increasing, > 0
    std::vector<double> fee_rates;          // f_1..f_{m+1}, each in [0, 1]
    double nominal = 1.0;
    EpsKind kind = EpsKind::general;

    void validate() const;
};

// psi(r_t): the provider's signed cash flow per unit nominal.
double adjusted_return(const EpsSpec& spec, double r_t);

// psi^p(r_t) = psi(r_t) 1{r_t < 0}; non-positive.
double protection_leg(const EpsSpec& spec, double r_t);

// psi^f(r_t) = psi(r_t) 1{r_t > 0}; non-negative.
double fee_leg(const EpsSpec& spec, double r_t);

// Named products. Buffer: no participation inside [l_1, g_1]. Floor: losses
// beyond l_1 are not covered. Floor-cap: fees stop growing above g_1.
EpsSpec make_buffer(double l1, double g1, double p2, double f2);
EpsSpec make_floor(double l1, double p1, double g1, double f2);
EpsSpec make_floor_cap(double l1, double g1, double p1, double f1);

}  // namespace eps
