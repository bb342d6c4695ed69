#include "eps/black_scholes.hpp"

#include <cmath>

namespace eps {

void MarketParams::validate() const {
    if (!(spot > 0.0)) throw DomainError("MarketParams: spot must be positive");
    if (!(sigma > 0.0)) throw DomainError("MarketParams: sigma must be positive");
    if (!(maturity > 0.0)) throw DomainError("MarketParams: maturity must be positive");
    if (!std::isfinite(rate)) throw DomainError("MarketParams: rate must be finite");
}

double std_normal_cdf(double x) {
    if (!std::isfinite(x)) throw DomainError("std_normal_cdf: non-finite input");
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

namespace {

// Acklam's rational approximation for the normal quantile, followed by one
// Halley step against erfc to push the error to ~1e-15.
double ppf_initial(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double std_normal_ppf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("std_normal_ppf: p must be in (0,1)");
    double x = ppf_initial(p);
    // Halley refinement.
    double e = 0.5 * std::erfc(-x * M_SQRT1_2) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

double bs_call(const MarketParams& mkt, double strike) {
    return bs_price(mkt, strike, OptionKind::call);
}

double bs_put(const MarketParams& mkt, double strike) {
    return bs_price(mkt, strike, OptionKind::put);
}

double bs_price(const MarketParams& mkt, double strike, OptionKind kind) {
    mkt.validate();
    if (!(strike > 0.0)) throw DomainError("bs_price: strike must be positive");
    const double T = mkt.maturity;
    const double sqrtT = std::sqrt(T);
    const double df = std::exp(-mkt.rate * T);
    const double d1 =
        (std::log(mkt.spot / strike) + (mkt.rate + 0.5 * mkt.sigma * mkt.sigma) * T) /
        (mkt.sigma * sqrtT);
    const double d2 = d1 - mkt.sigma * sqrtT;
    if (kind == OptionKind::call)
        return mkt.spot * std_normal_cdf(d1) - df * strike * std_normal_cdf(d2);
    return df * strike * std_normal_cdf(-d2) - mkt.spot * std_normal_cdf(-d1);
}

}  // namespace eps
