#include "eps/merton.hpp"

#include <cmath>

namespace eps {

CompensatorMode compensator_mode_from_string(const std::string& s) {
    if (s == "exact") return CompensatorMode::exact;
    if (s == "paper_approx") return CompensatorMode::paper_approx;
    throw ConfigError("unknown compensator_mode: " + s);
}

const char* to_string(CompensatorMode m) {
    return m == CompensatorMode::exact ? "exact" : "paper_approx";
}

void JumpParams::validate() const {
    if (!(lambda >= 0.0)) throw DomainError("JumpParams: lambda must be >= 0");
    if (!(delta >= 0.0)) throw DomainError("JumpParams: delta must be >= 0");
    if (n_max < 0) throw DomainError("JumpParams: n_max must be >= 0");
    if (!(tail_tol > 0.0)) throw DomainError("JumpParams: tail_tol must be > 0");
    if (!std::isfinite(alpha)) throw DomainError("JumpParams: alpha must be finite");
}

double compensator(const JumpParams& jp) {
    jp.validate();
    const double zeta = std::exp(jp.alpha + 0.5 * jp.delta * jp.delta) - 1.0;
    if (jp.mode == CompensatorMode::exact) return -jp.lambda * zeta;
    return -jp.lambda * jp.alpha;
}

JumpDerived derive(const JumpParams& jp) {
    JumpDerived d;
    d.half_law = jp.alpha + 0.5 * jp.delta * jp.delta;
    d.zeta = std::exp(d.half_law) - 1.0;
    d.mu_j = compensator(jp);
    d.lambda_prime = jp.lambda * (1.0 + d.zeta);
    d.delta = jp.delta;
    return d;
}

double JumpDerived::rate_n(const MarketParams& mkt, int n) const {
    return mkt.rate + mu_j + n * half_law / mkt.maturity;
}

double JumpDerived::sigma_n(const MarketParams& mkt, int n) const {
    return std::sqrt(mkt.sigma * mkt.sigma + n * delta * delta / mkt.maturity);
}

namespace {

MarketParams kernel_market(const MarketParams& mkt, double r_n, double s_n) {
    MarketParams m = mkt;
    m.rate = r_n;
    m.sigma = s_n;
    return m;
}

}  // namespace

double merton_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                    OptionKind kind) {
    mkt.validate();
    jp.validate();
    const JumpDerived d = derive(jp);
    const double T = mkt.maturity;
    const double lpT = d.lambda_prime * T;

    double total = 0.0;
    double weight = std::exp(-lpT);  // Poisson(lambda' T) pmf at n = 0
    for (int n = 0; n <= jp.n_max; ++n) {
        if (n > 0) weight *= lpT / n;
        if (n > lpT && weight < jp.tail_tol) break;
        const double r_n = d.rate_n(mkt, n);
        const double s_n = d.sigma_n(mkt, n);
        const double term = weight * bs_price(kernel_market(mkt, r_n, s_n), strike, kind);
        if (!std::isfinite(term))
            throw NumericalError("merton_price: non-finite series term at n = " +
                                 std::to_string(n));
        total += term;
    }
    return total;
}

double conditional_n_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                           int n, OptionKind kind) {
    mkt.validate();
    jp.validate();
    if (n < 0) throw DomainError("conditional_n_price: n must be >= 0");
    const JumpDerived d = derive(jp);
    const double r_n = d.rate_n(mkt, n);
    const double s_n = d.sigma_n(mkt, n);
    const double price = std::exp((r_n - mkt.rate) * mkt.maturity) *
                         bs_price(kernel_market(mkt, r_n, s_n), strike, kind);
    if (!std::isfinite(price))
        throw NumericalError("conditional_n_price: non-finite value at n = " +
                             std::to_string(n));
    return price;
}

double exactly_one_jump_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                              OptionKind kind) {
    mkt.validate();
    jp.validate();
    const JumpDerived d = derive(jp);
    const double T = mkt.maturity;
    // e^{-lambda T zeta} e^{alpha + delta^2/2} BS(r_1, sigma_1). Under the
    // exact compensator the prefactor equals e^{(r_1 - r)T}, so this coincides
    // with conditional_n_price(n = 1).
    const double prefactor = std::exp(-jp.lambda * T * d.zeta + d.half_law);
    const double kernel = bs_price(
        kernel_market(mkt, d.rate_n(mkt, 1), d.sigma_n(mkt, 1)), strike, kind);
    return prefactor * kernel;
}

double at_most_one_jump_price(const MarketParams& mkt, const JumpParams& jp, double strike,
                              OptionKind kind) {
    mkt.validate();
    jp.validate();
    const JumpDerived d = derive(jp);
    const double T = mkt.maturity;
    const double lT = jp.lambda * T;
    const double lpT = d.lambda_prime * T;
    // Renormalized two-term mixture of BS kernels with Poisson(lambda' T)
    // weights over the at-most-one-jump probability e^{-lambda T}(1 + lambda T).
    // Under the exact compensator this equals the conditional mixture
    // (cond_0 + lambda T cond_1) / (1 + lambda T).
    const double k0 = bs_price(kernel_market(mkt, d.rate_n(mkt, 0), d.sigma_n(mkt, 0)),
                               strike, kind);
    const double k1 = bs_price(kernel_market(mkt, d.rate_n(mkt, 1), d.sigma_n(mkt, 1)),
                               strike, kind);
    return std::exp(-lpT) * (k0 + lpT * k1) / (std::exp(-lT) * (1.0 + lT));
}

double conditional_terminal_mean(const MarketParams& mkt, const JumpParams& jp,
                                 ParityModel model) {
    const JumpDerived d = derive(jp);
    const double T = mkt.maturity;
    const double lT = jp.lambda * T;
    const double m0 = mkt.spot * std::exp(d.rate_n(mkt, 0) * T);
    const double m1 = mkt.spot * std::exp(d.rate_n(mkt, 1) * T);
    switch (model) {
        case ParityModel::exactly_one:
            return m1;
        case ParityModel::at_most_one:
            return (m0 + lT * m1) / (1.0 + lT);
        case ParityModel::full:
            return mkt.spot * std::exp((mkt.rate + d.mu_j) * T + jp.lambda * d.zeta * T);
    }
    throw DomainError("conditional_terminal_mean: bad model");
}

double parity_gap(const MarketParams& mkt, const JumpParams& jp, double strike,
                  ParityModel model) {
    // Conditional models are evaluated through the conditional mixtures, which
    // satisfy the stated parity for either compensator convention (the closed
    // forms coincide with them under the exact compensator).
    const double lT = jp.lambda * mkt.maturity;
    auto amo = [&](OptionKind kind) {
        return (conditional_n_price(mkt, jp, strike, 0, kind) +
                lT * conditional_n_price(mkt, jp, strike, 1, kind)) /
               (1.0 + lT);
    };
    double call, put;
    switch (model) {
        case ParityModel::exactly_one:
            call = conditional_n_price(mkt, jp, strike, 1, OptionKind::call);
            put = conditional_n_price(mkt, jp, strike, 1, OptionKind::put);
            break;
        case ParityModel::at_most_one:
            call = amo(OptionKind::call);
            put = amo(OptionKind::put);
            break;
        case ParityModel::full:
        default:
            call = merton_price(mkt, jp, strike, OptionKind::call);
            put = merton_price(mkt, jp, strike, OptionKind::put);
            break;
    }
    const double mean = conditional_terminal_mean(mkt, jp, model);
    return call - put - std::exp(-mkt.rate * mkt.maturity) * (mean - strike);
}

std::complex<double> characteristic_function(const MarketParams& mkt, const JumpParams& jp,
                                             double u) {
    if (!std::isfinite(u)) throw DomainError("characteristic_function: non-finite u");
    mkt.validate();
    jp.validate();
    const JumpDerived d = derive(jp);
    const double T = mkt.maturity;
    const std::complex<double> iu(0.0, u);
    const std::complex<double> jump_cf =
        std::exp(iu * jp.alpha - 0.5 * u * u * jp.delta * jp.delta) - 1.0;
    return std::exp(iu * (d.mu_j - 0.5 * mkt.sigma * mkt.sigma) * T -
                    0.5 * u * u * mkt.sigma * mkt.sigma * T + jp.lambda * T * jump_cf);
}

}  // namespace eps
