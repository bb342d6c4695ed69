"""Import smoke test for the python bindings."""

import math

import epsquant as eq


def close(a, b, tol):
    assert abs(a - b) <= tol, f"{a} vs {b} (tol {tol})"


def main():
    mkt = eq.MarketParams(spot=100.0, rate=0.015, sigma=0.2, maturity=1.0)
    close(eq.bs_price(mkt, 100.0, eq.OptionKind.call), 8.6728260148, 1e-8)
    close(eq.bs_price(mkt, 100.0, eq.OptionKind.put), 7.1840199751, 1e-8)

    jp = eq.JumpParams(lambda_=0.2, alpha=-0.2, delta=0.1)
    close(eq.merton_price(mkt, jp, 100.0, eq.OptionKind.call), 9.4196524044, 1e-8)
    close(eq.exactly_one_jump_price(mkt, jp, 100.0, eq.OptionKind.call),
          eq.conditional_n_price(mkt, jp, 100.0, 1, eq.OptionKind.call), 1e-10)

    spec = eq.make_buffer(-0.05, 0.10, 0.8, 0.5)
    port = eq.build_hedge(spec, 100.0)
    assert len(port.legs) == 2
    close(port.legs[0].strike, 95.0, 1e-12)
    for r in (-0.5, -0.2, 0.0, 0.3):
        close(eq.hedge_payoff(port, 100.0, r), -eq.adjusted_return(spec, r), 1e-12)

    engine = eq.Engine.from_tag("merton_with_default", jp, eq.DefaultParams(0.1, 0.05))
    rep = eq.premium_report(spec, mkt, jp, eq.DefaultParams(0.1, 0.05), engine)
    close(rep.adjusted_premium,
          rep.hedge_cost + math.exp(-0.015) * rep.default_adjustment, 1e-12)
    assert rep.super_premium >= rep.adjusted_premium - 1e-12

    sim = eq.SimConfig()
    sim.paths = 50000
    sim.seed = 3
    est = eq.mc_option_price(mkt, jp, sim, 100.0, eq.OptionKind.call)
    assert abs(est.value - 9.4196524044) < 4 * est.std_error

    report = eq.reproduce_tables("data/paper_reference.csv")
    assert report.all_pass
    assert report.table_modes["table1"] == eq.CompensatorMode.paper_approx

    try:
        eq.bs_price(mkt, -1.0, eq.OptionKind.call)
    except ValueError:
        pass
    else:
        raise AssertionError("negative strike must raise")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
