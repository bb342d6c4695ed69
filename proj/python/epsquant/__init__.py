"""Closed-form pricing and static hedging of equity protection swaps."""

from ._core import (  # noqa: F401
    CompensatorMode,
    DefaultParams,
    Engine,
    EpsKind,
    EpsSpec,
    HedgeLeg,
    HedgePortfolio,
    JumpMode,
    JumpParams,
    MarketParams,
    McEstimate,
    OptionKind,
    PremiumReport,
    SimConfig,
    TableCell,
    TableReport,
    adjusted_return,
    at_most_one_jump_price,
    bs_price,
    build_hedge,
    conditional_n_price,
    default_adjustment,
    defaultable_price,
    exactly_one_jump_price,
    fee_leg,
    hedge_cost,
    hedge_payoff,
    make_buffer,
    make_floor,
    make_floor_cap,
    mc_option_price,
    merton_price,
    premium_report,
    protection_leg,
    reproduce_tables,
    survival_probability,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
