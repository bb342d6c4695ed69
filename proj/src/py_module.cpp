#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eps/black_scholes.hpp"
#include "eps/default_risk.hpp"
#include "eps/hedging.hpp"
#include "eps/mc.hpp"
#include "eps/merton.hpp"
#include "eps/payoff.hpp"
#include "eps/run_config.hpp"
#include "eps/tables.hpp"

namespace py = pybind11;
using namespace eps;

PYBIND11_MODULE(_core, m) {
    m.doc() = "equity protection swap pricing core";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::enum_<OptionKind>(m, "OptionKind")
        .value("call", OptionKind::call)
        .value("put", OptionKind::put);
    py::enum_<EpsKind>(m, "EpsKind")
        .value("buffer", EpsKind::buffer)
        .value("floor", EpsKind::floor)
        .value("floor_cap", EpsKind::floor_cap)
        .value("general", EpsKind::general);
    py::enum_<CompensatorMode>(m, "CompensatorMode")
        .value("exact", CompensatorMode::exact)
        .value("paper_approx", CompensatorMode::paper_approx);
    py::enum_<JumpMode>(m, "JumpMode")
        .value("none", JumpMode::none)
        .value("at_most_one", JumpMode::at_most_one)
        .value("exactly_one", JumpMode::exactly_one)
        .value("full", JumpMode::full);

    py::class_<MarketParams>(m, "MarketParams")
        .def(py::init([](double spot, double rate, double sigma, double maturity) {
                 MarketParams p{spot, rate, sigma, maturity};
                 p.validate();
                 return p;
             }),
             py::arg("spot") = 100.0, py::arg("rate") = 0.015, py::arg("sigma") = 0.20,
             py::arg("maturity") = 1.0)
        .def_readwrite("spot", &MarketParams::spot)
        .def_readwrite("rate", &MarketParams::rate)
        .def_readwrite("sigma", &MarketParams::sigma)
        .def_readwrite("maturity", &MarketParams::maturity);

    py::class_<JumpParams>(m, "JumpParams")
        .def(py::init([](double lambda, double alpha, double delta, CompensatorMode mode) {
                 JumpParams p;
                 p.lambda = lambda;
                 p.alpha = alpha;
                 p.delta = delta;
                 p.mode = mode;
                 p.validate();
                 return p;
             }),
             py::arg("lambda_") = 0.0, py::arg("alpha") = 0.0, py::arg("delta") = 0.0,
             py::arg("mode") = CompensatorMode::exact)
        .def_readwrite("lambda_", &JumpParams::lambda)
        .def_readwrite("alpha", &JumpParams::alpha)
        .def_readwrite("delta", &JumpParams::delta)
        .def_readwrite("mode", &JumpParams::mode);

    py::class_<DefaultParams>(m, "DefaultParams")
        .def(py::init([](double gamma_counterparty, double gamma_provider) {
                 DefaultParams p{gamma_counterparty, gamma_provider};
                 p.validate();
                 return p;
             }),
             py::arg("gamma_counterparty") = 0.0, py::arg("gamma_provider") = 0.0)
        .def_readwrite("gamma_counterparty", &DefaultParams::gamma_counterparty)
        .def_readwrite("gamma_provider", &DefaultParams::gamma_provider);

    py::class_<EpsSpec>(m, "EpsSpec")
        .def(py::init<>())
        .def_readwrite("protection_levels", &EpsSpec::protection_levels)
        .def_readwrite("protection_rates", &EpsSpec::protection_rates)
        .def_readwrite("fee_levels", &EpsSpec::fee_levels)
        .def_readwrite("fee_rates", &EpsSpec::fee_rates)
        .def_readwrite("nominal", &EpsSpec::nominal)
        .def_readwrite("kind", &EpsSpec::kind)
        .def("validate", &EpsSpec::validate);

    m.def("make_buffer", &make_buffer, py::arg("l1"), py::arg("g1"), py::arg("p2"),
          py::arg("f2"));
    m.def("make_floor", &make_floor, py::arg("l1"), py::arg("p1"), py::arg("g1"),
          py::arg("f2"));
    m.def("make_floor_cap", &make_floor_cap, py::arg("l1"), py::arg("g1"), py::arg("p1"),
          py::arg("f1"));
    m.def("adjusted_return", &adjusted_return);
    m.def("protection_leg", &protection_leg);
    m.def("fee_leg", &fee_leg);

    m.def("bs_price", &bs_price, py::arg("market"), py::arg("strike"), py::arg("kind"));
    m.def("merton_price", &merton_price);
    m.def("conditional_n_price", &conditional_n_price);
    m.def("exactly_one_jump_price", &exactly_one_jump_price);
    m.def("at_most_one_jump_price", &at_most_one_jump_price);
    m.def("defaultable_price", &defaultable_price);
    m.def("survival_probability",
          py::overload_cast<double, double>(&survival_probability));

    py::class_<HedgeLeg>(m, "HedgeLeg")
        .def_readonly("kind", &HedgeLeg::kind)
        .def_readonly("strike", &HedgeLeg::strike)
        .def_readonly("quantity", &HedgeLeg::quantity);
    py::class_<HedgePortfolio>(m, "HedgePortfolio")
        .def_readonly("legs", &HedgePortfolio::legs);
    py::class_<Engine>(m, "Engine")
        .def(py::init<>())
        .def_readwrite("mode", &Engine::mode)
        .def_readwrite("jumps", &Engine::jumps)
        .def_readwrite("defaults", &Engine::defaults)
        .def_readwrite("default_all_legs", &Engine::default_all_legs)
        .def_static("from_tag", &Engine::from_tag, py::arg("tag"), py::arg("jumps"),
                    py::arg("defaults"));

    m.def("build_hedge", &build_hedge);
    m.def("hedge_payoff", &hedge_payoff);
    m.def("hedge_cost", &hedge_cost, py::arg("portfolio"), py::arg("market"),
          py::arg("engine"), py::arg("protection_only") = false);
    m.def("default_adjustment", &default_adjustment);

    py::class_<PremiumReport>(m, "PremiumReport")
        .def_readonly("hedge_cost", &PremiumReport::hedge_cost)
        .def_readonly("fair_premium", &PremiumReport::fair_premium)
        .def_readonly("default_adjustment", &PremiumReport::default_adjustment)
        .def_readonly("adjusted_premium", &PremiumReport::adjusted_premium)
        .def_readonly("super_premium", &PremiumReport::super_premium)
        .def_readonly("engine_tag", &PremiumReport::engine_tag);
    m.def("premium_report", &premium_report);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("paths", &SimConfig::paths)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("antithetic", &SimConfig::antithetic);
    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("paths", &McEstimate::paths)
        .def_readonly("seed", &McEstimate::seed);
    m.def("mc_option_price", &mc_option_price);

    py::class_<TableCell>(m, "TableCell")
        .def_readonly("table", &TableCell::table)
        .def_readonly("block", &TableCell::block)
        .def_readonly("row", &TableCell::row)
        .def_readonly("column", &TableCell::column)
        .def_readonly("model", &TableCell::model)
        .def_readonly("reference", &TableCell::reference)
        .def_readonly("tolerance", &TableCell::tolerance)
        .def_readonly("checked", &TableCell::checked)
        .def_readonly("pass_", &TableCell::pass);
    py::class_<TableReport>(m, "TableReport")
        .def_readonly("cells", &TableReport::cells)
        .def_readonly("all_pass", &TableReport::all_pass)
        .def_readonly("table_modes", &TableReport::table_modes);
    m.def("reproduce_tables",
          py::overload_cast<const std::string&>(&reproduce_tables));
}
