// eps: pricing, hedging and table-reproduction front end.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eps/black_scholes.hpp"
#include "eps/default_risk.hpp"
#include "eps/hedging.hpp"
#include "eps/mc.hpp"
#include "eps/merton.hpp"
#include "eps/payoff.hpp"
#include "eps/run_config.hpp"
#include "eps/tables.hpp"

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Rows are kept as strings + doubles so stdout can print 4 decimals while the
// CSV keeps full precision.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

std::string num(double v, int precision) {
    char buf[64];
    if (precision < 0)
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    else
        std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string render(const Table& t, bool full_precision) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << (i ? "," : "") << t.header[i];
    out << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i];
            // numeric cells are stored as full-precision strings; shorten for display
            if (!full_precision && cell.find_first_of("0123456789") != std::string::npos &&
                cell.find_first_not_of("+-.0123456789eE") == std::string::npos) {
                try {
                    cell = num(std::stod(cell), 4);
                } catch (...) {
                }
            }
            out << (i ? "," : "") << cell;
        }
        out << '\n';
    }
    return out.str();
}

void emit(const Table& t, const std::string& out_path) {
    std::cout << render(t, false);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw eps::ConfigError("cannot open output file: " + out_path);
        f << render(t, true);
    }
}

std::string cell(double v) { return num(v, -1); }

std::vector<double> strikes_of(const eps::RunConfig& cfg) {
    if (!cfg.strikes.empty()) return cfg.strikes;
    return {cfg.need_market().spot};
}

int cmd_price(const eps::RunConfig& cfg, const std::string& out_path) {
    const eps::MarketParams& mkt = cfg.need_market();
    Table t;
    t.header = {"strike", "kind", "vanilla", "one_jump", "at_most_one", "series", "default"};
    for (double k : strikes_of(cfg)) {
        for (eps::OptionKind kind : {eps::OptionKind::call, eps::OptionKind::put}) {
            const double vanilla = eps::bs_price(mkt, k, kind);
            std::vector<std::string> row{num(k, -1),
                                         kind == eps::OptionKind::call ? "call" : "put",
                                         cell(vanilla)};
            if (cfg.jumps) {
                row.push_back(cell(eps::exactly_one_jump_price(mkt, *cfg.jumps, k, kind)));
                row.push_back(cell(eps::at_most_one_jump_price(mkt, *cfg.jumps, k, kind)));
                row.push_back(cell(eps::merton_price(mkt, *cfg.jumps, k, kind)));
                row.push_back(cell(
                    eps::defaultable_price(vanilla, cfg.jumps->lambda, mkt.maturity)));
            } else {
                row.insert(row.end(), {cell(vanilla), cell(vanilla), cell(vanilla),
                                       cell(vanilla)});
            }
            t.row(std::move(row));
        }
    }
    emit(t, out_path);
    return 0;
}

int cmd_hedge(const eps::RunConfig& cfg, const std::string& out_path,
              bool protection_only) {
    const eps::MarketParams& mkt = cfg.need_market();
    const eps::EpsSpec& spec = cfg.need_eps();
    const eps::HedgePortfolio port = eps::build_hedge(spec, mkt.spot);

    Table t;
    t.header = {"type", "kind", "strike", "quantity", "value"};
    for (const auto& leg : port.legs)
        t.row({"leg", leg.kind == eps::OptionKind::put ? "put" : "call",
               cell(leg.strike), cell(leg.quantity), ""});

    auto cost_row = [&](const std::string& tag, const eps::Engine& e) {
        t.row({"cost", tag, "", "", cell(eps::hedge_cost(port, mkt, e, protection_only))});
    };
    eps::DefaultParams no_default;
    cost_row("vanilla", eps::Engine::from_tag("vanilla", std::nullopt, no_default));
    if (cfg.jumps) {
        cost_row("at_most_one",
                 eps::Engine::from_tag("at_most_one_jump", cfg.jumps, no_default));
        cost_row("one_jump",
                 eps::Engine::from_tag("exactly_one_jump", cfg.jumps, no_default));
        cost_row("series", eps::Engine::from_tag("merton", cfg.jumps, no_default));
        eps::DefaultParams rt{cfg.jumps->lambda, cfg.jumps->lambda};
        cost_row("random_time", eps::Engine::from_tag("random_time", std::nullopt, rt));
    }
    if (cfg.defaults && cfg.engine != "vanilla")
        cost_row(cfg.engine, eps::Engine::from_tag(cfg.engine, cfg.jumps, *cfg.defaults));
    emit(t, out_path);
    return 0;
}

int cmd_premium(const eps::RunConfig& cfg, const std::string& out_path) {
    const eps::MarketParams& mkt = cfg.need_market();
    const eps::EpsSpec& spec = cfg.need_eps();
    if (!eps::first_protection_level(spec))
        throw eps::ConfigError("premium: eps spec has no protection leg");
    const eps::DefaultParams defaults = cfg.defaults.value_or(eps::DefaultParams{});

    Table t;
    t.header = {"engine", "hedge_cost", "fair_premium", "default_adjustment",
                "adjusted_premium", "super_premium"};
    std::vector<std::string> tags{"vanilla_with_default"};
    if (cfg.jumps)
        tags = {"vanilla_with_default", "at_most_one_with_default",
                "exactly_one_with_default", "merton_with_default"};
    for (const std::string& tag : tags) {
        const eps::Engine e = eps::Engine::from_tag(tag, cfg.jumps, defaults);
        const eps::PremiumReport rep =
            eps::premium_report(spec, mkt, cfg.jumps, defaults, e);
        t.row({rep.engine_tag, cell(rep.hedge_cost), cell(rep.fair_premium),
               cell(rep.default_adjustment), cell(rep.adjusted_premium),
               cell(rep.super_premium)});
    }
    emit(t, out_path);
    return 0;
}

int cmd_payoff(const eps::RunConfig& cfg, const std::string& out_path) {
    const eps::MarketParams& mkt = cfg.need_market();
    const eps::EpsSpec& spec = cfg.need_eps();
    const eps::HedgePortfolio port = eps::build_hedge(spec, mkt.spot);
    eps::Engine vanilla;
    const double h0 = eps::hedge_cost(port, mkt, vanilla);

    Table t;
    t.header = {"return", "psi", "psi_p", "psi_f", "hedge_payoff", "cash_flow",
                "cash_flow_default"};
    const int n = cfg.grid;
    for (int i = 0; i <= n; ++i) {
        const double r_t = -0.99 + (1.0 - (-0.99)) * i / n;
        t.row({cell(r_t), cell(eps::adjusted_return(spec, r_t)),
               cell(eps::protection_leg(spec, r_t)), cell(eps::fee_leg(spec, r_t)),
               cell(eps::hedge_payoff(port, mkt.spot, r_t)),
               cell(eps::hedged_cash_flow(spec, port, h0, h0, mkt, r_t)),
               cell(eps::defaulted_cash_flow(spec, h0, h0, mkt, r_t))});
    }
    emit(t, out_path);
    return 0;
}

int cmd_tables(const std::string& reference, const std::string& out_path) {
    const eps::TableReport report = eps::reproduce_tables(reference);
    std::string csv = eps::to_csv(report);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw eps::ConfigError("cannot open output file: " + out_path);
        f << csv;
    } else {
        std::cout << csv;
    }
    for (const auto& [table, mode] : report.table_modes)
        std::cerr << table << ": convention " << eps::to_string(mode) << '\n';
    std::cerr << "series residual: exact "
              << num(eps::table1_series_residual(reference, eps::CompensatorMode::exact), 4)
              << ", paper_approx "
              << num(eps::table1_series_residual(reference,
                                                 eps::CompensatorMode::paper_approx),
                     4)
              << '\n';
    int violations = 0;
    for (const auto& c : report.cells) {
        if (c.checked && !c.pass) {
            ++violations;
            std::cerr << "violation: " << c.table << '/' << c.block << '/' << c.row << '/'
                      << c.column << " model " << num(c.model, 4) << " reference "
                      << num(c.reference, 4) << " tolerance " << c.tolerance << '\n';
        }
    }
    return violations == 0 ? 0 : kExitTolerance;
}

int cmd_mc(const eps::RunConfig& cfg, const std::string& out_path) {
    const eps::MarketParams& mkt = cfg.need_market();
    const eps::JumpParams jumps = cfg.jumps.value_or(eps::JumpParams{});
    eps::SimConfig sim;
    sim.paths = cfg.paths;
    sim.seed = cfg.seed;

    Table t;
    t.header = {"quantity", "estimate", "std_error", "closed_form", "z"};
    auto add = [&](const std::string& name, const eps::McEstimate& est, double closed) {
        const double z = est.std_error > 0 ? (est.value - closed) / est.std_error : 0.0;
        t.row({name, cell(est.value), cell(est.std_error), cell(closed), cell(z)});
    };
    for (double k : strikes_of(cfg)) {
        for (eps::OptionKind kind : {eps::OptionKind::call, eps::OptionKind::put}) {
            const std::string base = (kind == eps::OptionKind::call ? "call_" : "put_");
            const double closed = cfg.jumps ? eps::merton_price(mkt, jumps, k, kind)
                                            : eps::bs_price(mkt, k, kind);
            add(base + num(k, -1), eps::mc_option_price(mkt, jumps, sim, k, kind), closed);
        }
    }
    if (cfg.eps && cfg.defaults) {
        const double gamma = cfg.defaults->gamma_counterparty;
        const eps::DaEstimates da =
            eps::mc_default_adjustment(mkt, cfg.jumps, gamma, *cfg.eps, sim);
        const double closed = eps::default_adjustment(
            *cfg.eps, mkt, cfg.jumps, gamma,
            cfg.jumps ? eps::JumpMode::full : eps::JumpMode::none);
        add("default_adjustment", da.partial_expectation, closed);
    }
    emit(t, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equity protection swap pricing toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, engine_tag, reference = "data/paper_reference.csv";
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::size_t paths = 0;
    int grid = 0;
    bool protection_only = false;

    app.add_option("--config", config_path, "run configuration (JSON)");
    app.add_option("--out", out_path, "write full-precision CSV here");
    app.add_option("--seed", seed, "simulation seed")->each([&](const std::string&) {
        have_seed = true;
    });
    app.add_option("--engine", engine_tag, "pricing engine tag");
    app.add_option("--paths", paths, "Monte Carlo path count");
    app.add_option("--grid", grid, "payoff grid resolution");
    app.add_flag("--protection-only", protection_only,
                 "price only the protection legs (diagnostic)");
    app.add_option("--reference", reference, "reference table CSV (tables subcommand)");

    auto* price = app.add_subcommand("price", "option prices under all engines");
    auto* hedge = app.add_subcommand("hedge", "replicating portfolio and hedge costs");
    auto* premium = app.add_subcommand("premium", "fair and default-adjusted premiums");
    auto* payoff = app.add_subcommand("payoff", "payoff and cash-flow diagram");
    auto* tables = app.add_subcommand("tables", "reproduce the reference tables");
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimates vs closed forms");
    for (CLI::App* sub : {price, hedge, premium, payoff, tables, mc}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(tables)) return cmd_tables(reference, out_path);

        if (config_path.empty()) throw eps::ConfigError("--config is required");
        eps::RunConfig cfg = eps::load_run_config(config_path);
        if (!engine_tag.empty()) cfg.engine = engine_tag;
        if (have_seed) cfg.seed = seed;
        if (paths > 0) cfg.paths = paths;
        if (grid > 0) cfg.grid = grid;

        if (app.got_subcommand(price)) return cmd_price(cfg, out_path);
        if (app.got_subcommand(hedge)) return cmd_hedge(cfg, out_path, protection_only);
        if (app.got_subcommand(premium)) return cmd_premium(cfg, out_path);
        if (app.got_subcommand(payoff)) return cmd_payoff(cfg, out_path);
        if (app.got_subcommand(mc)) return cmd_mc(cfg, out_path);
        throw eps::ConfigError("no subcommand selected");
    } catch (const eps::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const eps::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const eps::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const eps::ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
