#include "eps/run_config.hpp"

#include <fstream>

#include <json.hpp>

namespace eps {

using nlohmann::json;

namespace {

MarketParams market_from(const json& j) {
    MarketParams m;
    m.spot = j.at("spot").get<double>();
    m.rate = j.at("rate").get<double>();
    m.sigma = j.at("sigma").get<double>();
    m.maturity = j.at("maturity").get<double>();
    m.validate();
    return m;
}

JumpParams jumps_from(const json& j) {
    JumpParams jp;
    jp.lambda = j.at("lambda").get<double>();
    jp.alpha = j.at("alpha").get<double>();
    jp.delta = j.at("delta").get<double>();
    if (j.contains("compensator_mode"))
        jp.mode = compensator_mode_from_string(j["compensator_mode"].get<std::string>());
    if (j.contains("n_max")) jp.n_max = j["n_max"].get<int>();
    if (j.contains("tail_tol")) jp.tail_tol = j["tail_tol"].get<double>();
    jp.validate();
    return jp;
}

DefaultParams defaults_from(const json& j) {
    DefaultParams d;
    if (j.contains("gamma_counterparty"))
        d.gamma_counterparty = j["gamma_counterparty"].get<double>();
    if (j.contains("gamma_provider")) d.gamma_provider = j["gamma_provider"].get<double>();
    d.validate();
    return d;
}

EpsSpec eps_from(const json& j) {
    EpsSpec s;
    s.protection_levels = j.at("protection_levels").get<std::vector<double>>();
    s.protection_rates = j.at("protection_rates").get<std::vector<double>>();
    s.fee_levels = j.at("fee_levels").get<std::vector<double>>();
    s.fee_rates = j.at("fee_rates").get<std::vector<double>>();
    if (j.contains("nominal")) s.nominal = j["nominal"].get<double>();
    if (j.contains("kind")) s.kind = eps_kind_from_string(j["kind"].get<std::string>());
    s.validate();
    return s;
}

json to_json_obj(const EpsSpec& spec) {
    return json{{"protection_levels", spec.protection_levels},
                {"protection_rates", spec.protection_rates},
                {"fee_levels", spec.fee_levels},
                {"fee_rates", spec.fee_rates},
                {"nominal", spec.nominal},
                {"kind", to_string(spec.kind)}};
}

}  // namespace

const MarketParams& RunConfig::need_market() const {
    if (!market) throw ConfigError("missing config section: market");
    return *market;
}

const JumpParams& RunConfig::need_jumps() const {
    if (!jumps) throw ConfigError("missing config section: jumps");
    return *jumps;
}

const EpsSpec& RunConfig::need_eps() const {
    if (!eps) throw ConfigError("missing config section: eps");
    return *eps;
}

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config JSON: ") + e.what());
    }
    try {
        RunConfig cfg;
        if (j.contains("market")) cfg.market = market_from(j["market"]);
        if (j.contains("jumps")) cfg.jumps = jumps_from(j["jumps"]);
        if (j.contains("defaults")) cfg.defaults = defaults_from(j["defaults"]);
        if (j.contains("eps")) cfg.eps = eps_from(j["eps"]);
        if (j.contains("engine")) cfg.engine = j["engine"].get<std::string>();
        if (j.contains("strikes")) cfg.strikes = j["strikes"].get<std::vector<double>>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("grid")) cfg.grid = j["grid"].get<int>();
        if (j.contains("paths")) cfg.paths = j["paths"].get<std::size_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config value: ") + e.what());
    }
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_run_config(text);
}

std::string to_json(const EpsSpec& spec) { return to_json_obj(spec).dump(2); }

EpsSpec eps_spec_from_json(const std::string& json_text) {
    try {
        return eps_from(json::parse(json_text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid EpsSpec JSON: ") + e.what());
    }
}

std::string to_json(const JumpParams& jp) {
    return json{{"lambda", jp.lambda},
                {"alpha", jp.alpha},
                {"delta", jp.delta},
                {"compensator_mode", to_string(jp.mode)},
                {"n_max", jp.n_max},
                {"tail_tol", jp.tail_tol}}
        .dump(2);
}

JumpParams jump_params_from_json(const std::string& json_text) {
    try {
        return jumps_from(json::parse(json_text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JumpParams JSON: ") + e.what());
    }
}

}  // namespace eps
