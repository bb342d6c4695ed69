#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eps/black_scholes.hpp"
#include "eps/default_risk.hpp"
#include "eps/merton.hpp"
#include "eps/payoff.hpp"

namespace eps {

// File-based run configuration shared by all CLI subcommands. The document is
// JSON with sections `market`, `jumps`, `defaults`, `eps` plus scalar keys.
struct RunConfig {
    std::optional<MarketParams> market;
    std::optional<JumpParams> jumps;
    std::optional<DefaultParams> defaults;
    std::optional<EpsSpec> eps;
    std::string engine = "vanilla";
    std::vector<double> strikes;
    std::string output;
    int grid = 200;
    std::size_t paths = 1'000'000;
    std::uint64_t seed = 1;

    // Throws ConfigError naming the section if a required one is absent.
    const MarketParams& need_market() const;
    const JumpParams& need_jumps() const;
    const EpsSpec& need_eps() const;
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text);

std::string to_json(const EpsSpec& spec);
EpsSpec eps_spec_from_json(const std::string& json_text);

std::string to_json(const JumpParams& jp);
JumpParams jump_params_from_json(const std::string& json_text);

}  // namespace eps
