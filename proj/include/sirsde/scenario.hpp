/*
 * Copyright 2026 The sirsde Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIRSDE_SCENARIO_HPP
#define SIRSDE_SCENARIO_HPP

#include "sirsde/params.hpp"
#include "sirsde/sde.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sirsde {

enum class ScenarioKind {
    Simulate,
    Classify,
    Stationary,
    Lyapunov,
    TvDecay,
    Support,
    Example1,
    Example2,
    Example3,
};

std::string_view to_string(ScenarioKind kind) noexcept;
ScenarioKind scenario_from_string(std::string_view name);

enum class ModelKind { Degenerate, NonDegenerate, FullDegenerate };

/// Everything a run needs. Unset optionals take per-scenario defaults.
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::Classify;
    std::optional<SirParams> params; ///< required except for the example scenarios
    double sigma3 = 0.0;
    ModelKind model = ModelKind::Degenerate;
    InitialState initial{1.0, 1.0, 1.0};

    double dt = 1e-3;
    std::optional<double> t_final;
    Scheme scheme = Scheme::LogEulerMaruyama;
    std::optional<std::size_t> record_stride;

    std::optional<std::size_t> n_paths;
    std::uint64_t master_seed = 1;
    std::optional<double> burn_in;
    std::vector<double> checkpoints;
    std::optional<double> reference_time;
    std::optional<std::size_t> bins;

    std::filesystem::path outputs = ".";
    bool quiet = false;
};

/// Parses `key = value` lines ('#' starts a comment). Unknown or repeated keys and
/// missing rates raise Error{ParseError} naming the line/key; invalid rates raise
/// the validation error (NonPositiveRate, ZeroSigma1, ...).
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig parse_config(const std::filesystem::path& file);

/// Applies the standing checks after command-line overrides.
void check_config(const ScenarioConfig& cfg);

/// Closed-form classification; never simulates.
nlohmann::json classification_report(const SirParams& params);

/// Runs the scenario and writes its files under cfg.outputs. Returns the files written.
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg);

/// Reproduces one of the three worked examples (1, 2 or 3).
std::vector<std::filesystem::path> run_example(int n, std::uint64_t master_seed, const std::filesystem::path& outputs,
                                               std::optional<std::size_t> n_paths = std::nullopt);

/// Serializes with a trailing newline; -infinity becomes the string "-inf".
std::string dump_json(const nlohmann::json& j);

} // namespace sirsde

#endif // SIRSDE_SCENARIO_HPP
