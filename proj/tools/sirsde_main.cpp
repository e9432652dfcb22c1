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

// Command-line driver. Exit codes: 0 success, 1 bad configuration or
// parameters, 2 I/O failure.

#include "sirsde/error.hpp"
#include "sirsde/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sirsde: stochastic SIR toolkit"};
    std::string config_file;
    std::string scenario;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> paths;
    std::optional<double> dt;
    std::optional<double> t_final;
    std::string out;
    bool quiet = false;

    app.add_option("-c,--config", config_file, "key = value configuration file");
    app.add_option("-s,--scenario", scenario,
                   "simulate | classify | stationary | lyapunov | tv-decay | support | example1 | example2 | example3");
    app.add_option("--seed", seed, "master seed");
    app.add_option("-n,--paths", paths, "number of sample paths");
    app.add_option("--dt", dt, "time step");
    app.add_option("-T,--t-final", t_final, "time horizon");
    app.add_option("-o,--out", out, "output directory");
    app.add_flag("-q,--quiet", quiet, "suppress the list of written files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        sirsde::ScenarioConfig cfg;
        if (!config_file.empty()) {
            cfg = sirsde::parse_config(config_file);
        } else if (scenario.empty()) {
            std::cerr << "error: give --config or --scenario\n";
            return kExitConfig;
        }
        if (!scenario.empty()) {
            cfg.scenario = sirsde::scenario_from_string(scenario);
        }
        if (seed) {
            cfg.master_seed = *seed;
        }
        if (paths) {
            cfg.n_paths = *paths;
        }
        if (dt) {
            cfg.dt = *dt;
        }
        if (t_final) {
            cfg.t_final = *t_final;
        }
        if (!out.empty()) {
            cfg.outputs = out;
        }
        cfg.quiet = cfg.quiet || quiet;

        const auto files = sirsde::run_scenario(cfg);
        if (!cfg.quiet) {
            for (const auto& f : files) {
                std::cout << f.string() << '\n';
            }
        }
        return 0;
    } catch (const sirsde::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == sirsde::ErrorCode::IoError ? kExitIo : kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
