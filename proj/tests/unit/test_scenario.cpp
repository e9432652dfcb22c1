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


#include "sirsde/error.hpp"
#include "sirsde/scenario.hpp"

#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sirsde;
namespace fs = std::filesystem;

namespace {

const char* kRates = "alpha = 20\nbeta = 4\nmu = 1\nrho = 10\ngamma = 1\nsigma1 = 1\nsigma2 = -1\n";

ErrorCode parse_code(const std::string& text)
{
    try {
        parse_config_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse failure");
    return ErrorCode::DomainError;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "sirsde_test_scenario" / name;
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("minimal config takes defaults")
{
    const ScenarioConfig cfg = parse_config_text(std::string("# comment\nscenario = classify\n") + kRates);
    CHECK(cfg.scenario == ScenarioKind::Classify);
    REQUIRE(cfg.params);
    CHECK(*cfg.params == presets::example1);
    CHECK(cfg.dt == 1e-3);
    CHECK(cfg.scheme == Scheme::LogEulerMaruyama);
    CHECK(cfg.master_seed == 1);
    CHECK_FALSE(cfg.t_final);
}

TEST_CASE("config errors")
{
    std::string no_beta = kRates;
    no_beta.erase(no_beta.find("beta"), 9);
    try {
        parse_config_text(no_beta);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("beta") != std::string::npos);
    }
    CHECK(parse_code(std::string(kRates) + "colour = red\n") == ErrorCode::ParseError);
    CHECK(parse_code(std::string(kRates) + "alpha = 3\n") == ErrorCode::ParseError);
    CHECK(parse_code(std::string(kRates) + "dt = fast\n") == ErrorCode::ParseError);
    CHECK(parse_code(std::string(kRates) + "no equals sign\n") == ErrorCode::ParseError);
    CHECK(parse_code(std::string(kRates) + "scenario = dance\n") == ErrorCode::ParseError);

    std::string zero = kRates;
    zero.replace(zero.find("sigma1 = 1"), 10, "sigma1 = 0");
    CHECK(parse_code(zero) == ErrorCode::ZeroSigma1);
    CHECK(parse_code(std::string(kRates) + "n_paths = 0\n") == ErrorCode::ConfigError);
}

TEST_CASE("examples need no rates")
{
    const ScenarioConfig cfg = parse_config_text("scenario = example2\nseed = 9\nn_paths = 3\n");
    CHECK(cfg.scenario == ScenarioKind::Example2);
    CHECK_FALSE(cfg.params);
    CHECK(cfg.master_seed == 9);
    CHECK(*cfg.n_paths == 3);
}

TEST_CASE("classification reports")
{
    const auto start = std::chrono::steady_clock::now();
    const auto j1 = classification_report(presets::example1);
    const auto j2 = classification_report(presets::example2);
    const auto j3 = classification_report(presets::example3);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));

    CHECK(j1["verdict"] == "Permanence");
    CHECK(j1["support"]["kind"] == "BarrierRegion");
    CHECK(j1["cstar"].get<double>() == doctest::Approx(1.9375).epsilon(1e-10));
    CHECK(j2["support"]["kind"] == "FullQuadrant");
    CHECK(j2["dstar"] == "-inf");
    CHECK(j2["cstar"].is_null());
    CHECK(j2["ljx_conditions"]["all"] == false);
    CHECK(j3["verdict"] == "Extinction");
    CHECK(j3["lambda"].get<double>() == doctest::Approx(-0.25));
    CHECK(j3.contains("paper_note"));
    CHECK_FALSE(j1.contains("paper_note"));
}

TEST_CASE("scenario runs are deterministic")
{
    for (const char* name : {"simulate", "stationary", "support", "classify", "lyapunov", "tv-decay"}) {
        std::string text = std::string("scenario = ") + name + "\n" + kRates;
        if (std::string(name) == "simulate") {
            text += "t_final = 2\nn_paths = 2\nmodel = nondegenerate\nsigma3 = 0.2\n";
        } else if (std::string(name) == "lyapunov") {
            text += "t_final = 12\nn_paths = 2\n";
        } else if (std::string(name) == "tv-decay") {
            text += "n_paths = 200\ncheckpoints = 0.5, 1\nreference_time = 2\ndt = 0.01\n";
        }
        ScenarioConfig cfg = parse_config_text(text);
        cfg.outputs = fresh_dir(std::string(name) + "_a");
        const auto first = run_scenario(cfg);
        cfg.outputs = fresh_dir(std::string(name) + "_b");
        const auto second = run_scenario(cfg);
        REQUIRE(first.size() == second.size());
        REQUIRE_FALSE(first.empty());
        for (std::size_t k = 0; k < first.size(); ++k) {
            CHECK(first[k].filename() == second[k].filename());
            CHECK(slurp(first[k]) == slurp(second[k]));
        }
    }
}

TEST_CASE("example 1 support boundary file")
{
    const fs::path dir = fresh_dir("ex1");
    run_example(1, 5, dir, 3);
    std::ifstream in(dir / "support_boundary.csv");
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "I,S_boundary");
    const auto comma = row.find(',');
    CHECK(std::stod(row.substr(0, comma)) == 1.0);
    CHECK(std::stod(row.substr(comma + 1)) == doctest::Approx(1.9375).epsilon(1e-10));
    CHECK(fs::exists(dir / "empirical_density_2d.csv"));
    CHECK(fs::exists(dir / "summary.json"));
}

TEST_CASE("example 3 files share a grid")
{
    const fs::path dir = fresh_dir("ex3");
    run_example(3, 5, dir, 50);
    std::ifstream dens(dir / "stationary_density.csv");
    std::ifstream emp(dir / "empirical_S_t50.csv");
    std::string a, b;
    std::getline(dens, a);
    std::getline(emp, b);
    CHECK(a == "x,density");
    CHECK(b == "bin_lo,bin_hi,mass");
    int rows = 0;
    while (std::getline(dens, a) && std::getline(emp, b)) {
        const double x = std::stod(a.substr(0, a.find(',')));
        const auto c1 = b.find(',');
        const double lo = std::stod(b.substr(0, c1));
        const double hi = std::stod(b.substr(c1 + 1, b.find(',', c1 + 1) - c1 - 1));
        CHECK(x == doctest::Approx(0.5 * (lo + hi)));
        ++rows;
    }
    CHECK(rows == 50);
}

TEST_CASE("unwritable output directory")
{
    ScenarioConfig cfg = parse_config_text(std::string("scenario = classify\n") + kRates);
    cfg.outputs = "/proc/sirsde_cannot_write_here";
    try {
        run_scenario(cfg);
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IoError);
    }
}
