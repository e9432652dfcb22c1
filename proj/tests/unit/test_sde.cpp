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


#include "sirsde/boundary.hpp"
#include "sirsde/error.hpp"
#include "sirsde/estimators.hpp"
#include "sirsde/sde.hpp"

#include <boost/numeric/odeint.hpp>
#include <doctest.h>

#include <array>
#include <cmath>

using namespace sirsde;

namespace {

SirParams noiseless(SirParams p)
{
    p.sigma1 = 0.0;
    p.sigma2 = 0.0;
    return p;
}

// Deterministic SIR reference by adaptive Runge-Kutta (Dormand-Prince).
std::array<double, 2> ode_reference(const SirParams& p, double s0, double i0, double t)
{
    using State = std::array<double, 2>;
    State x{s0, i0};
    const double m = p.mu + p.rho + p.gamma;
    auto rhs = [&](const State& y, State& dy, double) {
        dy[0] = p.alpha - p.beta * y[0] * y[1] - p.mu * y[0];
        dy[1] = p.beta * y[0] * y[1] - m * y[1];
    };
    namespace ode = boost::numeric::odeint;
    ode::integrate_adaptive(ode::make_dense_output(1e-12, 1e-12, ode::runge_kutta_dopri5<State>()), rhs, x, 0.0, t,
                            1e-4);
    return x;
}

} // namespace

TEST_CASE("path configuration")
{
    PathConfig cfg;
    CHECK(cfg.steps() == 10000);
    cfg.dt = 0.0;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg = PathConfig{};
    cfg.record_stride = 0;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg = PathConfig{1e-9, 10.0, Scheme::LogEulerMaruyama, 1};
    CHECK_THROWS_AS(cfg.check(), Error);
    CHECK(auto_record_stride(PathConfig{1e-3, 1e4, Scheme::LogEulerMaruyama, 1}) == 11);
    CHECK(scheme_from_string("projected_euler") == Scheme::EulerMaruyamaProjected);
    CHECK_THROWS_AS(scheme_from_string("milstein"), Error);
}

TEST_CASE("recording grid")
{
    const PathConfig cfg{0.01, 1.005, Scheme::LogEulerMaruyama, 7};
    const Trajectory tr = simulate_degenerate(presets::example1, 1.0, 1.0, cfg, RngStream(1, 0));
    REQUIRE(tr.size() >= 2);
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.times.back() == doctest::Approx(cfg.steps() * cfg.dt));
    for (std::size_t k = 1; k + 1 < tr.size(); ++k) {
        CHECK(tr.times[k] == doctest::Approx(7 * k * 0.01));
    }
}

TEST_CASE("noiseless runs match a Runge-Kutta reference")
{
    const SirParams p = noiseless(presets::example1);
    const PathConfig cfg{1e-3, 10.0, Scheme::LogEulerMaruyama, 100};
    const Trajectory tr = simulate_degenerate(p, 1.0, 1.0, cfg, RngStream(1, 0));
    const auto ref = ode_reference(p, 1.0, 1.0, 10.0);
    CHECK(tr.s.back() == doctest::Approx(ref[0]).epsilon(1e-3));
    CHECK(tr.i.back() == doctest::Approx(ref[1]).epsilon(1e-3));

    const Trajectory nd =
        simulate_nondegenerate({p, 0.0}, {1.0, 1.0, 1.0}, cfg, RngStream(1, 0));
    CHECK(nd.s.back() == doctest::Approx(ref[0]).epsilon(1e-3));
    CHECK(nd.i.back() == doctest::Approx(ref[1]).epsilon(1e-3));
}

TEST_CASE("noiseless boundary process")
{
    SirParams p = noiseless(presets::example1);
    const double eq = p.alpha / p.mu;
    const double s0 = 3.0;
    const Trajectory fine = simulate_boundary(p, s0, {1e-6, 1.0, Scheme::LogEulerMaruyama, 1000000}, RngStream(1, 0));
    CHECK(fine.s.back() == doctest::Approx(eq + (s0 - eq) * std::exp(-p.mu)).epsilon(1e-6));
    const Trajectory late = simulate_boundary(p, s0, {1e-3, 40.0, Scheme::LogEulerMaruyama, 1000}, RngStream(1, 0));
    CHECK(late.s.back() == doctest::Approx(eq).epsilon(1e-6));
}

TEST_CASE("recovered class without noise or inflow decays exactly")
{
    SirParams p = presets::example1;
    p.gamma = 0.0;
    const PathConfig cfg{1e-3, 5.0, Scheme::LogEulerMaruyama, 1000};
    const Trajectory tr = simulate_full_degenerate({p, 0.0}, {1.0, 1.0, 1.0}, cfg, RngStream(3, 0));
    for (std::size_t k = 0; k < tr.size(); ++k) {
        CHECK(tr.r[k] == doctest::Approx(std::exp(-p.mu * tr.times[k])).epsilon(1e-12));
    }
}

TEST_CASE("full degenerate model shares the (S, I) path")
{
    const PathConfig cfg{1e-3, 5.0, Scheme::LogEulerMaruyama, 1};
    const Trajectory a = simulate_degenerate(presets::example1, 1.0, 1.0, cfg, RngStream(9, 2));
    const Trajectory b = simulate_full_degenerate({presets::example1, 0.3}, {1.0, 1.0, 1.0}, cfg, RngStream(9, 2));
    CHECK(a.s == b.s);
    CHECK(a.i == b.i);
    CHECK(a.log_i == b.log_i);
}

TEST_CASE("positivity over a million steps")
{
    const PathConfig cfg{1e-3, 1000.0, Scheme::LogEulerMaruyama, 1000};
    for (bool shared : {false, true}) {
        const SirParams3 p{presets::example1, 0.5};
        const Trajectory tr = shared ? simulate_full_degenerate(p, {1.0, 1.0, 1.0}, cfg, RngStream(4, 0))
                                     : simulate_nondegenerate(p, {1.0, 1.0, 1.0}, cfg, RngStream(4, 0));
        for (std::size_t k = 0; k < tr.size(); ++k) {
            REQUIRE(tr.s[k] > 0.0);
            REQUIRE(tr.i[k] > 0.0);
            REQUIRE(tr.r[k] > 0.0);
            REQUIRE(tr.log_i[k] == doctest::Approx(std::log(tr.i[k])));
        }
    }
}

TEST_CASE("recovered class mean decays as r0 exp(-mu t) when gamma = 0")
{
    SirParams p = presets::example1;
    p.gamma = 0.0;
    const PathConfig cfg{1e-3, 1.0, Scheme::LogEulerMaruyama, 1000};
    double mean = 0.0;
    const int n = 100;
    for (int k = 0; k < n; ++k) {
        mean += simulate_nondegenerate({p, 0.1}, {1.0, 1.0, 2.0}, cfg, RngStream(5, k)).r.back() / n;
    }
    CHECK(mean == doctest::Approx(2.0 * std::exp(-p.mu)).epsilon(0.05));
}

TEST_CASE("tilde process")
{
    const PathConfig cfg{1e-3, 20.0, Scheme::LogEulerMaruyama, 1};
    const Trajectory hat = simulate_boundary(presets::example1, 5.0, cfg, RngStream(6, 0));
    const Trajectory tiny = simulate_tilde(presets::example1, 1e-300, 5.0, cfg, RngStream(6, 0));
    CHECK(hat.s == tiny.s);
    const Trajectory tilde = simulate_tilde(presets::example1, 1.0, 5.0, cfg, RngStream(6, 0));
    for (std::size_t k = 0; k < hat.size(); ++k) {
        REQUIRE(tilde.s[k] <= hat.s[k]);
    }
    CHECK_THROWS_AS(simulate_tilde(presets::example1, 0.0, 5.0, cfg, RngStream(6, 0)), Error);

    const PathConfig long_run{1e-3, 2000.0, Scheme::LogEulerMaruyama, 10};
    const Trajectory avg = simulate_tilde(presets::example1, 1.0, 4.0, long_run, RngStream(6, 1));
    CHECK(time_average(avg, [](double s, double) { return s; }, 0.0) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("comparison coupling")
{
    const PathConfig cfg{1e-3, 10.0, Scheme::LogEulerMaruyama, 1};
    const CoupledPaths c = coupled_comparison(presets::example1, 1.0, 1.0, cfg, RngStream(8, 0));
    for (std::size_t k = 0; k < c.traj.size(); ++k) {
        REQUIRE(c.traj.s[k] <= c.s_hat[k] * (1 + 1e-9));
        REQUIRE(c.traj.log_i[k] <= c.log_i_hat[k] + std::log1p(1e-9));
    }

    // beta = 0 decouples S from I
    SirParams p = presets::example1;
    p.beta = 1e-300;
    const CoupledPaths d = coupled_comparison(p, 1.0, 1.0, cfg, RngStream(8, 0));
    CHECK(d.traj.s == d.s_hat);
}

TEST_CASE("boundary process started in equilibrium stays there")
{
    const auto f = StationaryDensity::from_params(presets::example1);
    RngStream init(10, 0);
    const PathConfig cfg{1e-3, 10.0, Scheme::LogEulerMaruyama, 10000};
    const std::size_t n = 2000;
    std::vector<double> end(n);
    for (std::size_t k = 0; k < n; ++k) {
        end[k] = simulate_boundary(presets::example1, f.sample(init), cfg, RngStream(10, 1 + k)).s.back();
    }
    CHECK(ks_statistic(end, [&](double x) { return f.cdf(x); }) < 1.36 / std::sqrt(double(n)));
}

TEST_CASE("weak order: halving dt barely moves the mean")
{
    const std::size_t n = 1000;
    const double dt = 1e-3;
    const DegenerateStepper coarse(presets::example1, dt, Scheme::LogEulerMaruyama);
    const DegenerateStepper fine(presets::example1, dt / 2, Scheme::LogEulerMaruyama);
    double mc = 0.0, mf = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        RngStream rng(11, static_cast<std::uint32_t>(k));
        DegenerateState xc = DegenerateState::from_values(1.0, 1.0);
        DegenerateState xf = xc;
        for (int j = 0; j < 1000; ++j) {
            const double a = std::sqrt(dt / 2) * rng.normal();
            const double b = std::sqrt(dt / 2) * rng.normal();
            fine.step(xf, a);
            fine.step(xf, b);
            coarse.step(xc, a + b);
        }
        mc += xc.s / n;
        mf += xf.s / n;
        m2 += xc.s * xc.s / n;
    }
    const double se = std::sqrt((m2 - mc * mc) / n);
    CHECK(std::abs(mc - mf) < se);
}

TEST_CASE("extinction parameters give negative log growth")
{
    const PathConfig cfg{1e-3, 500.0, Scheme::LogEulerMaruyama, 1000};
    int negative = 0;
    for (std::uint32_t k = 0; k < 20; ++k) {
        const Trajectory tr = simulate_degenerate(presets::example3, 1.0, 1.0, cfg, RngStream(12, k));
        negative += tr.log_i.back() / 500.0 < 0.0;
    }
    CHECK(negative >= 19);
}

TEST_CASE("determinism and thread independence")
{
    const PathConfig cfg{1e-3, 2.0, Scheme::LogEulerMaruyama, 1};
    std::vector<Trajectory> one(8), many(8);
    parallel_for(8, [&](std::size_t k) {
        one[k] = simulate_degenerate(presets::example2, 1.0, 1.0, cfg, RngStream(13, k));
    }, 1);
    parallel_for(8, [&](std::size_t k) {
        many[k] = simulate_degenerate(presets::example2, 1.0, 1.0, cfg, RngStream(13, k));
    }, 4);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(one[k].s == many[k].s);
        CHECK(one[k].log_i == many[k].log_i);
    }
    CHECK_THROWS_AS(parallel_for(4, [](std::size_t k) {
        if (k == 2) {
            throw Error(ErrorCode::DomainError, "boom");
        }
    }, 2), Error);
}

TEST_CASE("projected scheme stays positive")
{
    const PathConfig cfg{1e-2, 50.0, Scheme::EulerMaruyamaProjected, 1};
    const Trajectory tr = simulate_degenerate(presets::example3_strong_noise, 1.0, 1.0, cfg, RngStream(14, 0));
    for (std::size_t k = 0; k < tr.size(); ++k) {
        REQUIRE(tr.s[k] > 0.0);
        REQUIRE(tr.i[k] > 0.0);
    }
}
