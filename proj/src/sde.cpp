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

#include "sirsde/sde.hpp"

#include "sirsde/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace sirsde {

namespace {

constexpr double kFloor = 1e-300;
constexpr std::uint64_t kMaxSteps = 1000000000ULL;

void require_positive(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, std::string(what) + " must be a finite positive number");
    }
}

[[noreturn]] void non_finite(std::uint64_t step)
{
    throw Error(ErrorCode::NonFiniteState, "state left the representable range at step " + std::to_string(step));
}

bool finite_state(const DegenerateState& x) noexcept
{
    return std::isfinite(x.log_s) && std::isfinite(x.log_i) && std::isfinite(x.s) && std::isfinite(x.i) &&
           x.s > 0.0;
}

// One-dimensional logistic-free process dS = (alpha - kill S) dt + sigma1 S dB.
class BoundaryStepper {
public:
    BoundaryStepper(double alpha, double kill, double sigma1, double dt, Scheme scheme)
        : alpha_(alpha), kill_(kill), sigma1_(sigma1), dt_(dt), scheme_(scheme),
          c1_(kill + 0.5 * sigma1 * sigma1)
    {
    }

    void step(double& s, double& log_s, double dB) const noexcept
    {
        if (scheme_ == Scheme::LogEulerMaruyama) {
            log_s += (alpha_ / s - c1_) * dt_ + sigma1_ * dB;
            s = std::exp(log_s);
        } else {
            s += (alpha_ - kill_ * s) * dt_ + sigma1_ * s * dB;
            s = std::max(s, kFloor);
            log_s = std::log(s);
        }
    }

private:
    double alpha_;
    double kill_;
    double sigma1_;
    double dt_;
    Scheme scheme_;
    double c1_;
};

// Recovered class: dR = (gamma I - mu R) dt + sigma3 R dB.
class RecoveredStepper {
public:
    RecoveredStepper(const SirParams3& p, double dt, Scheme scheme)
        : gamma_(p.base.gamma), mu_(p.base.mu), sigma3_(p.sigma3), dt_(dt), scheme_(scheme),
          kill_(p.base.mu + 0.5 * p.sigma3 * p.sigma3)
    {
    }

    // i is the infective count at the start of the step.
    void step(double& r, double& log_r, double i, double dB) const noexcept
    {
        if (scheme_ == Scheme::LogEulerMaruyama) {
            log_r += (gamma_ * i / r - kill_) * dt_ + sigma3_ * dB;
            r = std::exp(log_r);
        } else {
            r += (gamma_ * i - mu_ * r) * dt_ + sigma3_ * r * dB;
            r = std::max(r, kFloor);
            log_r = std::log(r);
        }
    }

private:
    double gamma_;
    double mu_;
    double sigma3_;
    double dt_;
    Scheme scheme_;
    double kill_;
};

bool record_step(std::uint64_t k, std::uint64_t n, std::size_t stride)
{
    return k % stride == 0 || k == n;
}

void reserve_records(Trajectory& tr, std::uint64_t n, std::size_t stride, bool with_i, bool with_r)
{
    const std::size_t count = static_cast<std::size_t>(n / stride + 2);
    tr.times.reserve(count);
    tr.s.reserve(count);
    if (with_i) {
        tr.i.reserve(count);
        tr.log_i.reserve(count);
    }
    if (with_r) {
        tr.r.reserve(count);
    }
}

void push(Trajectory& tr, double t, const DegenerateState& x)
{
    tr.times.push_back(t);
    tr.s.push_back(x.s);
    tr.i.push_back(x.i);
    tr.log_i.push_back(x.log_i);
}

Trajectory simulate_sir3(const SirParams3& params, const InitialState& init, const PathConfig& cfg, RngStream rng,
                         bool shared_noise)
{
    cfg.check();
    check_rates(params.base);
    require_positive(init.s0, "s0");
    require_positive(init.i0, "i0");
    require_positive(init.r0, "r0");
    if (!std::isfinite(params.sigma3)) {
        throw Error(ErrorCode::DomainError, "sigma3 must be finite");
    }

    const DegenerateStepper si(params.base, cfg.dt, cfg.scheme);
    const RecoveredStepper rs(params, cfg.dt, cfg.scheme);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const std::uint64_t n = cfg.steps();

    RngStream b1 = shared_noise ? rng : rng.substream_of(0);
    RngStream b2 = rng.substream_of(1);
    RngStream b3 = rng.substream_of(2);

    Trajectory tr;
    reserve_records(tr, n, cfg.record_stride, true, true);
    DegenerateState x = DegenerateState::from_values(init.s0, init.i0);
    double r = init.r0;
    double log_r = std::log(r);
    push(tr, 0.0, x);
    tr.r.push_back(r);

    for (std::uint64_t k = 1; k <= n; ++k) {
        const double i_prev = x.i;
        const double dB1 = sqrt_dt * b1.normal();
        if (shared_noise) {
            if (!si.step(x, dB1)) {
                non_finite(k);
            }
            rs.step(r, log_r, i_prev, dB1);
        } else {
            // Independent noises: S and I move separately, so step them by hand.
            DegenerateState xs = x;
            const double dB2 = sqrt_dt * b2.normal();
            const double dB3 = sqrt_dt * b3.normal();
            if (!si.step(xs, dB1)) {
                non_finite(k);
            }
            DegenerateState xi = x;
            if (!si.step(xi, dB2)) {
                non_finite(k);
            }
            x.s = xs.s;
            x.log_s = xs.log_s;
            x.i = xi.i;
            x.log_i = xi.log_i;
            rs.step(r, log_r, i_prev, dB3);
        }
        if (!std::isfinite(log_r) || !std::isfinite(r)) {
            non_finite(k);
        }
        if (record_step(k, n, cfg.record_stride)) {
            push(tr, static_cast<double>(k) * cfg.dt, x);
            tr.r.push_back(r);
        }
    }
    return tr;
}

Trajectory simulate_one_dim(const SirParams& params, double kill, double s0, const PathConfig& cfg, RngStream rng)
{
    cfg.check();
    check_rates(params);
    require_positive(s0, "s0");

    const BoundaryStepper stepper(params.alpha, kill, params.sigma1, cfg.dt, cfg.scheme);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const std::uint64_t n = cfg.steps();

    Trajectory tr;
    reserve_records(tr, n, cfg.record_stride, false, false);
    double s = s0;
    double log_s = std::log(s0);
    tr.times.push_back(0.0);
    tr.s.push_back(s);
    for (std::uint64_t k = 1; k <= n; ++k) {
        stepper.step(s, log_s, sqrt_dt * rng.normal());
        if (!std::isfinite(log_s) || !std::isfinite(s) || !(s > 0.0)) {
            non_finite(k);
        }
        if (record_step(k, n, cfg.record_stride)) {
            tr.times.push_back(static_cast<double>(k) * cfg.dt);
            tr.s.push_back(s);
        }
    }
    return tr;
}

} // namespace

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::LogEulerMaruyama: return "log_euler";
    case Scheme::EulerMaruyamaProjected: return "projected_euler";
    }
    return "unknown";
}

Scheme scheme_from_string(std::string_view name)
{
    if (name == "log_euler" || name == "LogEulerMaruyama") {
        return Scheme::LogEulerMaruyama;
    }
    if (name == "projected_euler" || name == "EulerMaruyamaProjected") {
        return Scheme::EulerMaruyamaProjected;
    }
    throw Error(ErrorCode::ConfigError, "unknown scheme '" + std::string(name) + "'");
}

std::uint64_t PathConfig::steps() const
{
    return static_cast<std::uint64_t>(std::llround(t_final / dt));
}

void PathConfig::check() const
{
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::ConfigError, "dt must be > 0");
    }
    if (!(t_final > dt) || !std::isfinite(t_final)) {
        throw Error(ErrorCode::ConfigError, "t_final must exceed dt");
    }
    if (t_final / dt > static_cast<double>(kMaxSteps)) {
        throw Error(ErrorCode::ConfigError, "t_final/dt exceeds 1e9 steps");
    }
    if (record_stride < 1) {
        throw Error(ErrorCode::ConfigError, "record_stride must be >= 1");
    }
}

std::size_t auto_record_stride(const PathConfig& cfg, std::size_t max_points)
{
    const std::uint64_t n = cfg.steps();
    const std::uint64_t cap = std::max<std::uint64_t>(max_points, 2) - 1;
    return static_cast<std::size_t>(std::max<std::uint64_t>(1, (n + cap - 1) / cap));
}

DegenerateState DegenerateState::from_values(double s, double i)
{
    require_positive(s, "s0");
    require_positive(i, "i0");
    return {s, i, std::log(s), std::log(i)};
}

DegenerateStepper::DegenerateStepper(const SirParams& params, double dt, Scheme scheme)
    : p_(params), dt_(dt), scheme_(scheme), c1_(params.mu + 0.5 * params.sigma1 * params.sigma1),
      c2_(params.mu + params.rho + params.gamma + 0.5 * params.sigma2 * params.sigma2),
      m_(params.mu + params.rho + params.gamma)
{
}

bool DegenerateStepper::step(DegenerateState& x, double dB) const noexcept
{
    const double s = x.s;
    const double i = x.i;
    if (scheme_ == Scheme::LogEulerMaruyama) {
        x.log_s += (p_.alpha / s - p_.beta * i - c1_) * dt_ + p_.sigma1 * dB;
        x.log_i += (p_.beta * s - c2_) * dt_ + p_.sigma2 * dB;
        x.s = std::exp(x.log_s);
        x.i = std::exp(x.log_i);
    } else {
        x.s = std::max(s + (p_.alpha - p_.beta * s * i - p_.mu * s) * dt_ + p_.sigma1 * s * dB, kFloor);
        x.i = std::max(i + (p_.beta * s * i - m_ * i) * dt_ + p_.sigma2 * i * dB, kFloor);
        x.log_s = std::log(x.s);
        x.log_i = std::log(x.i);
    }
    return finite_state(x);
}

Trajectory simulate_degenerate(const SirParams& params, double s0, double i0, const PathConfig& cfg, RngStream rng)
{
    cfg.check();
    check_rates(params);
    const DegenerateStepper stepper(params, cfg.dt, cfg.scheme);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const std::uint64_t n = cfg.steps();

    Trajectory tr;
    reserve_records(tr, n, cfg.record_stride, true, false);
    DegenerateState x = DegenerateState::from_values(s0, i0);
    push(tr, 0.0, x);
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (!stepper.step(x, sqrt_dt * rng.normal())) {
            non_finite(k);
        }
        if (record_step(k, n, cfg.record_stride)) {
            push(tr, static_cast<double>(k) * cfg.dt, x);
        }
    }
    return tr;
}

Trajectory simulate_nondegenerate(const SirParams3& params, const InitialState& init, const PathConfig& cfg,
                                  RngStream rng)
{
    return simulate_sir3(params, init, cfg, rng, false);
}

Trajectory simulate_full_degenerate(const SirParams3& params, const InitialState& init, const PathConfig& cfg,
                                    RngStream rng)
{
    return simulate_sir3(params, init, cfg, rng, true);
}

Trajectory simulate_boundary(const SirParams& params, double s0, const PathConfig& cfg, RngStream rng)
{
    return simulate_one_dim(params, params.mu, s0, cfg, rng);
}

Trajectory simulate_tilde(const SirParams& params, double theta, double s0, const PathConfig& cfg, RngStream rng)
{
    require_positive(theta, "theta");
    return simulate_one_dim(params, params.mu + params.beta * theta, s0, cfg, rng);
}

CoupledPaths coupled_comparison(const SirParams& params, double s0, double i0, const PathConfig& cfg, RngStream rng)
{
    cfg.check();
    check_rates(params);
    const DegenerateStepper stepper(params, cfg.dt, cfg.scheme);
    const BoundaryStepper boundary(params.alpha, params.mu, params.sigma1, cfg.dt, cfg.scheme);
    const double sqrt_dt = std::sqrt(cfg.dt);
    const double c2 = params.mu + params.rho + params.gamma + 0.5 * params.sigma2 * params.sigma2;
    const double m = params.mu + params.rho + params.gamma;
    const std::uint64_t n = cfg.steps();

    CoupledPaths out;
    reserve_records(out.traj, n, cfg.record_stride, true, false);
    DegenerateState x = DegenerateState::from_values(s0, i0);
    double s_hat = s0;
    double log_s_hat = std::log(s0);
    double i_hat = i0;
    double log_i_hat = std::log(i0);

    auto record = [&](double t) {
        push(out.traj, t, x);
        out.s_hat.push_back(s_hat);
        out.i_hat.push_back(i_hat);
        out.log_i_hat.push_back(log_i_hat);
    };
    record(0.0);

    for (std::uint64_t k = 1; k <= n; ++k) {
        const double dB = sqrt_dt * rng.normal();
        const double s_hat_prev = s_hat;
        if (!stepper.step(x, dB)) {
            non_finite(k);
        }
        boundary.step(s_hat, log_s_hat, dB);
        if (cfg.scheme == Scheme::LogEulerMaruyama) {
            log_i_hat += (params.beta * s_hat_prev - c2) * cfg.dt + params.sigma2 * dB;
            i_hat = std::exp(log_i_hat);
        } else {
            i_hat = std::max(i_hat + (params.beta * s_hat_prev * i_hat - m * i_hat) * cfg.dt +
                                 params.sigma2 * i_hat * dB,
                             kFloor);
            log_i_hat = std::log(i_hat);
        }
        // I_hat grows at rate lambda and may overflow; ln I_hat stays finite.
        if (!std::isfinite(log_s_hat) || !std::isfinite(log_i_hat)) {
            non_finite(k);
        }
        if (record_step(k, n, cfg.record_stride)) {
            record(static_cast<double>(k) * cfg.dt);
        }
    }
    return out;
}

std::vector<DegenerateState> degenerate_states_at(const SirParams& params, double s0, double i0,
                                                  std::span<const double> times, const PathConfig& cfg,
                                                  RngStream rng)
{
    cfg.check();
    check_rates(params);
    const DegenerateStepper stepper(params, cfg.dt, cfg.scheme);
    const double sqrt_dt = std::sqrt(cfg.dt);

    std::vector<std::uint64_t> targets;
    targets.reserve(times.size());
    for (double t : times) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw Error(ErrorCode::ConfigError, "snapshot times must be finite and >= 0");
        }
        const auto k = static_cast<std::uint64_t>(std::llround(t / cfg.dt));
        if (!targets.empty() && k < targets.back()) {
            throw Error(ErrorCode::ConfigError, "snapshot times must be nondecreasing");
        }
        targets.push_back(k);
    }

    std::vector<DegenerateState> out;
    out.reserve(targets.size());
    DegenerateState x = DegenerateState::from_values(s0, i0);
    std::uint64_t k = 0;
    for (std::uint64_t target : targets) {
        for (; k < target; ++k) {
            if (!stepper.step(x, sqrt_dt * rng.normal())) {
                non_finite(k + 1);
            }
        }
        out.push_back(x);
    }
    return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job, unsigned threads)
{
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t k = 0; k < n; ++k) {
            job(k);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1)) {
                try {
                    job(k);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next.store(n);
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace sirsde
