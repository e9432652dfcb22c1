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

#ifndef SIRSDE_SDE_HPP
#define SIRSDE_SDE_HPP

#include "sirsde/params.hpp"
#include "sirsde/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace sirsde {

enum class Scheme {
    /// Euler-Maruyama on (ln S, ln I[, ln R]); positive for any step size.
    LogEulerMaruyama,
    /// Euler-Maruyama on (S, I[, R]) with the state clamped at 1e-300. Cross-checks only.
    EulerMaruyamaProjected,
};

std::string_view to_string(Scheme s) noexcept;
Scheme scheme_from_string(std::string_view name);

struct PathConfig {
    double dt = 1e-3;
    double t_final = 10.0;
    Scheme scheme = Scheme::LogEulerMaruyama;
    std::size_t record_stride = 1;

    /// Number of integration steps, round(t_final / dt).
    std::uint64_t steps() const;
    /// Throws Error{ConfigError} unless dt > 0, t_final > dt, steps <= 1e9, stride >= 1.
    void check() const;
};

/// Smallest stride keeping at most max_points recorded samples.
std::size_t auto_record_stride(const PathConfig& cfg, std::size_t max_points = 1000000);

/// One realized path. Entries of i are exp(log_i) and may underflow to 0 on
/// extinction runs; log_i stays exact. Boundary runs leave i/log_i empty,
/// two-dimensional runs leave r empty.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> s;
    std::vector<double> i;
    std::vector<double> log_i;
    std::vector<double> r;

    std::size_t size() const noexcept { return times.size(); }
};

/// Rates of the three-compartment models.
struct SirParams3 {
    SirParams base;
    double sigma3 = 0.0;
};

struct InitialState {
    double s0 = 1.0;
    double i0 = 1.0;
    double r0 = 1.0; ///< recovered class, three-compartment runs only
};

/// State of the two-dimensional system; both the values and their logs are kept.
struct DegenerateState {
    double s = 0.0;
    double i = 0.0;
    double log_s = 0.0;
    double log_i = 0.0;

    static DegenerateState from_values(double s, double i);
};

/// Single step of the two-dimensional system driven by one Brownian increment.
class DegenerateStepper {
public:
    DegenerateStepper(const SirParams& params, double dt, Scheme scheme);

    /// Advances in place; returns false when the new state is not finite.
    bool step(DegenerateState& x, double dB) const noexcept;

    double dt() const noexcept { return dt_; }

private:
    SirParams p_;
    double dt_;
    Scheme scheme_;
    double c1_;
    double c2_;
    double m_;
};

Trajectory simulate_degenerate(const SirParams& params, double s0, double i0, const PathConfig& cfg, RngStream rng);

/// Independent noises on S, I, R drawn from substreams 0, 1, 2 of rng.
Trajectory simulate_nondegenerate(const SirParams3& params, const InitialState& init, const PathConfig& cfg,
                                  RngStream rng);

/// One shared Brownian path for S, I and R. The (S, I) part is bit-identical
/// to simulate_degenerate with the same stream.
Trajectory simulate_full_degenerate(const SirParams3& params, const InitialState& init, const PathConfig& cfg,
                                    RngStream rng);

/// Disease-free process dS = (alpha - mu S) dt + sigma1 S dB.
Trajectory simulate_boundary(const SirParams& params, double s0, const PathConfig& cfg, RngStream rng);

/// dS = (alpha - (beta theta + mu) S) dt + sigma1 S dB, theta > 0.
Trajectory simulate_tilde(const SirParams& params, double theta, double s0, const PathConfig& cfg, RngStream rng);

struct CoupledPaths {
    Trajectory traj;
    std::vector<double> s_hat; ///< boundary process
    std::vector<double> i_hat; ///< dI = I (beta S_hat - (mu+rho+gamma)) dt + sigma2 I dB; may be +inf
    std::vector<double> log_i_hat; ///< always finite; compare on this scale
};

/// (S, I), S_hat and I_hat driven by the same Brownian increments.
CoupledPaths coupled_comparison(const SirParams& params, double s0, double i0, const PathConfig& cfg,
                                RngStream rng);

/// States of the two-dimensional system at the steps closest to each of the
/// (nondecreasing) times, from one path. Same draws as simulate_degenerate.
std::vector<DegenerateState> degenerate_states_at(const SirParams& params, double s0, double i0,
                                                  std::span<const double> times, const PathConfig& cfg,
                                                  RngStream rng);

/// Runs job(k) for k in [0, n) on a pool of threads. Jobs must write only to
/// their own slot; results are then independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job, unsigned threads = 0);

} // namespace sirsde

#endif // SIRSDE_SDE_HPP
