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

#ifndef SIRSDE_ESTIMATORS_HPP
#define SIRSDE_ESTIMATORS_HPP

#include "sirsde/boundary.hpp"
#include "sirsde/params.hpp"
#include "sirsde/sde.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sirsde {

/// Equal-width histogram normalized to probability mass.
struct Histogram1D {
    std::vector<double> edges; ///< n + 1 strictly increasing
    std::vector<double> mass;  ///< n entries summing to 1
    std::size_t count = 0;

    std::size_t bins() const noexcept { return mass.size(); }
};

/// Row-major: mass[ix * ny + iy].
struct Histogram2D {
    std::vector<double> x_edges;
    std::vector<double> y_edges;
    std::vector<double> mass;
    std::size_t count = 0;

    std::size_t nx() const noexcept { return x_edges.empty() ? 0 : x_edges.size() - 1; }
    std::size_t ny() const noexcept { return y_edges.empty() ? 0 : y_edges.size() - 1; }
    double at(std::size_t ix, std::size_t iy) const { return mass[ix * ny() + iy]; }
};

struct SlopeEstimate {
    double slope = 0.0;
    /// Standard error treating the residual as Brownian: sigma_hat * sqrt(6 / (5 L))
    /// with sigma_hat^2 the residual quadratic variation per unit time and L the
    /// fitted time span. Ordinary least-squares errors are far too small for
    /// integrated-noise signals like ln I.
    double std_error = 0.0;
    std::size_t points = 0;
};

/// Least-squares slope of log_i against t over [burn_in, t_final].
/// Throws InsufficientData unless t_final - burn_in >= 10.
SlopeEstimate lyapunov_exponent(const Trajectory& traj, double burn_in);
/// Same fit on raw arrays.
SlopeEstimate fit_log_slope(std::span<const double> times, std::span<const double> log_values, double burn_in);

using StateFunction = std::function<double(double s, double i)>;

/// (1 / span) * sum f(state_k) * (t_{k+1} - t_k) over recorded steps with
/// t_k >= burn_in (left rectangle rule); span is the covered time.
/// Boundary trajectories pass i = 0. Throws InsufficientData when fewer than two
/// recorded points follow burn_in.
double time_average(const Trajectory& traj, const StateFunction& f, double burn_in);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// Equal-width bins over range (default [min, max] of the samples). With an
/// explicit range, samples outside it are counted in the nearest edge bin.
/// Identical samples without a range land in the middle of a unit-width span.
/// Throws EmptyInput on empty input.
Histogram1D empirical_density_1d(std::span<const double> samples, std::size_t n_bins,
                                 std::optional<Range> range = std::nullopt);

Histogram2D empirical_density_2d(std::span<const std::pair<double, double>> points, std::size_t nx, std::size_t ny,
                                 std::optional<Range> x_range = std::nullopt,
                                 std::optional<Range> y_range = std::nullopt);

/// Half the L1 distance between masses on identical grids; throws ShapeMismatch otherwise.
double tv_distance(const Histogram1D& h1, const Histogram1D& h2);
double tv_distance(const Histogram2D& h1, const Histogram2D& h2);

/// Exact bin masses of f* on the given edges; the tails below the first and above
/// the last edge are folded into the edge bins, matching empirical_density_1d.
Histogram1D binned_stationary_density(const StationaryDensity& density, std::span<const double> edges);

struct TvPoint {
    double t = 0.0;
    double tv = 0.0;
};

struct TvDecayOptions {
    std::size_t bins_per_axis = 12;
    /// Grid covers these quantiles of the reference sample in each coordinate.
    double lower_quantile = 0.01;
    double upper_quantile = 0.99;
    unsigned threads = 0;
};

/// TV distance between the ensemble histogram (S, I) at each checkpoint and the
/// histogram of the same ensemble at reference_time, the empirical stand-in for
/// the invariant measure. Path k uses RngStream(master_seed, k).
std::vector<TvPoint> tv_decay_series(const SirParams& params, double s0, double i0, std::size_t n_paths,
                                     std::span<const double> checkpoints, double reference_time,
                                     const PathConfig& cfg, std::uint64_t master_seed,
                                     const TvDecayOptions& options = {});

/// Kolmogorov-Smirnov statistic of samples against a continuous CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

} // namespace sirsde

#endif // SIRSDE_ESTIMATORS_HPP
