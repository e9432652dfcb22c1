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

#include "sirsde/estimators.hpp"

#include "sirsde/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sirsde {

namespace {

std::vector<double> equal_edges(double lo, double hi, std::size_t n)
{
    std::vector<double> edges(n + 1);
    const double w = (hi - lo) / static_cast<double>(n);
    for (std::size_t k = 0; k <= n; ++k) {
        edges[k] = lo + w * static_cast<double>(k);
    }
    edges[n] = hi;
    return edges;
}

Range span_of(std::span<const double> xs)
{
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    Range r{*mn, *mx};
    if (!(r.hi > r.lo)) {
        r = {r.lo - 0.5, r.lo + 0.5};
    }
    return r;
}

void check_range(const Range& r)
{
    if (!(r.hi > r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi)) {
        throw Error(ErrorCode::DomainError, "histogram range must satisfy lo < hi");
    }
}

// Bin index with out-of-range values clamped into the edge bins.
std::size_t bin_of(double x, const Range& r, std::size_t n)
{
    const double pos = (x - r.lo) / (r.hi - r.lo) * static_cast<double>(n);
    if (!(pos > 0.0)) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(pos), n - 1);
}

double quantile_of(std::vector<double> xs, double q)
{
    std::sort(xs.begin(), xs.end());
    const double pos = q * static_cast<double>(xs.size() - 1);
    const auto k = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(k);
    if (k + 1 >= xs.size()) {
        return xs.back();
    }
    return xs[k] + frac * (xs[k + 1] - xs[k]);
}

} // namespace

SlopeEstimate fit_log_slope(std::span<const double> times, std::span<const double> log_values, double burn_in)
{
    if (times.size() != log_values.size()) {
        throw Error(ErrorCode::ShapeMismatch, "times and values differ in length");
    }
    const auto first = static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), burn_in) - times.begin());
    const std::size_t n = times.size() - first;
    if (n < 3) {
        throw Error(ErrorCode::InsufficientData, "need at least three points after burn-in");
    }

    double t_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t k = first; k < times.size(); ++k) {
        t_mean += times[k];
        y_mean += log_values[k];
    }
    t_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = first; k < times.size(); ++k) {
        const double dt = times[k] - t_mean;
        sxx += dt * dt;
        sxy += dt * (log_values[k] - y_mean);
    }
    SlopeEstimate est;
    est.points = n;
    est.slope = sxy / sxx;

    double qv = 0.0;
    for (std::size_t k = first + 1; k < times.size(); ++k) {
        const double resid = (log_values[k] - log_values[k - 1]) - est.slope * (times[k] - times[k - 1]);
        qv += resid * resid;
    }
    const double span = times.back() - times[first];
    est.std_error = std::sqrt(qv / span) * std::sqrt(6.0 / (5.0 * span));
    return est;
}

SlopeEstimate lyapunov_exponent(const Trajectory& traj, double burn_in)
{
    if (traj.log_i.size() != traj.times.size() || traj.times.empty()) {
        throw Error(ErrorCode::InsufficientData, "trajectory carries no ln I samples");
    }
    if (traj.times.back() - burn_in < 10.0) {
        throw Error(ErrorCode::InsufficientData, "fit window after burn-in is shorter than 10 time units");
    }
    return fit_log_slope(traj.times, traj.log_i, burn_in);
}

double time_average(const Trajectory& traj, const StateFunction& f, double burn_in)
{
    const auto& t = traj.times;
    const bool has_i = traj.i.size() == t.size();
    const auto first = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), burn_in) - t.begin());
    if (t.size() < first + 2) {
        throw Error(ErrorCode::InsufficientData, "fewer than two recorded points after burn-in");
    }
    double acc = 0.0;
    double covered = 0.0;
    for (std::size_t k = first; k + 1 < t.size(); ++k) {
        const double w = t[k + 1] - t[k];
        acc += f(traj.s[k], has_i ? traj.i[k] : 0.0) * w;
        covered += w;
    }
    return acc / covered;
}

Histogram1D empirical_density_1d(std::span<const double> samples, std::size_t n_bins, std::optional<Range> range)
{
    if (samples.empty()) {
        throw Error(ErrorCode::EmptyInput, "no samples");
    }
    if (n_bins == 0) {
        throw Error(ErrorCode::DomainError, "n_bins must be >= 1");
    }
    const Range r = range.value_or(span_of(samples));
    check_range(r);

    std::vector<std::size_t> counts(n_bins, 0);
    for (double x : samples) {
        ++counts[bin_of(x, r, n_bins)];
    }
    Histogram1D h;
    h.edges = equal_edges(r.lo, r.hi, n_bins);
    h.count = samples.size();
    h.mass.resize(n_bins);
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (std::size_t k = 0; k < n_bins; ++k) {
        h.mass[k] = static_cast<double>(counts[k]) * inv;
    }
    return h;
}

Histogram2D empirical_density_2d(std::span<const std::pair<double, double>> points, std::size_t nx, std::size_t ny,
                                 std::optional<Range> x_range, std::optional<Range> y_range)
{
    if (points.empty()) {
        throw Error(ErrorCode::EmptyInput, "no points");
    }
    if (nx == 0 || ny == 0) {
        throw Error(ErrorCode::DomainError, "bin counts must be >= 1");
    }
    std::vector<double> xs(points.size());
    std::vector<double> ys(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        xs[k] = points[k].first;
        ys[k] = points[k].second;
    }
    const Range rx = x_range.value_or(span_of(xs));
    const Range ry = y_range.value_or(span_of(ys));
    check_range(rx);
    check_range(ry);

    std::vector<std::size_t> counts(nx * ny, 0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        ++counts[bin_of(xs[k], rx, nx) * ny + bin_of(ys[k], ry, ny)];
    }
    Histogram2D h;
    h.x_edges = equal_edges(rx.lo, rx.hi, nx);
    h.y_edges = equal_edges(ry.lo, ry.hi, ny);
    h.count = points.size();
    h.mass.resize(counts.size());
    const double inv = 1.0 / static_cast<double>(points.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        h.mass[k] = static_cast<double>(counts[k]) * inv;
    }
    return h;
}

double tv_distance(const Histogram1D& h1, const Histogram1D& h2)
{
    if (h1.edges != h2.edges || h1.mass.size() != h2.mass.size()) {
        throw Error(ErrorCode::ShapeMismatch, "histograms are on different grids");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < h1.mass.size(); ++k) {
        acc += std::abs(h1.mass[k] - h2.mass[k]);
    }
    return std::min(1.0, 0.5 * acc);
}

double tv_distance(const Histogram2D& h1, const Histogram2D& h2)
{
    if (h1.x_edges != h2.x_edges || h1.y_edges != h2.y_edges || h1.mass.size() != h2.mass.size()) {
        throw Error(ErrorCode::ShapeMismatch, "histograms are on different grids");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < h1.mass.size(); ++k) {
        acc += std::abs(h1.mass[k] - h2.mass[k]);
    }
    return std::min(1.0, 0.5 * acc);
}

Histogram1D binned_stationary_density(const StationaryDensity& density, std::span<const double> edges)
{
    if (edges.size() < 2) {
        throw Error(ErrorCode::EmptyInput, "need at least two edges");
    }
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (!(edges[k] > edges[k - 1])) {
            throw Error(ErrorCode::DomainError, "edges must be strictly increasing");
        }
    }
    auto cdf = [&](double x) { return x > 0.0 ? density.cdf(x) : 0.0; };
    Histogram1D h;
    h.edges.assign(edges.begin(), edges.end());
    const std::size_t n = edges.size() - 1;
    h.mass.resize(n);
    double prev = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double next = (k + 1 == n) ? 1.0 : cdf(edges[k + 1]);
        h.mass[k] = next - prev;
        prev = next;
    }
    return h;
}

std::vector<TvPoint> tv_decay_series(const SirParams& params, double s0, double i0, std::size_t n_paths,
                                     std::span<const double> checkpoints, double reference_time,
                                     const PathConfig& cfg, std::uint64_t master_seed,
                                     const TvDecayOptions& options)
{
    if (n_paths < 2) {
        throw Error(ErrorCode::InsufficientData, "tv_decay_series needs at least two paths");
    }
    if (checkpoints.empty()) {
        throw Error(ErrorCode::EmptyInput, "no checkpoints");
    }
    for (double t : checkpoints) {
        if (!(t <= reference_time) || !(t >= 0.0)) {
            throw Error(ErrorCode::ConfigError, "checkpoints must lie in [0, reference_time]");
        }
    }

    std::vector<double> times(checkpoints.begin(), checkpoints.end());
    times.push_back(reference_time);
    std::vector<std::size_t> order(times.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
    std::vector<double> sorted(times.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted[k] = times[order[k]];
    }

    // snapshots[path][time slot in original order]
    std::vector<std::vector<DegenerateState>> snapshots(n_paths);
    parallel_for(
        n_paths,
        [&](std::size_t k) {
            auto states = degenerate_states_at(params, s0, i0, sorted, cfg,
                                               RngStream(master_seed, static_cast<std::uint32_t>(k)));
            std::vector<DegenerateState> in_order(times.size());
            for (std::size_t j = 0; j < order.size(); ++j) {
                in_order[order[j]] = states[j];
            }
            snapshots[k] = std::move(in_order);
        },
        options.threads);

    // Grid in (ln S, ln I), fixed by the reference sample.
    const std::size_t ref = times.size() - 1;
    std::vector<double> ls(n_paths);
    std::vector<double> li(n_paths);
    for (std::size_t k = 0; k < n_paths; ++k) {
        ls[k] = snapshots[k][ref].log_s;
        li[k] = snapshots[k][ref].log_i;
    }
    Range rx{quantile_of(ls, options.lower_quantile), quantile_of(ls, options.upper_quantile)};
    Range ry{quantile_of(li, options.lower_quantile), quantile_of(li, options.upper_quantile)};
    if (!(rx.hi > rx.lo)) {
        rx = {rx.lo - 0.5, rx.lo + 0.5};
    }
    if (!(ry.hi > ry.lo)) {
        ry = {ry.lo - 0.5, ry.lo + 0.5};
    }

    auto histogram_at = [&](std::size_t slot) {
        std::vector<std::pair<double, double>> pts(n_paths);
        for (std::size_t k = 0; k < n_paths; ++k) {
            pts[k] = {snapshots[k][slot].log_s, snapshots[k][slot].log_i};
        }
        return empirical_density_2d(pts, options.bins_per_axis, options.bins_per_axis, rx, ry);
    };

    const Histogram2D reference = histogram_at(ref);
    std::vector<TvPoint> out;
    out.reserve(checkpoints.size());
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
        out.push_back({checkpoints[j], tv_distance(histogram_at(j), reference)});
    }
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.empty()) {
        throw Error(ErrorCode::EmptyInput, "no samples");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double f = cdf(samples[k]);
        d = std::max({d, f - static_cast<double>(k) / n, static_cast<double>(k + 1) / n - f});
    }
    return d;
}

} // namespace sirsde
