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

#ifndef SIRSDE_BOUNDARY_HPP
#define SIRSDE_BOUNDARY_HPP

#include "sirsde/params.hpp"
#include "sirsde/rng.hpp"

#include <cstddef>
#include <vector>

namespace sirsde {

/// Stationary law of the disease-free process dS = (alpha - mu S) dt + sigma1 S dB:
///
///   f*(x) = b^a / Gamma(a) * x^-(a+1) * exp(-b/x),   x > 0,
///
/// i.e. 1/S is Gamma(shape a, rate b).
class StationaryDensity {
public:
    StationaryDensity(double shape, double scale);

    static StationaryDensity from_params(const SirParams& params);

    double shape() const noexcept { return a_; }
    double scale() const noexcept { return b_; }
    /// log(b^a / Gamma(a))
    double log_normalizer() const noexcept { return log_norm_; }

    double density_at(double x) const;
    double log_density_at(double x) const;
    /// P(X <= x) = Q(a, b/x), the upper regularized incomplete gamma function.
    double cdf(double x) const;
    /// Inverse of cdf for p in (0, 1).
    double quantile(double p) const;
    double mean() const noexcept { return b_ / (a_ - 1.0); }
    double mode() const noexcept { return b_ / (a_ + 1.0); }

    double sample(RngStream& rng) const;
    std::vector<double> sample(RngStream& rng, std::size_t n) const;

private:
    double a_;
    double b_;
    double log_norm_;
};

inline double density_at(const StationaryDensity& d, double x) { return d.density_at(x); }
inline double stationary_cdf(const StationaryDensity& d, double x) { return d.cdf(x); }
inline double stationary_mean(const StationaryDensity& d) noexcept { return d.mean(); }

} // namespace sirsde

#endif // SIRSDE_BOUNDARY_HPP
