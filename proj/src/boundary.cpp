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

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace sirsde {

StationaryDensity::StationaryDensity(double shape, double scale) : a_(shape), b_(scale)
{
    if (!(shape > 1.0) || !(scale > 0.0)) {
        throw Error(ErrorCode::DomainError, "stationary density needs shape > 1 and scale > 0");
    }
    log_norm_ = a_ * std::log(b_) - std::lgamma(a_);
}

StationaryDensity StationaryDensity::from_params(const SirParams& params)
{
    const SirParams p = validate(params);
    const double s1sq = p.sigma1 * p.sigma1;
    const double c1 = p.mu + 0.5 * s1sq;
    return StationaryDensity(2.0 * c1 / s1sq, 2.0 * p.alpha / s1sq);
}

double StationaryDensity::log_density_at(double x) const
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::DomainError, "density evaluated at x <= 0");
    }
    return log_norm_ - (a_ + 1.0) * std::log(x) - b_ / x;
}

double StationaryDensity::density_at(double x) const
{
    return std::exp(log_density_at(x));
}

double StationaryDensity::cdf(double x) const
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::DomainError, "cdf evaluated at x <= 0");
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    return boost::math::gamma_q(a_, b_ / x);
}

double StationaryDensity::quantile(double p) const
{
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::DomainError, "quantile level must lie in (0, 1)");
    }
    return b_ / boost::math::gamma_q_inv(a_, p);
}

double StationaryDensity::sample(RngStream& rng) const
{
    return b_ / rng.gamma(a_);
}

std::vector<double> StationaryDensity::sample(RngStream& rng, std::size_t n) const
{
    std::vector<double> out(n);
    for (auto& x : out) {
        x = sample(rng);
    }
    return out;
}

} // namespace sirsde
