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

#include "sirsde/params.hpp"

#include "sirsde/error.hpp"
#include "sirsde/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sirsde {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::ZeroSigma1: return "ZeroSigma1";
    case ErrorCode::SigmaTwoZero: return "SigmaTwoZero";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Extinction: return "Extinction";
    case Verdict::Permanence: return "Permanence";
    case Verdict::Critical: return "Critical";
    }
    return "Unknown";
}

void check_rates(const SirParams& p)
{
    auto positive = [](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x)) {
            throw Error(ErrorCode::NonPositiveRate, std::string(name) + " must be > 0");
        }
    };
    positive(p.alpha, "alpha");
    positive(p.beta, "beta");
    positive(p.mu, "mu");
    if (!(p.rho >= 0.0) || !std::isfinite(p.rho)) {
        throw Error(ErrorCode::NegativeRate, "rho must be >= 0");
    }
    if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma)) {
        throw Error(ErrorCode::NegativeRate, "gamma must be >= 0");
    }
    if (!std::isfinite(p.sigma1) || !std::isfinite(p.sigma2)) {
        throw Error(ErrorCode::DomainError, "noise intensities must be finite");
    }
}

SirParams validate(const SirParams& params)
{
    check_rates(params);
    if (params.sigma1 == 0.0) {
        throw Error(ErrorCode::ZeroSigma1, "sigma1 must be nonzero");
    }
    SirParams out = params;
    if (out.sigma1 < 0.0) {
        out.sigma1 = -out.sigma1;
        out.sigma2 = -out.sigma2;
    }
    return out;
}

double threshold_lambda(const SirParams& p) noexcept
{
    return p.alpha * p.beta / p.mu - (p.mu + p.rho + p.gamma + 0.5 * p.sigma2 * p.sigma2);
}

double threshold_lambda_deterministic(const SirParams& p) noexcept
{
    return p.beta * p.alpha / p.mu - (p.mu + p.rho + p.gamma);
}

double reproduction_number(const SirParams& p) noexcept
{
    return p.beta * p.alpha / (p.mu * (p.mu + p.rho + p.gamma));
}

Verdict classify_lambda(double lambda) noexcept
{
    if (std::abs(lambda) < kCriticalTolerance) {
        return Verdict::Critical;
    }
    return lambda < 0.0 ? Verdict::Extinction : Verdict::Permanence;
}

LjxReport ljx_sufficient_conditions(const SirParams& p)
{
    LjxReport rep;
    const double m = p.mu + p.rho + p.gamma;
    const double s1sq = p.sigma1 * p.sigma1;
    const double s2sq = p.sigma2 * p.sigma2;

    rep.mu_cond = p.mu > s1sq;
    rep.rho_cond = m > s2sq;
    rep.r0_cond = reproduction_number(p) > 1.0;
    rep.s_star = m / p.beta;
    rep.i_star = p.alpha / m - p.mu / p.beta;

    const double d1 = p.mu - s1sq;
    const double d2 = m - s2sq;
    if (d1 == 0.0 || d2 == 0.0) {
        rep.delta = std::numeric_limits<double>::quiet_NaN();
        rep.delta_cond.reset();
    } else {
        const double ss = rep.s_star * rep.s_star;
        const double is = rep.i_star * rep.i_star;
        rep.delta = p.mu * s1sq / d1 * ss + m * s2sq / d2 * is + m / (2.0 * p.beta) * rep.i_star * s2sq;
        const double bound = std::min(p.mu * p.mu / d1 * ss, m * m / d2 * is);
        rep.delta_cond = rep.delta < bound;
    }
    rep.all = rep.mu_cond && rep.rho_cond && rep.r0_cond && rep.delta_cond.value_or(false);
    return rep;
}

DerivedQuantities derive(const SirParams& params)
{
    const SirParams p = validate(params);
    DerivedQuantities d;
    const double s1sq = p.sigma1 * p.sigma1;
    d.c1 = p.mu + 0.5 * s1sq;
    d.c2 = p.mu + p.rho + p.gamma + 0.5 * p.sigma2 * p.sigma2;
    d.r = -p.sigma2 / p.sigma1;
    d.a = 2.0 * d.c1 / s1sq;
    d.b = 2.0 * p.alpha / s1sq;
    d.lambda = threshold_lambda(p);
    d.lambda_d = threshold_lambda_deterministic(p);
    d.r0 = reproduction_number(p);
    d.dstar = compute_dstar(p).value;
    d.cstar = compute_cstar(p, d.dstar);
    d.verdict = classify_lambda(d.lambda);
    return d;
}

} // namespace sirsde
