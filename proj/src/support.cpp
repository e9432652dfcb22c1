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

#include "sirsde/support.hpp"

#include "sirsde/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sirsde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Constants {
    double c1;
    double c2;
    double r;
};

Constants constants(const SirParams& p)
{
    if (p.sigma2 == 0.0) {
        throw Error(ErrorCode::SigmaTwoZero, "sigma2 must be nonzero");
    }
    const SirParams q = validate(p);
    return {q.mu + 0.5 * q.sigma1 * q.sigma1, q.mu + q.rho + q.gamma + 0.5 * q.sigma2 * q.sigma2,
            -q.sigma2 / q.sigma1};
}

void require_positive(double x, const char* what)
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::DomainError, std::string(what) + " must be > 0");
    }
}

double psi_with(const SirParams& p, const Constants& k, double u)
{
    return -(k.c1 * k.r + k.c2) * std::pow(u, k.r) + p.beta * std::pow(u, 1.0 + k.r) +
           p.alpha * k.r * std::pow(u, k.r - 1.0);
}

// Golden-section search for a minimum of f on [lo, hi].
template <class F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, double rel_tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 500 && (hi - lo) > rel_tol * 0.5 * (std::abs(lo) + std::abs(hi)); ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

double det2(const std::array<double, 2>& a, const std::array<double, 2>& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

double norm2(const std::array<double, 2>& a)
{
    return std::hypot(a[0], a[1]);
}

} // namespace

double psi(const SirParams& params, double u)
{
    require_positive(u, "u");
    return psi_with(params, constants(params), u);
}

DstarResult compute_dstar(const SirParams& params, const DstarSearch& search)
{
    const Constants k = constants(params);
    const SirParams p = validate(params);
    DstarResult res;
    if (k.r < 0.0) {
        // alpha r u^(r-1) -> -infinity as u -> 0
        res.value = -kInf;
        res.argmin = std::numeric_limits<double>::quiet_NaN();
        return res;
    }

    const int n = std::max(search.grid_points, 3);
    const double log_lo = std::log(search.u_min);
    const double step = (std::log(search.u_max) - log_lo) / (n - 1);
    std::vector<double> grid(n);
    int best = 0;
    double best_val = kInf;
    for (int j = 0; j < n; ++j) {
        grid[j] = std::exp(log_lo + step * j);
        const double v = psi_with(p, k, grid[j]);
        if (v < best_val) {
            best_val = v;
            best = j;
        }
    }

    res.at_grid_edge = (best == 0 || best == n - 1);
    const int lo = std::max(best - 1, 0);
    const int hi = std::min(best + 1, n - 1);
    auto [u_ref, f_ref] = golden_section([&](double u) { return psi_with(p, k, u); }, grid[lo], grid[hi],
                                         search.rel_tol);
    if (f_ref < best_val) {
        res.value = f_ref;
        res.argmin = u_ref;
    } else {
        res.value = best_val;
        res.argmin = grid[best];
    }

    // For r > 1, psi -> 0 as u -> 0, so the infimum never exceeds 0.
    if (k.r > 1.0 && res.value > 0.0) {
        res.value = 0.0;
        res.argmin = 0.0;
        res.at_grid_edge = true;
    }
    return res;
}

std::optional<double> compute_cstar(const SirParams& params, double dstar)
{
    if (!(dstar > 0.0)) {
        return std::nullopt;
    }
    const SirParams p = validate(params);
    const double r = -p.sigma2 / p.sigma1;
    return dstar / (p.beta * r);
}

std::optional<double> compute_cstar(const SirParams& params)
{
    return compute_cstar(params, compute_dstar(params).value);
}

SupportSpec make_support_spec(const SirParams& params)
{
    const SirParams p = validate(params);
    SupportSpec spec;
    spec.r = -p.sigma2 / p.sigma1;
    spec.dstar = compute_dstar(p).value;
    spec.cstar = compute_cstar(p, spec.dstar);
    spec.kind = spec.cstar ? SupportKind::BarrierRegion : SupportKind::FullQuadrant;
    return spec;
}

bool support_contains(const SupportSpec& spec, double s, double i, double slack)
{
    if (spec.kind == SupportKind::FullQuadrant || !spec.cstar) {
        return true;
    }
    const double z = std::pow(s, spec.r) * i;
    return z >= *spec.cstar * (1.0 - slack) * (1.0 - kBarrierRoundoff);
}

double control_g(const SirParams& params, double u, double z)
{
    require_positive(u, "u");
    require_positive(z, "z");
    const Constants k = constants(params);
    return params.alpha - k.c1 * u - params.beta * z * std::pow(u, 1.0 - k.r);
}

double control_h(const SirParams& params, double u, double z)
{
    require_positive(u, "u");
    require_positive(z, "z");
    const Constants k = constants(params);
    return std::pow(u, -k.r) * z *
           (-(k.c1 * k.r + k.c2) * std::pow(u, k.r) + params.beta * std::pow(u, 1.0 + k.r) +
            params.alpha * k.r * std::pow(u, k.r - 1.0) - params.beta * k.r * z);
}

BracketFields lie_bracket_fields(const SirParams& params, double x, double y)
{
    require_positive(x, "x");
    require_positive(y, "y");
    const Constants k = constants(params);
    const double a = params.alpha;
    const double bxy = params.beta * x * y;
    const double r = k.r;
    BracketFields f;
    f.c = {x, -r * y};
    f.d = {a - r * bxy, -bxy};
    f.e = {-a + r * r * bxy, -bxy};
    f.f = {a - r * r * r * bxy, -bxy};
    return f;
}

LieBracketReport lie_bracket_rank(const SirParams& params, double x, double y)
{
    const BracketFields f = lie_bracket_fields(params, x, y);
    LieBracketReport rep;
    rep.det_cd = det2(f.c, f.d);
    rep.det_de = det2(f.d, f.e);
    rep.det_df = det2(f.d, f.f);

    const std::array<const std::array<double, 2>*, 4> vs{&f.c, &f.d, &f.e, &f.f};
    rep.rank = 0;
    for (const auto* v : vs) {
        if (norm2(*v) > 0.0) {
            rep.rank = 1;
        }
    }
    for (std::size_t i = 0; i < vs.size() && rep.rank < 2; ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const double scale = norm2(*vs[i]) * norm2(*vs[j]);
            if (scale > 0.0 && std::abs(det2(*vs[i], *vs[j])) > 1e-12 * scale) {
                rep.rank = 2;
                break;
            }
        }
    }
    return rep;
}

double lyapunov_p_max(const SirParams& params)
{
    const double s1sq = params.sigma1 * params.sigma1;
    const double s2sq = params.sigma2 * params.sigma2;
    const double m = params.mu + params.rho + params.gamma;
    const double b1 = s1sq > 0.0 ? 2.0 * params.mu / s1sq : kInf;
    const double b2 = s2sq > 0.0 ? 2.0 * m / s2sq : kInf;
    return std::min(b1, b2);
}

namespace {

void check_p(const SirParams& params, double p_star)
{
    const double p_max = lyapunov_p_max(params);
    if (!(p_star > 0.0 && p_star < p_max)) {
        throw Error(ErrorCode::DomainError, "p* must lie in (0, " + std::to_string(p_max) + ")");
    }
}

} // namespace

double lyapunov_U(const SirParams& params, double p_star, double u, double v)
{
    check_p(params, p_star);
    require_positive(u, "u");
    require_positive(v, "v");
    return std::pow(u + v, 1.0 + p_star) + std::pow(u, -0.5 * p_star);
}

double generator_LU(const SirParams& params, double p_star, double u, double v)
{
    check_p(params, p_star);
    require_positive(u, "u");
    require_positive(v, "v");
    const double p = p_star;
    const double m = params.mu + params.rho + params.gamma;
    const double w = u + v;
    const double noise = params.sigma1 * u + params.sigma2 * v;
    const double drift_s = params.alpha - params.beta * u * v - params.mu * u;

    // (u+v)^(1+p): d(u+v) has drift alpha - mu u - m v and diffusion sigma1 u + sigma2 v.
    const double sum_part = (1.0 + p) * std::pow(w, p) * (params.alpha - params.mu * u - m * v) +
                            0.5 * (1.0 + p) * p * std::pow(w, p - 1.0) * noise * noise;
    // u^(-p/2)
    const double inv_part = -0.5 * p * std::pow(u, -0.5 * p - 1.0) * drift_s +
                            p * (2.0 + p) / 8.0 * params.sigma1 * params.sigma1 * std::pow(u, -0.5 * p);
    return sum_part + inv_part;
}

DriftSup lyapunov_drift_sup(const SirParams& params, double p_star, double k1, double lo, double hi, int n)
{
    require_positive(lo, "lo");
    if (!(hi > lo) || n < 2) {
        throw Error(ErrorCode::DomainError, "empty drift grid");
    }
    DriftSup out{-kInf, 0.0, 0.0};
    const double llo = std::log(lo);
    const double step = (std::log(hi) - llo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double u = std::exp(llo + step * i);
        for (int j = 0; j < n; ++j) {
            const double v = std::exp(llo + step * j);
            const double val = generator_LU(params, p_star, u, v) + k1 * lyapunov_U(params, p_star, u, v);
            if (val > out.k2) {
                out = {val, u, v};
            }
        }
    }
    return out;
}

} // namespace sirsde
