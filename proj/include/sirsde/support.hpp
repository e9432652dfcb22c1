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

#ifndef SIRSDE_SUPPORT_HPP
#define SIRSDE_SUPPORT_HPP

#include "sirsde/params.hpp"

#include <array>
#include <functional>
#include <optional>

namespace sirsde {

// Geometry of the invariant measure: the noise-free coordinate z = S^r I
// (r = -sigma2/sigma1) evolves by an ODE, and the infimum d* of its
// per-z growth term decides whether a barrier {S^r I >= c*} exists.

/// psi(u) = -(c1 r + c2) u^r + beta u^(1+r) + alpha r u^(r-1), u > 0.
double psi(const SirParams& params, double u);

struct DstarResult {
    double value = 0.0;   ///< d*; -infinity when r < 0
    double argmin = 0.0;  ///< minimizer found (0 when the infimum is a u -> 0 limit, NaN for r < 0)
    bool at_grid_edge = false;
};

/// Tunables for the global search behind d*.
struct DstarSearch {
    double u_min = 1e-8;
    double u_max = 1e8;
    int grid_points = 10000;
    double rel_tol = 1e-10;
};

/// d* = inf_{u>0} psi(u). Throws Error{SigmaTwoZero} when sigma2 == 0.
DstarResult compute_dstar(const SirParams& params, const DstarSearch& search = {});

/// c* = d*/(beta r) when d* > 0, else empty.
std::optional<double> compute_cstar(const SirParams& params, double dstar);
std::optional<double> compute_cstar(const SirParams& params);

enum class SupportKind { FullQuadrant, BarrierRegion };

struct SupportSpec {
    double r = 0.0;
    double dstar = 0.0;
    std::optional<double> cstar;
    SupportKind kind = SupportKind::FullQuadrant;
};

SupportSpec make_support_spec(const SirParams& params);

/// d* is a numeric minimum; membership allows this much relative rounding.
inline constexpr double kBarrierRoundoff = 1e-12;

/// FullQuadrant: always true. BarrierRegion: s^r i >= c* (1 - slack).
bool support_contains(const SupportSpec& spec, double s, double i, double slack = 0.0);

/// Drift of u in the (u, z) control system (without the control term).
double control_g(const SirParams& params, double u, double z);
/// dz/dt in the (u, z) control system; equals u^-r z (psi(u) - beta r z).
double control_h(const SirParams& params, double u, double z);

struct LieBracketReport {
    int rank = 0;
    double det_cd = 0.0;
    double det_de = 0.0;
    double det_df = 0.0;
};

/// Bracket fields of the Stratonovich drift A and the normalized noise field C.
struct BracketFields {
    std::array<double, 2> c{};
    std::array<double, 2> d{};
    std::array<double, 2> e{};
    std::array<double, 2> f{};
};

BracketFields lie_bracket_fields(const SirParams& params, double x, double y);

/// Rank of span{C, D, E, F} at (x, y). Throws SigmaTwoZero / DomainError.
LieBracketReport lie_bracket_rank(const SirParams& params, double x, double y);

/// Upper end of the admissible exponent range (0, p_max) for the Lyapunov function.
double lyapunov_p_max(const SirParams& params);

/// U(u, v) = (u + v)^(1+p) + u^(-p/2)
double lyapunov_U(const SirParams& params, double p_star, double u, double v);

/// Generator of the (S, I) diffusion applied to U.
double generator_LU(const SirParams& params, double p_star, double u, double v);

struct DriftSup {
    double k2 = 0.0; ///< sup of LU + k1 U over the grid
    double u_at = 0.0;
    double v_at = 0.0;
};

/// Grid supremum of LU + k1 U over [lo, hi]^2 with n log-spaced points per axis.
DriftSup lyapunov_drift_sup(const SirParams& params, double p_star, double k1, double lo, double hi, int n);

} // namespace sirsde

#endif // SIRSDE_SUPPORT_HPP
