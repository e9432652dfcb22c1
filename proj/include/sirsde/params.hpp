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

#ifndef SIRSDE_PARAMS_HPP
#define SIRSDE_PARAMS_HPP

#include <optional>
#include <string_view>

namespace sirsde {

/// Rates of the stochastic SIR model
///
///   dS = (alpha - beta S I - mu S) dt + sigma1 S dB
///   dI = (beta S I - (mu + rho + gamma) I) dt + sigma2 I dB
///
/// All rates are per unit time; the noise intensities are per square-root time.
struct SirParams {
    double alpha = 0.0;  ///< birth rate
    double beta = 0.0;   ///< contact rate
    double mu = 0.0;     ///< disease-free death rate
    double rho = 0.0;    ///< excess death rate of infectives
    double gamma = 0.0;  ///< recovery rate
    double sigma1 = 0.0; ///< noise intensity on S
    double sigma2 = 0.0; ///< noise intensity on I

    friend bool operator==(const SirParams&, const SirParams&) = default;
};

/// Parameter sets used throughout the documentation and tests.
namespace presets {
inline constexpr SirParams example1{20.0, 4.0, 1.0, 10.0, 1.0, 1.0, -1.0};
inline constexpr SirParams example2{7.0, 3.0, 1.0, 1.0, 2.0, 1.0, 1.0};
inline constexpr SirParams example3{5.0, 5.0, 4.0, 1.0, 1.0, 2.0, -1.0};
/// Example 3 rates with sigma2 = 2, giving a threshold of -1.75.
inline constexpr SirParams example3_strong_noise{5.0, 5.0, 4.0, 1.0, 1.0, 2.0, 2.0};
} // namespace presets

enum class Verdict { Extinction, Permanence, Critical };

std::string_view to_string(Verdict v) noexcept;

/// |lambda| below this is reported as Critical.
inline constexpr double kCriticalTolerance = 1e-12;

struct DerivedQuantities {
    double c1 = 0.0;       ///< mu + sigma1^2/2
    double c2 = 0.0;       ///< mu + rho + gamma + sigma2^2/2
    double r = 0.0;        ///< -sigma2/sigma1
    double a = 0.0;        ///< shape of the boundary stationary law, 2 c1 / sigma1^2
    double b = 0.0;        ///< scale of the boundary stationary law, 2 alpha / sigma1^2
    double lambda = 0.0;   ///< extinction/permanence threshold
    double lambda_d = 0.0; ///< threshold of the noiseless model
    double r0 = 0.0;       ///< basic reproduction number
    double dstar = 0.0;    ///< may be -infinity
    std::optional<double> cstar;
    Verdict verdict = Verdict::Critical;
};

/// Checks the standing assumptions and normalizes sigma1 > 0 by flipping the
/// sign of both noise intensities when sigma1 < 0 (the law is unchanged).
/// Throws Error{NonPositiveRate | NegativeRate | ZeroSigma1}.
SirParams validate(const SirParams& params);

/// Rate checks only (alpha, beta, mu > 0; rho, gamma >= 0). Zero noise is allowed,
/// which the simulators need for noiseless reductions.
void check_rates(const SirParams& params);

double threshold_lambda(const SirParams& params) noexcept;
double threshold_lambda_deterministic(const SirParams& params) noexcept;
double reproduction_number(const SirParams& params) noexcept;

Verdict classify_lambda(double lambda) noexcept;

/// Evaluation of the earlier sufficient conditions for a stationary
/// distribution (mu > sigma1^2, mu+rho+gamma > sigma2^2, R0 > 1, delta bound).
struct LjxReport {
    bool mu_cond = false;
    bool rho_cond = false;
    bool r0_cond = false;
    /// Empty when delta is undefined (mu == sigma1^2 or mu+rho+gamma == sigma2^2).
    std::optional<bool> delta_cond;
    bool all = false;
    double delta = 0.0; ///< NaN when undefined
    double s_star = 0.0;
    double i_star = 0.0;
};

LjxReport ljx_sufficient_conditions(const SirParams& params);

/// Every closed-form quantity, including d* and c* (computed numerically by
/// the support module). Requires sigma2 != 0.
DerivedQuantities derive(const SirParams& params);

} // namespace sirsde

#endif // SIRSDE_PARAMS_HPP
