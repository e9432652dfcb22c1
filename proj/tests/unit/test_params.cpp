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


#include "sirsde/error.hpp"
#include "sirsde/params.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sirsde;

namespace {

ErrorCode code_of(const SirParams& p)
{
    try {
        validate(p);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected validate to throw");
    return ErrorCode::DomainError;
}

} // namespace

TEST_CASE("validate accepts and normalizes")
{
    CHECK(validate(presets::example1) == presets::example1);

    SirParams flipped = presets::example1;
    flipped.sigma1 = -1.0;
    flipped.sigma2 = 1.0;
    CHECK(validate(flipped) == presets::example1);
    CHECK(validate(validate(flipped)) == validate(flipped));
}

TEST_CASE("validate rejects bad rates")
{
    SirParams p = presets::example1;
    p.alpha = 0.0;
    CHECK(code_of(p) == ErrorCode::NonPositiveRate);
    p = presets::example1;
    p.mu = -1.0;
    CHECK(code_of(p) == ErrorCode::NonPositiveRate);
    p = presets::example1;
    p.rho = -0.1;
    CHECK(code_of(p) == ErrorCode::NegativeRate);
    p = presets::example1;
    p.sigma1 = 0.0;
    CHECK(code_of(p) == ErrorCode::ZeroSigma1);
}

TEST_CASE("thresholds on the worked examples")
{
    CHECK(threshold_lambda(presets::example1) == doctest::Approx(67.5).epsilon(1e-14));
    CHECK(threshold_lambda(presets::example2) == doctest::Approx(16.5).epsilon(1e-14));
    CHECK(threshold_lambda(presets::example3) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(threshold_lambda(presets::example3_strong_noise) == doctest::Approx(-1.75).epsilon(1e-14));
    CHECK(threshold_lambda({1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0}) == -1.0);

    CHECK(threshold_lambda_deterministic(presets::example1) == doctest::Approx(68.0));
    CHECK(threshold_lambda_deterministic(presets::example2) == doctest::Approx(17.0));

    CHECK(reproduction_number(presets::example1) == doctest::Approx(80.0 / 12.0));
    CHECK(reproduction_number(presets::example2) == doctest::Approx(5.25));
    // lambda_d = 0: beta alpha / mu = mu + rho + gamma
    CHECK(reproduction_number({3.0, 2.0, 1.0, 2.0, 3.0, 1.0, 1.0}) == doctest::Approx(1.0));
}

TEST_CASE("algebraic identities over random parameter sets")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> pos(0.05, 5.0);
    std::uniform_real_distribution<double> sig(-3.0, 3.0);
    for (int k = 0; k < 500; ++k) {
        SirParams p{pos(gen), pos(gen), pos(gen), pos(gen), pos(gen), sig(gen), sig(gen)};
        if (p.sigma1 == 0.0) {
            continue;
        }
        const double ld = threshold_lambda_deterministic(p);
        CHECK(threshold_lambda(p) == doctest::Approx(ld - 0.5 * p.sigma2 * p.sigma2).epsilon(1e-12));
        CHECK((ld > 0) == (reproduction_number(p) > 1.0));

        if (p.sigma2 == 0.0) {
            continue;
        }
        SirParams q = p;
        q.sigma1 = -p.sigma1;
        q.sigma2 = -p.sigma2;
        const DerivedQuantities a = derive(p);
        const DerivedQuantities b = derive(q);
        CHECK(a.lambda == b.lambda);
        CHECK(a.r == b.r);
        CHECK(a.a == b.a);
        CHECK(a.b == b.b);
        CHECK((std::isinf(a.dstar) ? std::isinf(b.dstar) : a.dstar == b.dstar));
        CHECK(a.cstar.has_value() == b.cstar.has_value());
        CHECK(a.verdict == b.verdict);
        CHECK(a.verdict == classify_lambda(a.lambda));
        CHECK(a.cstar.has_value() == (a.dstar > 0.0));
        CHECK(a.a > 1.0);
    }
}

TEST_CASE("classification tolerance")
{
    CHECK(classify_lambda(-1e-3) == Verdict::Extinction);
    CHECK(classify_lambda(1e-3) == Verdict::Permanence);
    CHECK(classify_lambda(0.0) == Verdict::Critical);
    CHECK(classify_lambda(5e-13) == Verdict::Critical);
}

TEST_CASE("derive on the worked examples")
{
    const DerivedQuantities d1 = derive(presets::example1);
    CHECK(d1.c1 == 1.5);
    CHECK(d1.c2 == 12.5);
    CHECK(d1.r == 1.0);
    CHECK(d1.a == 3.0);
    CHECK(d1.b == 40.0);
    CHECK(d1.lambda == doctest::Approx(67.5));
    CHECK(d1.dstar == doctest::Approx(7.75).epsilon(1e-10));
    REQUIRE(d1.cstar);
    CHECK(*d1.cstar == doctest::Approx(1.9375).epsilon(1e-10));
    CHECK(d1.verdict == Verdict::Permanence);

    const DerivedQuantities d2 = derive(presets::example2);
    CHECK(d2.lambda == doctest::Approx(16.5));
    CHECK(std::isinf(d2.dstar));
    CHECK(d2.dstar < 0);
    CHECK_FALSE(d2.cstar);
    CHECK(d2.verdict == Verdict::Permanence);

    CHECK(derive(presets::example3).verdict == Verdict::Extinction);
}

TEST_CASE("earlier sufficient conditions")
{
    const LjxReport r2 = ljx_sufficient_conditions(presets::example2);
    CHECK_FALSE(r2.all);
    CHECK(r2.r0_cond);
    CHECK_FALSE(r2.mu_cond); // mu == sigma1^2
    CHECK_FALSE(r2.delta_cond.has_value());
    CHECK(std::isnan(r2.delta));
    CHECK(r2.s_star == doctest::Approx(4.0 / 3.0));
    CHECK(r2.i_star == doctest::Approx(7.0 / 4.0 - 1.0 / 3.0));

    // small noise, all four conditions hold
    const SirParams quiet{7.0, 3.0, 1.0, 1.0, 2.0, 0.1, 0.1};
    const LjxReport rq = ljx_sufficient_conditions(quiet);
    REQUIRE(rq.delta_cond.has_value());
    const double m = 4.0;
    const double ss = m / 3.0;
    const double is = 7.0 / m - 1.0 / 3.0;
    const double delta = 0.01 / 0.99 * ss * ss + m * 0.01 / (m - 0.01) * is * is + m / 6.0 * is * 0.01;
    CHECK(rq.delta == doctest::Approx(delta).epsilon(1e-12));
    CHECK(rq.all);
}
