// SPDX-License-Identifier: Apache-2.0
//
// twrnoma - performance analysis of two-way relay NOMA systems
// Copyright (C) 2026 The twrnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "twrnoma/quadrature.hpp"
#include "twrnoma/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace twrnoma;
using namespace twrnoma::specfun;

TEST_CASE("exponential integral reference values")
{
    CHECK(expint_ei(-1.0) == doctest::Approx(-0.21938393439552027).epsilon(1e-13));
    CHECK(expint_ei(-0.1) == doctest::Approx(-1.8229239584193906).epsilon(1e-13));
    CHECK(expint_ei(1.0) == doctest::Approx(1.8951178163559368).epsilon(1e-13));
    CHECK(expint_ei(10.0) == doctest::Approx(2492.2289762418777).epsilon(1e-13));
    CHECK(expint_ei(-20.0) == doctest::Approx(-9.8355252906498815e-11).epsilon(1e-12));
    CHECK(expint_e1(1.0) == doctest::Approx(0.21938393439552027).epsilon(1e-13));
}

TEST_CASE("Ei near zero approaches ln x + Euler gamma")
{
    double prev = 1.0;
    for (double x : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double gap = std::abs(expint_ei(-x) - (std::log(x) + kEulerGamma));
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("scaled E1 matches its asymptotic series for large arguments")
{
    for (double y : {200.0, 1e3, 1e6}) {
        const double series = (1.0 - 1.0 / y + 2.0 / (y * y) - 6.0 / (y * y * y)) / y;
        CHECK(exp_scaled_e1(y) == doctest::Approx(series).epsilon(30.0 / (y * y * y * y)));
    }
    CHECK(exp_scaled_e1(1.0) == doctest::Approx(std::exp(1.0) * 0.21938393439552027).epsilon(1e-13));
}

TEST_CASE("exponential integral rejects its singular point")
{
    CHECK_THROWS(expint_ei(0.0));
    CHECK_THROWS(expint_e1(-1.0));
}

TEST_CASE("hypoexponential: two rates")
{
    const HypoExponential h{1.0, 2.0};
    CHECK(h.pdf(0.0) == 0.0);
    for (double z : {0.1, 1.0, 3.0})
        CHECK(h.pdf(z) == doctest::Approx(2.0 * (std::exp(-z) - std::exp(-2.0 * z))).epsilon(1e-14));
    CHECK(h.mean() == doctest::Approx(1.5));
    CHECK(h.laplace(0.7) == doctest::Approx(1.0 / 1.7 * 2.0 / 2.7).epsilon(1e-14));
}

TEST_CASE("hypoexponential: three rates against a convolution oracle")
{
    const double l1 = 0.5;
    const double l2 = 1.5;
    const double l3 = 4.0;
    const HypoExponential h{l1, l2, l3};
    const auto two = [&](double u) { return l1 * l2 / (l2 - l1) * (std::exp(-l1 * u) - std::exp(-l2 * u)); };
    for (double z : {0.05, 0.5, 2.0, 7.0}) {
        const double conv = integrate([&](double u) { return two(u) * l3 * std::exp(-l3 * (z - u)); }, 0.0, z,
                                      {1e-15, 1e-13, 2000, TailMap::rational});
        CHECK(h.pdf(z) == doctest::Approx(conv).epsilon(1e-10));
    }
    CHECK(h.laplace(0.3) ==
          doctest::Approx(l1 / (l1 + 0.3) * l2 / (l2 + 0.3) * l3 / (l3 + 0.3)).epsilon(1e-13));
    CHECK(h.mean() == doctest::Approx(1 / l1 + 1 / l2 + 1 / l3));
    CHECK_FALSE(h.perturbed());
}

TEST_CASE("hypoexponential normalisation over random triples")
{
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> lr(std::log(1e-2), std::log(1e2));
    QuadratureSpec q{1e-15, 1e-13, 10000, TailMap::rational};
    for (int i = 0; i < 50; ++i) {
        const HypoExponential h{std::exp(lr(gen)), std::exp(lr(gen)), std::exp(lr(gen))};
        const double total = integrate_semi_infinite([&](double z) { return h.pdf(z); }, q, h.mean());
        CHECK(std::abs(total - 1.0) <= 1e-9);
    }
}

TEST_CASE("coincident rates are split and flagged")
{
    const double lam = 2.0;
    const HypoExponential h{lam, lam};
    CHECK(h.perturbed());
    CHECK_FALSE(h.diagnostic().empty());
    // Erlang(2) density.
    for (double z : {0.1, 1.0, 4.0})
        CHECK(h.pdf(z) == doctest::Approx(lam * lam * z * std::exp(-lam * z)).epsilon(1e-5));

    const HypoExponential t{lam, lam, lam};
    CHECK(t.perturbed());
    for (double z : {0.1, 1.0, 4.0})
        CHECK(t.pdf(z) == doctest::Approx(lam * lam * lam * z * z / 2.0 * std::exp(-lam * z)).epsilon(1e-4));
}

TEST_CASE("hypoexponential rejects bad input")
{
    CHECK_THROWS(HypoExponential{1.0});
    CHECK_THROWS(HypoExponential{1.0, -2.0});
    const HypoExponential h{1.0, 2.0};
    CHECK_THROWS_AS(h.pdf(-1.0), std::domain_error);
}
