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

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace twrnoma;

TEST_CASE("finite-interval integrals")
{
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-12, 1e-10, 5000, TailMap::rational}) ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite integrals")
{
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }) ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    QuadratureSpec q;
    q.tail_map = TailMap::exponential;
    CHECK(integrate_semi_infinite([](double x) { return x * std::exp(-3.0 * x); }, q, 1.0 / 3.0) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("non-convergence is reported with the partial result")
{
    QuadratureSpec q;
    q.max_subdivisions = 3;
    q.rel_tol = 1e-14;
    q.abs_tol = 1e-16;
    const auto f = [](double x) { return std::sin(1.0 / x); };
    const auto r = integrate_adaptive(f, 1e-6, 1.0, q);
    CHECK_FALSE(r.converged);
    try {
        integrate(f, 1e-6, 1.0, q);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.partial().value));
    }
}

TEST_CASE("invalid tolerances are rejected")
{
    QuadratureSpec q;
    q.abs_tol = -1.0;
    CHECK_THROWS(q.validate());
}
