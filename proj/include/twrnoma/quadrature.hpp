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

#ifndef TWRNOMA_QUADRATURE_HPP
#define TWRNOMA_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace twrnoma {

/// How (0, inf) is folded onto (0, 1) before subdivision.
enum class TailMap {
    rational,    // u = s t / (1 - t)
    exponential  // u = -s ln(1 - t)
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    TailMap tail_map = TailMap::rational;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial)
    {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod on [a, b]; never throws on
/// non-convergence, the flag in the result reports it.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Like integrate_adaptive but throws QuadratureError (carrying the partial
/// estimate) when the tolerance is not met within max_subdivisions.
double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// int_0^inf f(u) du through the spec's tail map; `scale` should be of the
/// order of the integrand's decay length.
double integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec = {}, double scale = 1.0);
QuadratureResult integrate_semi_infinite_adaptive(const Integrand& f, const QuadratureSpec& spec = {},
                                                  double scale = 1.0);

}  // namespace twrnoma

#endif  // TWRNOMA_QUADRATURE_HPP
