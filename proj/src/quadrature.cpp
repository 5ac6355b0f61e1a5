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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace twrnoma {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208748990140, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg{0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod21(const Integrand& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    const double fc = f(center);
    double res_gauss = 0.0;
    double res_kronrod = fc * kWgk[10];
    double res_abs = std::abs(res_kronrod);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};

    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[static_cast<std::size_t>(jtw)];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[static_cast<std::size_t>(jtw)] = f1;
        fv2[static_cast<std::size_t>(jtw)] = f2;
        res_gauss += kWg[static_cast<std::size_t>(j)] * (f1 + f2);
        res_kronrod += kWgk[static_cast<std::size_t>(jtw)] * (f1 + f2);
        res_abs += kWgk[static_cast<std::size_t>(jtw)] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[static_cast<std::size_t>(jtwm1)];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[static_cast<std::size_t>(jtwm1)] = f1;
        fv2[static_cast<std::size_t>(jtwm1)] = f2;
        res_kronrod += kWgk[static_cast<std::size_t>(jtwm1)] * (f1 + f2);
        res_abs += kWgk[static_cast<std::size_t>(jtwm1)] * (std::abs(f1) + std::abs(f2));
    }

    const double mean = res_kronrod * 0.5;
    double res_asc = kWgk[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j)
        res_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    const double value = res_kronrod * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    double err = std::abs((res_kronrod - res_gauss) * half);
    if (res_asc != 0.0 && err != 0.0)
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    if (res_abs > kUflow / (50.0 * kEps))
        err = std::max(kEps * 50.0 * res_abs, err);
    return {a, b, value, err};
}

double map_to_unit(const Integrand& f, TailMap map, double scale, double t)
{
    const double one_minus = 1.0 - t;
    double u;
    double jac;
    if (map == TailMap::rational) {
        u = scale * t / one_minus;
        jac = scale / (one_minus * one_minus);
    } else {
        u = -scale * std::log1p(-t);
        jac = scale / one_minus;
    }
    if (!std::isfinite(u) || !std::isfinite(jac))
        return 0.0;
    const double fu = f(u);
    if (fu == 0.0)
        return 0.0;
    return fu * jac;
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    spec.validate();
    QuadratureResult result;
    if (a == b)
        return {0.0, 0.0, 0, true};

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod21(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);

    auto tolerance = [&spec](double v) { return std::max(spec.abs_tol, spec.rel_tol * std::abs(v)); };

    int splits = 0;
    while (!(total_err <= tolerance(total)) && splits < spec.max_subdivisions) {
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod21(f, worst.a, mid);
        const Segment right = gauss_kronrod21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-sum to shed the drift of the running totals.
    total = 0.0;
    total_err = 0.0;
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : segments) {
        total += s.value;
        total_err += s.error;
    }

    result.value = total;
    result.abs_error = total_err;
    result.subdivisions = splits;
    result.converged = std::isfinite(total) && total_err <= tolerance(total);
    return result;
}

double integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    const auto r = integrate_adaptive(f, a, b, spec);
    if (!r.converged) {
        std::ostringstream os;
        os << "quadrature did not converge on [" << a << ", " << b << "] after " << r.subdivisions
           << " subdivisions: estimate " << r.value << " +/- " << r.abs_error;
        throw QuadratureError(os.str(), r);
    }
    return r.value;
}

QuadratureResult integrate_semi_infinite_adaptive(const Integrand& f, const QuadratureSpec& spec, double scale)
{
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("integrate_semi_infinite: scale must be positive and finite");
    const TailMap map = spec.tail_map;
    return integrate_adaptive([&f, map, scale](double t) { return map_to_unit(f, map, scale, t); }, 0.0, 1.0, spec);
}

double integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec, double scale)
{
    const auto r = integrate_semi_infinite_adaptive(f, spec, scale);
    if (!r.converged) {
        std::ostringstream os;
        os << "quadrature did not converge on (0, inf) after " << r.subdivisions << " subdivisions: estimate "
           << r.value << " +/- " << r.abs_error;
        throw QuadratureError(os.str(), r);
    }
    return r.value;
}

}  // namespace twrnoma
