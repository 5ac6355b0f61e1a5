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

#ifndef TWRNOMA_CONFIG_HPP
#define TWRNOMA_CONFIG_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twrnoma {

/// Raised when a SystemConfig violates one of its invariants. The message
/// names the violated invariant.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside the parameter regime it
/// supports (e.g. a no-interference closed form with varpi > 0).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SicMode { imperfect, perfect };

/// Residual-interference switch: 1 for imperfect SIC, 0 for perfect SIC.
constexpr double sic_epsilon(SicMode mode) { return mode == SicMode::imperfect ? 1.0 : 0.0; }

std::string_view to_string(SicMode mode);
SicMode parse_sic_mode(std::string_view text);

double db_to_linear(double db);
double linear_to_db(double linear);

// Every statistical model parameter. Node-indexed quantities use the
// 1-based node numbering D1..D4 through the accessors below; D1/D3 are the
// nearby users, D2/D4 the distant ones.
struct SystemConfig {
    double rho = 100.0;  // transmit SNR, linear

    std::array<double, 4> a{0.8, 0.2, 0.8, 0.2};  // uplink power allocation
    std::array<double, 4> b{0.2, 0.8, 0.2, 0.8};  // downlink power allocation

    double varpi1 = 0.01;  // IS level at the relay
    double varpi2 = 0.01;  // IS level at the user nodes
    double omega_i = 0.01; // residual-IS channel variance

    std::array<double, 4> omega{0.25, 0.01, 0.25, 0.01};  // channel variances

    // Geometry that produced omega. When all three are positive, validate()
    // requires omega1 = omega3 = d1^-alpha and omega2 = omega4 = d2^-alpha.
    double alpha = 2.0;
    double d1 = 2.0;
    double d2 = 10.0;

    std::array<double, 4> rate{0.1, 0.01, 0.1, 0.01};  // target rates, BPCU

    SicMode sic = SicMode::imperfect;

    double T = 1.0;    // normalized transmission time
    double pu = 10.0;  // node transmit power, W
    double pr = 10.0;  // relay transmit power, W

    double a_of(int node) const { return a.at(static_cast<std::size_t>(node - 1)); }
    double b_of(int node) const { return b.at(static_cast<std::size_t>(node - 1)); }
    double omega_of(int node) const { return omega.at(static_cast<std::size_t>(node - 1)); }
    double rate_of(int node) const { return rate.at(static_cast<std::size_t>(node - 1)); }
    double epsilon() const { return sic_epsilon(sic); }

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    SystemConfig with_snr_db(double snr_db) const;
    SystemConfig with_sic(SicMode mode) const;
    SystemConfig with_varpi(double v1, double v2) const;

    /// Recomputes omega from (alpha, d1, d2): nodes 1/3 sit at d1, 2/4 at d2.
    SystemConfig with_geometry(double path_loss_exponent, double near_m, double far_m) const;
    /// Sets the variances directly and clears the geometry.
    SystemConfig with_omegas(const std::array<double, 4>& variances) const;

    /// Parameters of the reference numerical setup: a=(0.8,0.2), b=(0.2,0.8)
    /// in both groups, R=(0.1,0.01), alpha=2, d1=2 m, d2=10 m,
    /// varpi1=varpi2=0.01, Omega_I=-20 dB, Pu=Pr=10 W, T=1, 20 dB SNR.
    static SystemConfig reference();
};

/// Which signal pair is under analysis. l is the strong (nearby-user)
/// signal, t the weak (distant-user) signal of the same group, and k/r are
/// the nearby/distant users of the opposite group that receive them.
struct SignalIndex {
    int l;
    int k;
    int t;
    int r;

    /// l in {1,3}, t in {2,4}; k and r follow. Anything else throws.
    static SignalIndex make(int l, int t);
    /// Group 1 -> (l,k,t,r) = (1,3,2,4); group 2 -> (3,1,4,2).
    static SignalIndex group(int g);

    friend bool operator==(const SignalIndex&, const SignalIndex&) = default;
};

enum class Signal { x1 = 1, x2 = 2, x3 = 3, x4 = 4 };
enum class SignalKind { strong, weak };

constexpr int node_of(Signal s) { return static_cast<int>(s); }
constexpr SignalKind kind_of(Signal s) { return node_of(s) % 2 == 1 ? SignalKind::strong : SignalKind::weak; }
/// The index whose strong (x1/x3) or weak (x2/x4) member is `s`.
SignalIndex index_of(Signal s);

std::string_view to_string(Signal s);
Signal parse_signal(std::string_view text);

}  // namespace twrnoma

#endif  // TWRNOMA_CONFIG_HPP
