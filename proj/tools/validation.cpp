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

#include "twrnoma/cli/validation.hpp"

#include "twrnoma/analysis.hpp"
#include "twrnoma/cli/config_io.hpp"
#include "twrnoma/cli/sweep.hpp"
#include "twrnoma/ergodic.hpp"
#include "twrnoma/metrics.hpp"
#include "twrnoma/model.hpp"
#include "twrnoma/montecarlo.hpp"
#include "twrnoma/quadrature.hpp"
#include "twrnoma/rng.hpp"
#include "twrnoma/specfun.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace twrnoma::cli {

namespace {

using specfun::expint_ei;
using specfun::HypoExponential;

constexpr std::array kSignals{Signal::x1, Signal::x2, Signal::x3, Signal::x4};
constexpr std::array kModes{SicMode::imperfect, SicMode::perfect};

std::string fmt(double v) { return format_double(v); }

std::string fmt_short(double v)
{
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

std::string where(double snr_db, Signal s, SicMode m)
{
    return std::string(to_string(s)) + "/" + std::string(to_string(m)) + " @ " + fmt(snr_db) + " dB";
}

// Keeps track of the worst ratio |deviation| / band seen so far.
struct Worst {
    double ratio = -1.0;
    double deviation = 0.0;
    std::string at;

    void offer(double dev, double band, std::string label)
    {
        const double r = std::isfinite(dev) ? std::abs(dev) / band : std::numeric_limits<double>::infinity();
        if (r > ratio) {
            ratio = r;
            deviation = dev;
            at = std::move(label);
        }
    }
    bool ok() const { return ratio >= 0.0 && ratio <= 1.0; }
};

double rel_dev(double got, double want) { return (got - want) / std::abs(want); }

class Checker {
public:
    Checker(const SystemConfig& base, const ValidateOptions& o)
        : is_(base), nois_(base.with_varpi(0.0, 0.0)), opt_(o),
          scale_(o.profile == Profile::strict ? 0.5 : 1.0)
    {}

    CheckResult run(int id) const
    {
        using Fn = CheckResult (Checker::*)() const;
        static constexpr std::array<Fn, kCheckCount> table{
            &Checker::outage_vs_mc, &Checker::floors, &Checker::psic_limit, &Checker::ergodic_closed,
            &Checker::high_snr_rates, &Checker::hypoexp, &Checker::expint, &Checker::oma,
            &Checker::ceilings, &Checker::ee_ordering, &Checker::determinism};
        if (id < 1 || id > kCheckCount)
            throw std::out_of_range("no check " + std::to_string(id));

        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = (this->*table[static_cast<std::size_t>(id - 1)])();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("aborted: ") + e.what();
        }
        r.id = id;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.title.empty())
            r.title = title(id);
        return r;
    }

    static std::string title(int id)
    {
        static const std::array<const char*, kCheckCount> names{
            "outage analytic vs Monte Carlo",
            "error floors and zero diversity",
            "perfect-SIC limit of the imperfect-SIC forms",
            "ergodic rate closed forms",
            "high-SNR rate approximations",
            "hypoexponential density",
            "exponential integral",
            "NOMA vs OMA outage ordering",
            "throughput ceilings",
            "energy efficiency ordering",
            "worker-count determinism"};
        return names.at(static_cast<std::size_t>(id - 1));
    }

private:
    SystemConfig is_;
    SystemConfig nois_;
    ValidateOptions opt_;
    double scale_;

    McOptions mc(std::uint64_t point) const { return {point, opt_.workers}; }

    static std::vector<double> grid(double lo, double hi, double step)
    {
        std::vector<double> g;
        for (double x = lo; x <= hi + 1e-9; x += step)
            g.push_back(x);
        return g;
    }

    static CheckResult result(const std::string& tol, const Worst& w, bool extra_ok = true, std::string extra = {})
    {
        CheckResult r;
        r.tolerance = tol;
        r.observed = w.deviation;
        r.passed = w.ok() && extra_ok;
        r.detail = "worst " + fmt_short(w.deviation) + " at " + w.at + " (" + fmt_short(w.ratio) + " of band)";
        if (!extra.empty())
            r.detail += "; " + extra;
        return r;
    }

    // -- 1 ------------------------------------------------------------------
    CheckResult outage_vs_mc() const
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double floor_band = 0.005 * scale_;
        const double sigmas = 3.0 * scale_;
        Worst w;
        std::uint64_t point = 1000;
        for (double db : grid(0.0, 40.0, 5.0)) {
            for (auto m : kModes) {
                const auto cfg = is_.with_snr_db(db).with_sic(m);
                for (auto s : kSignals) {
                    const double p = outage(cfg, s).p_exact;
                    const auto est = mc_outage(cfg, index_of(s), kind_of(s), opt_.iterations, opt_.seed, mc(point++));
                    const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(opt_.iterations));
                    w.offer(est.mean - p, std::max(sigmas * sd, floor_band), where(db, s, m));
                }
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double limit = 120.0 * scale_;
        return result("max(" + fmt(sigmas) + " sigma, " + fmt(floor_band) + ") abs; runtime < " + fmt(limit) + " s",
                      w, secs < limit, "runtime " + fmt_short(secs) + " s");
    }

    // -- 2 ------------------------------------------------------------------
    CheckResult floors() const
    {
        const double rel_band = 0.05 * scale_;
        const double d_band = 0.1 * scale_;
        Worst rel;
        Worst div;
        for (auto m : kModes) {
            for (auto s : {Signal::x1, Signal::x2}) {
                const auto hi = is_.with_snr_db(60.0).with_sic(m);
                const auto r60 = outage(hi, s);
                rel.offer(rel_dev(r60.p_asymptotic, r60.p_exact), rel_band, where(60.0, s, m));

                const auto r50 = outage(is_.with_snr_db(50.0).with_sic(m), s);
                const std::array<CurvePoint, 2> curve{{{db_to_linear(50.0), r50.p_exact}, {hi.rho, r60.p_exact}}};
                div.offer(diversity_order_estimate(curve), d_band, where(55.0, s, m));
            }
        }
        auto r = result(fmt(rel_band) + " rel (exact vs asymptotic @ 60 dB); |d| <= " + fmt(d_band), rel, div.ok(),
                        "worst |d| " + fmt_short(std::abs(div.deviation)) + " at " + div.at);
        return r;
    }

    // -- 3 ------------------------------------------------------------------
    CheckResult psic_limit() const
    {
        const double band = 1e-6 * scale_;
        Worst w;
        // High-SNR rate expansions need rho Omega_I >> 1, which Omega_I -> 0
        // contradicts; their gap is reported, not gated.
        double highsnr_gap = 0.0;
        std::string highsnr_at;
        const auto note = [&](double dev, const std::string& label) {
            if (std::abs(dev) > highsnr_gap) {
                highsnr_gap = std::abs(dev);
                highsnr_at = label;
            }
        };
        for (const auto& base : {is_, nois_}) {
            auto ip = base.with_sic(SicMode::imperfect);
            ip.omega_i = 1e-12;
            const auto p = base.with_sic(SicMode::perfect);
            const std::string tag = base.varpi1 > 0.0 ? "IS " : "no-IS ";
            for (double db : grid(0.0, 40.0, 5.0)) {
                const auto a = ip.with_snr_db(db);
                const auto b = p.with_snr_db(db);
                for (auto s : kSignals) {
                    const auto ra = outage(a, s);
                    const auto rb = outage(b, s);
                    const auto label = tag + where(db, s, SicMode::imperfect);
                    w.offer(rel_dev(ra.p_exact, rb.p_exact), band, "outage " + label);
                    w.offer(rel_dev(ra.p_asymptotic, rb.p_asymptotic), band, "asymptotic outage " + label);
                    if (base.varpi1 == 0.0) {
                        const auto idx = index_of(s);
                        if (kind_of(s) == SignalKind::strong) {
                            w.offer(rel_dev(ergodic_rate_strong_closed(a, idx), ergodic_rate_strong_closed(b, idx)),
                                    band, "rate " + label);
                            note(rel_dev(ergodic_rate_strong_asymptotic(a, idx),
                                         ergodic_rate_strong_asymptotic(b, idx)),
                                 label);
                        } else {
                            w.offer(rel_dev(ergodic_rate_weak_numeric(a, idx), ergodic_rate_weak_numeric(b, idx)),
                                    band, "rate " + label);
                            note(rel_dev(ergodic_rate_weak_highsnr(a, idx), ergodic_rate_weak_highsnr(b, idx)),
                                 label);
                        }
                    }
                }
            }
        }
        return result(fmt(band) + " rel", w, true,
                      "high-SNR rate expansions (not gated) differ by up to " + fmt_short(highsnr_gap) + " at " +
                          highsnr_at);
    }

    // One-dimensional form of the strong-signal rate with no IS, integrated
    // directly from the channel statistics.
    static double strong_rate_oracle(const SystemConfig& c, Signal s)
    {
        const auto idx = index_of(s);
        const double al = c.a_of(idx.l);
        const double bl = c.b_of(idx.l);
        const double at = c.a_of(idx.t);
        const double wl = c.omega_of(idx.l);
        const double wk = c.omega_of(idx.k);
        const double wt = c.omega_of(idx.t);
        const double eps = c.epsilon();
        const double psi = (al * wl + bl * wk) / (c.rho * al * bl * wl * wk);
        const double l1 = eps * c.omega_i / (bl * wk);
        const double l2 = at * wt / (al * wl);
        const auto f = [=](double u) { return std::exp(-u * psi) / ((1.0 + u) * (1.0 + l1 * u) * (1.0 + l2 * u)); };
        QuadratureSpec q;
        q.abs_tol = 1e-14;
        q.rel_tol = 1e-12;
        q.max_subdivisions = 10000;
        return integrate_semi_infinite(f, q, 1.0 / psi) / (2.0 * std::log(2.0));
    }

    // -- 4 ------------------------------------------------------------------
    CheckResult ergodic_closed() const
    {
        const double oracle_band = 1e-8 * scale_;
        const double mc_band = 0.02 * scale_;
        Worst oracle;
        Worst vs_mc;
        for (auto m : kModes) {
            for (double db : grid(0.0, 60.0, 5.0)) {
                const auto c = nois_.with_snr_db(db).with_sic(m);
                for (auto s : {Signal::x1, Signal::x3}) {
                    const double want = strong_rate_oracle(c, s);
                    oracle.offer(rel_dev(ergodic_rate_strong_closed(c, index_of(s)), want), oracle_band,
                                 where(db, s, m));
                }
            }
        }
        std::uint64_t point = 4000;
        for (auto m : kModes) {
            for (double db : {10.0, 20.0, 30.0}) {
                const auto c = nois_.with_snr_db(db).with_sic(m);
                for (auto s : kSignals) {
                    const auto idx = index_of(s);
                    const bool strong = kind_of(s) == SignalKind::strong;
                    const double a = strong ? ergodic_rate_strong_closed(c, idx) : ergodic_rate_weak_numeric(c, idx);
                    const auto est = mc_ergodic(c, idx, kind_of(s), opt_.iterations, opt_.seed, mc(point++));
                    vs_mc.offer(rel_dev(a, est.mean), mc_band, where(db, s, m));
                }
            }
        }
        return result(fmt(oracle_band) + " rel vs quadrature; " + fmt(mc_band) + " rel vs MC", oracle, vs_mc.ok(),
                      "worst vs MC " + fmt_short(vs_mc.deviation) + " at " + vs_mc.at);
    }

    // -- 5 ------------------------------------------------------------------
    CheckResult high_snr_rates() const
    {
        const double rel_band = 0.05 * scale_;
        const double slope_band = 0.05 * scale_;
        Worst rel;
        Worst slope;
        double psic_gap = 0.0;
        for (auto m : kModes) {
            const auto c40 = nois_.with_snr_db(40.0).with_sic(m);
            const auto c50 = nois_.with_snr_db(50.0).with_sic(m);
            const auto c60 = nois_.with_snr_db(60.0).with_sic(m);
            for (auto s : kSignals) {
                const auto idx = index_of(s);
                std::function<double(const SystemConfig&)> exact;
                std::function<double(const SystemConfig&)> approx;
                if (kind_of(s) == SignalKind::strong) {
                    exact = [&](const SystemConfig& c) { return ergodic_rate_strong_closed(c, idx); };
                    approx = [&](const SystemConfig& c) { return ergodic_rate_strong_asymptotic(c, idx); };
                    rel.offer(rel_dev(approx(c50), exact(c50)), rel_band, where(50.0, s, m));
                } else {
                    exact = [&](const SystemConfig& c) { return ergodic_rate_weak_numeric(c, idx); };
                    approx = [&](const SystemConfig& c) { return ergodic_rate_weak_highsnr(c, idx); };
                    if (m == SicMode::imperfect) {
                        rel.offer(rel_dev(approx(c40), exact(c40)), rel_band, where(40.0, s, m));
                    } else {
                        const double gap = rel_dev(approx(c40), exact(c40));
                        if (std::abs(gap) > std::abs(psic_gap))
                            psic_gap = gap;
                    }
                }
                for (const auto& fn : {exact, approx}) {
                    const std::array<CurvePoint, 2> curve{{{c50.rho, fn(c50)}, {c60.rho, fn(c60)}}};
                    slope.offer(high_snr_slope_estimate(curve), slope_band, where(55.0, s, m));
                }
            }
        }
        return result(fmt(rel_band) + " rel; |slope| <= " + fmt(slope_band), rel, slope.ok(),
                      "worst slope " + fmt_short(slope.deviation) + " at " + slope.at +
                          "; pSIC x_t high-SNR form vs quadrature at 40 dB (not gated) " + fmt_short(psic_gap));
    }

    // -- 6 ------------------------------------------------------------------
    CheckResult hypoexp() const
    {
        const double norm_band = 1e-9 * scale_;
        Worst norm;
        std::mt19937_64 gen(opt_.seed);
        std::uniform_real_distribution<double> log_rate(std::log(1e-2), std::log(1e2));
        QuadratureSpec q;
        q.abs_tol = 1e-15;
        q.rel_tol = 1e-13;
        q.max_subdivisions = 10000;
        for (int i = 0; i < 50; ++i) {
            const HypoExponential z{std::exp(log_rate(gen)), std::exp(log_rate(gen)), std::exp(log_rate(gen))};
            const double total =
                integrate_semi_infinite([&](double x) { return z.pdf(x); }, q, z.mean());
            norm.offer(total - 1.0, norm_band, "triple " + std::to_string(i));
        }

        // Z = rho a_t |h_t|^2 + rho varpi1 (a_k |h_k|^2 + a_r |h_r|^2) for group 1.
        const auto cfg = is_;
        const auto idx = SignalIndex::group(1);
        const auto im = outage_intermediates(cfg, idx);
        if (!im.z)
            throw std::logic_error("reference configuration has no relay IS");
        const HypoExponential& z = *im.z;

        const std::uint64_t n = opt_.iterations;
        // Histogram support ends where 0.1% of the mass remains, so every bin
        // keeps enough counts for the normal approximation.
        const auto cdf = [&](double x) { return integrate([&](double u) { return z.pdf(u); }, 0.0, x, q); };
        double lo = z.mean();
        double hi = 50.0 * z.mean();
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (cdf(mid) < 0.999 ? lo : hi) = mid;
        }
        const double upper = hi;
        constexpr int kBins = 100;
        const double width = upper / kBins;
        std::vector<std::uint64_t> counts(kBins, 0);
        const auto key = substream_key(opt_.seed, 6000);
        for (std::uint64_t i = 0; i < n; ++i) {
            CounterStream st(key, i);
            const auto d = sample_channel_draw(cfg, st);
            const double v = cfg.rho * (cfg.a_of(idx.t) * d.gain(idx.t) +
                                        cfg.varpi1 * (cfg.a_of(idx.k) * d.gain(idx.k) + cfg.a_of(idx.r) * d.gain(idx.r)));
            const auto b = static_cast<std::size_t>(v / width);
            if (b < counts.size())
                ++counts[b];
        }
        Worst bins;
        const double sigmas = 3.0 * scale_;
        for (int b = 0; b < kBins; ++b) {
            const double p = integrate([&](double x) { return z.pdf(x); }, b * width, (b + 1) * width, q);
            const double expect = static_cast<double>(n) * p;
            const double sd = std::sqrt(expect * (1.0 - p));
            bins.offer(static_cast<double>(counts[static_cast<std::size_t>(b)]) - expect, sigmas * sd,
                       "bin " + std::to_string(b));
        }
        return result(fmt(norm_band) + " abs normalisation; " + fmt(sigmas) + " sigma per bin", norm, bins.ok(),
                      "worst bin deviation " + fmt_short(bins.deviation) + " counts at " + bins.at + " (" +
                          fmt_short(bins.ratio) + " of band" + (z.perturbed() ? ", coincident rates split" : "") +
                          ")");
    }

    // -- 7 ------------------------------------------------------------------
    static double ei_series(double x)
    {
        using boost::multiprecision::cpp_bin_float_100;
        const cpp_bin_float_100 X(x);
        cpp_bin_float_100 term = 1;
        cpp_bin_float_100 sum = 0;
        const cpp_bin_float_100 eps("1e-60");
        for (int k = 1; k < 1000; ++k) {
            term *= X / k;
            const cpp_bin_float_100 add = term / k;
            sum += add;
            if (k > std::abs(x) && abs(add) < eps * abs(sum))
                break;
        }
        const cpp_bin_float_100 v =
            boost::math::constants::euler<cpp_bin_float_100>() + log(abs(X)) + sum;
        return static_cast<double>(v);
    }

    CheckResult expint() const
    {
        const double band = 1e-10 * scale_;
        Worst w;
        const double lo = std::log(1e-6);
        const double hi = std::log(50.0);
        for (int i = 0; i < 50; ++i) {
            const double x = std::exp(lo + (hi - lo) * i / 49.0);
            for (double v : {x, -x})
                w.offer(rel_dev(expint_ei(v), ei_series(v)), band, "x = " + fmt_short(v));
        }
        return result(fmt(band) + " rel", w);
    }

    // -- 8 ------------------------------------------------------------------
    CheckResult oma() const
    {
        // Margin = OMA - NOMA; positive means NOMA is better.
        std::string low_detail;
        std::string high_detail;
        bool low_ok = true;
        bool high_ok = true;
        double worst_low = std::numeric_limits<double>::infinity();
        double worst_high = std::numeric_limits<double>::infinity();
        std::uint64_t point = 8000;
        for (double db : {10.0, 35.0, 40.0}) {
            const bool low = db < 20.0;
            for (auto s : {Signal::x1, Signal::x2}) {
                const auto oma = mc_oma_baseline(is_.with_snr_db(db), s, opt_.iterations, opt_.seed, mc(point++));
                for (auto m : kModes) {
                    const auto c = is_.with_snr_db(db).with_sic(m);
                    const auto noma = mc_outage(c, index_of(s), kind_of(s), opt_.iterations, opt_.seed, mc(point++));
                    const double margin = oma.outage.mean - noma.mean;
                    const double signed_margin = low ? margin : -margin;
                    const auto label = where(db, s, m) + " NOMA " + fmt_short(noma.mean) + " OMA " +
                                       fmt_short(oma.outage.mean);
                    if (low && signed_margin < worst_low) {
                        worst_low = signed_margin;
                        low_detail = label;
                    }
                    if (!low && signed_margin < worst_high) {
                        worst_high = signed_margin;
                        high_detail = label;
                    }
                    (low ? low_ok : high_ok) = (low ? low_ok : high_ok) && signed_margin > 0.0;
                }
            }
        }
        CheckResult r;
        r.tolerance = "NOMA < OMA at 10 dB; OMA < NOMA at 35 and 40 dB";
        r.observed = std::min(worst_low, worst_high);
        r.passed = low_ok && high_ok;
        r.detail = std::string("10 dB ordering ") + (low_ok ? "holds" : "violated") + " (tightest " + low_detail +
                   "); high-SNR reversal " + (high_ok ? "holds" : "violated") + " (tightest " + high_detail + ")";
        return r;
    }

    // -- 9 ------------------------------------------------------------------
    static double dl_throughput(const SystemConfig& c)
    {
        std::array<double, 4> p{};
        for (std::size_t i = 0; i < 4; ++i)
            p[i] = outage(c, kSignals[i]).p_exact;
        return throughput_delay_limited(p, c.rate).value;
    }

    static double dt_throughput(const SystemConfig& c)
    {
        std::array<double, 4> r{};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto s = kSignals[i];
            r[i] = kind_of(s) == SignalKind::strong ? ergodic_rate_strong_closed(c, index_of(s))
                                                    : ergodic_rate_weak_numeric(c, index_of(s));
        }
        return throughput_delay_tolerant(r).value;
    }

    CheckResult ceilings() const
    {
        const double band = 0.02 * scale_;
        Worst w;
        for (auto m : kModes) {
            const auto a = is_.with_sic(m);
            w.offer(rel_dev(dl_throughput(a.with_snr_db(60.0)), dl_throughput(a.with_snr_db(50.0))), band,
                    "delay-limited " + std::string(to_string(m)));
            const auto b = nois_.with_sic(m);
            w.offer(rel_dev(dt_throughput(b.with_snr_db(60.0)), dt_throughput(b.with_snr_db(50.0))), band,
                    "delay-tolerant " + std::string(to_string(m)));
        }
        return result(fmt(band) + " rel change 50 -> 60 dB", w);
    }

    // -- 10 -----------------------------------------------------------------
    CheckResult ee_ordering() const
    {
        const double band = 0.05 * scale_;
        Worst dl;
        bool dt_ok = true;
        double dt_worst = std::numeric_limits<double>::infinity();
        std::string dt_at;
        for (double db : grid(0.0, 50.0, 5.0)) {
            const auto ip = is_.with_snr_db(db).with_sic(SicMode::imperfect);
            const auto p = is_.with_snr_db(db).with_sic(SicMode::perfect);
            const double e_ip = energy_efficiency({TransmissionMode::delay_limited, dl_throughput(ip), {}}, ip);
            const double e_p = energy_efficiency({TransmissionMode::delay_limited, dl_throughput(p), {}}, p);
            dl.offer(rel_dev(e_ip, e_p), band, "delay-limited @ " + fmt(db) + " dB");

            if (db >= 30.0) {
                const auto nip = nois_.with_snr_db(db).with_sic(SicMode::imperfect);
                const auto np = nois_.with_snr_db(db).with_sic(SicMode::perfect);
                const double t_ip = energy_efficiency({TransmissionMode::delay_tolerant, dt_throughput(nip), {}}, nip);
                const double t_p = energy_efficiency({TransmissionMode::delay_tolerant, dt_throughput(np), {}}, np);
                if (t_p - t_ip < dt_worst) {
                    dt_worst = t_p - t_ip;
                    dt_at = fmt(db) + " dB";
                }
                dt_ok = dt_ok && t_p >= t_ip;
            }
        }
        return result(fmt(band) + " rel (delay-limited); pSIC >= ipSIC from 30 dB (delay-tolerant)", dl, dt_ok,
                      "delay-tolerant pSIC - ipSIC min " + fmt_short(dt_worst) + " at " + dt_at);
    }

    // -- 11 -----------------------------------------------------------------
    CheckResult determinism() const
    {
        std::vector<std::pair<SweepSpec, SystemConfig>> cases;
        SweepSpec a;
        a.metric = Metric::outage;
        a.snr_start_db = 0.0;
        a.snr_stop_db = 40.0;
        a.snr_step_db = 10.0;
        a.signals = {Signal::x1, Signal::x2, Signal::x3, Signal::x4};
        a.modes = {SicMode::imperfect, SicMode::perfect};
        a.include_asymptotic = true;
        a.include_oma = true;
        a.mc_iterations = 50000;
        a.master_seed = opt_.seed;
        cases.emplace_back(a, is_);
        SweepSpec b = a;
        b.metric = Metric::throughput_dt;
        b.include_oma = false;
        b.mc_iterations = 20000;
        cases.emplace_back(b, is_);

        bool same = true;
        std::string detail;
        for (const auto& [spec, cfg] : cases) {
            std::string ref;
            for (unsigned w : {1U, 4U, 8U}) {
                auto s = spec;
                s.workers = w;
                const auto table = run_sweep(s, cfg);
                const auto csv = to_csv(table);
                if (w == 1U) {
                    ref = csv;
                } else if (csv != ref) {
                    same = false;
                    detail += std::string(to_string(spec.metric)) + " differs at " + std::to_string(w) + " workers; ";
                }
            }
        }
        CheckResult r;
        r.tolerance = "byte-identical CSV for 1, 4 and 8 workers";
        r.observed = same ? 0.0 : 1.0;
        r.passed = same;
        r.detail = same ? "outage and throughput_dt sweeps identical" : detail;
        return r;
    }
};

}  // namespace

Profile parse_profile(std::string_view text)
{
    if (text == "default" || text == "standard")
        return Profile::standard;
    if (text == "strict")
        return Profile::strict;
    throw ConfigError("unknown tolerance profile '" + std::string(text) + "' (expected default or strict)");
}

std::string_view to_string(Profile p) { return p == Profile::strict ? "strict" : "default"; }

bool ValidationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string format_check(const CheckResult& c)
{
    std::ostringstream os;
    os << (c.passed ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << "  " << c.title
       << "  | tolerance: " << c.tolerance << " | " << c.detail << " | " << fmt_short(c.seconds) << " s";
    return os.str();
}

std::string ValidationReport::to_text() const
{
    std::string out;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        out += format_check(c) + "\n";
        failed += c.passed ? 0 : 1;
    }
    out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return out;
}

CheckResult run_check(int id, const SystemConfig& base, const ValidateOptions& options)
{
    base.validate();
    return Checker(base, options).run(id);
}

ValidationReport validate(const SystemConfig& base, const ValidateOptions& options)
{
    base.validate();
    const Checker checker(base, options);
    ValidationReport report;
    for (int id = 1; id <= kCheckCount; ++id)
        report.checks.push_back(checker.run(id));
    return report;
}

}  // namespace twrnoma::cli
