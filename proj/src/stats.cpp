/*
 * Copyright 2026 The lexibalance authors
 *
 * This file is part of lexibalance
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

#include "lexibalance/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lexibalance::stats {

namespace {

// Polynomial coefficients from Royston's AS R94 (Applied Statistics 44).
// poly(c, x) = c[0] + c[1] x + c[2] x^2 + ...
constexpr double kC1[] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr double kC2[] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double kC3[] = {0.544, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[] = {-2.273, 0.459};

template <std::size_t N>
double poly(const double (&c)[N], double x) {
    double r = 0.0;
    for (std::size_t i = N; i-- > 0;) r = r * x + c[i];
    return r;
}

double sample_mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

}  // namespace

std::vector<double> blom_scores(std::size_t n) {
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = normal_quantile((static_cast<double>(i) + 1.0 - 0.375) /
                               (static_cast<double>(n) + 0.25));
    }
    return m;
}

SwCoefficients sw_coefficients(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("sw_coefficients: sample too small (n < 3)");
    }
    // Ascending convention first (largest order statistic gets the
    // positive extreme), flipped at the end.
    std::vector<double> w;
    if (n == 3) {
        const double s = std::sqrt(0.5);
        w = {-s, 0.0, s};
    } else {
        const std::vector<double> m = blom_scores(n);
        double ssq = 0.0;
        for (double v : m) ssq += v * v;
        const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
        const double wn = m[n - 1] / std::sqrt(ssq) + poly(kC1, rsn);
        double phi;
        w.resize(n);
        if (n > 5) {
            const double wn1 = m[n - 2] / std::sqrt(ssq) + poly(kC2, rsn);
            phi = (ssq - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                  (1.0 - 2.0 * wn * wn - 2.0 * wn1 * wn1);
            const double f = std::sqrt(phi);
            for (std::size_t i = 2; i + 2 < n; ++i) w[i] = m[i] / f;
            w[n - 1] = wn;
            w[n - 2] = wn1;
            w[0] = -wn;
            w[1] = -wn1;
        } else {
            phi = (ssq - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * wn * wn);
            const double f = std::sqrt(phi);
            for (std::size_t i = 1; i + 1 < n; ++i) w[i] = m[i] / f;
            w[n - 1] = wn;
            w[0] = -wn;
        }
    }
    std::reverse(w.begin(), w.end());
    return SwCoefficients{n, std::move(w)};
}

SwResult shapiro_wilk(std::vector<double> sample) {
    const std::size_t n = sample.size();
    if (n < 3) {
        throw std::invalid_argument("shapiro_wilk: sample too small (n < 3)");
    }
    std::sort(sample.begin(), sample.end());
    if (sample.back() - sample.front() <= 0.0) {
        throw std::invalid_argument("shapiro_wilk: zero variance sample");
    }

    const SwCoefficients coeff = sw_coefficients(n);
    const double mean = sample_mean(sample);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += coeff.weights[i] * sample[i];
        const double dev = sample[i] - mean;
        den += dev * dev;
    }
    const double w = (num * num) / den;
    const double w1 = std::max(1.0 - w, 1e-99);

    double p;
    if (n == 3) {
        // Exact for n = 3.
        constexpr double kPi6 = 6.0 / M_PI;
        constexpr double kStqr = M_PI / 3.0;
        p = kPi6 * (std::asin(std::sqrt(std::min(w, 1.0))) - kStqr);
        p = std::clamp(p, 0.0, 1.0);
    } else {
        // Royston's normalizing transformation of W.
        double y = std::log(w1);
        double mu, sigma;
        if (n <= 11) {
            const double an = static_cast<double>(n);
            const double gamma = poly(kG, an);
            if (y >= gamma) {
                return {w, 1e-99};  // W numerically at its upper bound
            }
            y = -std::log(gamma - y);
            mu = poly(kC3, an);
            sigma = std::exp(poly(kC4, an));
        } else {
            const double logn = std::log(static_cast<double>(n));
            mu = poly(kC5, logn);
            sigma = std::exp(poly(kC6, logn));
        }
        p = normal_sf((y - mu) / sigma);
    }
    return {w, p};
}

AdResult anderson_darling(std::vector<double> sample) {
    const std::size_t n = sample.size();
    if (n < 2) {
        throw std::invalid_argument("anderson_darling: sample too small (n < 2)");
    }
    std::sort(sample.begin(), sample.end());
    const double mean = sample_mean(sample);
    double ss = 0.0;
    for (double v : sample) {
        const double dev = v - mean;
        ss += dev * dev;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd <= 0.0) {
        throw std::invalid_argument("anderson_darling: zero variance sample");
    }

    // A^2 = -n - (1/n) sum (2i-1) [ln F(t_(i)) + ln(1 - F(t_(n+1-i)))],
    // with the upper-tail term computed through the survival function to
    // keep precision, and both clamped away from log(0).
    constexpr double kFloor = 1e-300;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double zi = (sample[i] - mean) / sd;
        const double zr = (sample[n - 1 - i] - mean) / sd;
        const double cdf = std::max(normal_cdf(zi), kFloor);
        const double sf = std::max(normal_sf(zr), kFloor);
        acc += (2.0 * static_cast<double>(i) + 1.0) * (std::log(cdf) + std::log(sf));
    }
    const double nd = static_cast<double>(n);
    AdResult out;
    out.statistic = -nd - acc / nd;
    out.critical_values = ad_critical(n);
    return out;
}

std::array<double, 5> ad_critical(std::size_t n) {
    // Stephens' small-sample adjustment of the case-3 (estimated mean
    // and variance) normal critical values.
    constexpr std::array<double, 5> kBase = {0.576, 0.656, 0.787, 0.918, 1.092};
    const double nd = static_cast<double>(n);
    const double divisor = 1.0 + 4.0 / nd - 25.0 / (nd * nd);
    std::array<double, 5> out{};
    for (std::size_t i = 0; i < kBase.size(); ++i) out[i] = kBase[i] / divisor;
    return out;
}

Decision decide(double sw_p, double ad_stat, double ad_crit_5, double alpha) {
    return {sw_p >= alpha, ad_stat <= ad_crit_5};
}

Histogram histogram(const std::vector<double>& values, std::size_t bins) {
    if (values.empty()) {
        throw std::invalid_argument("histogram: empty input");
    }
    if (bins < 1) {
        throw std::invalid_argument("histogram: bins must be >= 1");
    }
    double lo = values[0];
    double hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    Histogram h;
    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
    h.edges[bins] = hi;  // exact top edge regardless of rounding
    for (double v : values) {
        auto idx = static_cast<std::size_t>(
            std::clamp((v - lo) / (hi - lo) * static_cast<double>(bins), 0.0,
                       static_cast<double>(bins - 1)));
        // The computed index can land one bin high at an edge; counts are
        // assigned by [edge, next-edge) with the final bin closed.
        while (idx > 0 && v < h.edges[idx]) --idx;
        while (idx + 1 < bins && v >= h.edges[idx + 1]) ++idx;
        ++h.counts[idx];
    }
    return h;
}

NormalityReport test_normality(const std::vector<double>& sample, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("test_normality: alpha must lie in (0, 1)");
    }
    NormalityReport r;
    r.n = sample.size();
    r.alpha = alpha;
    const SwResult sw = shapiro_wilk(sample);
    const AdResult ad = anderson_darling(sample);
    r.sw_stat = std::min(sw.statistic, 1.0);
    r.sw_p = sw.p_value;
    r.sw_beyond_validated_range = sample.size() > 5000;
    r.ad_stat = ad.statistic;
    r.ad_crit_5 = ad.crit_5();
    const Decision d = decide(r.sw_p, r.ad_stat, r.ad_crit_5, alpha);
    r.sw_normal = d.sw_normal;
    r.ad_normal = d.ad_normal;
    return r;
}

}  // namespace lexibalance::stats
