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

#ifndef LEXIBALANCE_STATS_HPP
#define LEXIBALANCE_STATS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "lexibalance/normal.hpp"

namespace lexibalance::stats {

/// Significance levels of the Anderson-Darling critical values, percent.
inline constexpr std::array<double, 5> kAdSignificanceLevels = {15.0, 10.0, 5.0, 2.5, 1.0};

/// Index of the 5% level in kAdSignificanceLevels / ad_critical output.
inline constexpr std::size_t kAdFivePercent = 2;

/// Shapiro-Wilk order-statistic weights for a sample of size n.
/// Antisymmetric (weights[i] == -weights[n-1-i]) with unit squared sum;
/// the convention here attaches the positive extreme weight to the
/// smallest order statistic, so weights[0] > 0. The statistic squares
/// the weighted sum, so the overall sign is immaterial.
struct SwCoefficients {
    std::size_t n = 0;
    std::vector<double> weights;
};

/// Expected-order-statistic scores m_i = Phi^-1((i - 0.375) / (n + 0.25))
/// in ascending order. The raw kernel behind sw_coefficients, before the
/// corrections to the two extreme weights.
std::vector<double> blom_scores(std::size_t n);

/// Weights per Royston's AS R94 refinement of the Shapiro-Wilk test:
/// normalized Blom scores with polynomial corrections to the extreme
/// weights. Requires n >= 3.
SwCoefficients sw_coefficients(std::size_t n);

struct SwResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

/// Shapiro-Wilk normality test with Royston's AS R94 p-value
/// transformation. Sorts internally. Requires n >= 3 and a non-constant
/// sample. The approximation was validated by Royston up to n = 5000;
/// larger samples still compute (see NormalityReport's range flag).
SwResult shapiro_wilk(std::vector<double> sample);

struct AdResult {
    double statistic = 0.0;
    std::array<double, 5> critical_values{};  // levels per kAdSignificanceLevels

    double crit_5() const { return critical_values[kAdFivePercent]; }
};

/// Anderson-Darling normality test with mean and standard deviation
/// estimated from the sample (n-1 divisor). Sorts internally. Requires
/// n >= 2 and a non-constant sample.
AdResult anderson_darling(std::vector<double> sample);

/// Size-adjusted critical values: {0.576, 0.656, 0.787, 0.918, 1.092}
/// at {15, 10, 5, 2.5, 1}%, each divided by (1 + 4/n - 25/n^2).
std::array<double, 5> ad_critical(std::size_t n);

struct Decision {
    bool sw_normal = false;
    bool ad_normal = false;
};

/// sw_normal when the p-value is at least alpha; ad_normal when the
/// statistic does not exceed the 5% critical value.
Decision decide(double sw_p, double ad_stat, double ad_crit_5, double alpha = 0.05);

struct Histogram {
    std::vector<double> edges;        // bins + 1, strictly increasing
    std::vector<std::size_t> counts;  // bins, summing to the sample size
};

/// Equal-width histogram spanning [min, max] with the top edge
/// inclusive. A constant sample widens to [v - 0.5, v + 0.5].
Histogram histogram(const std::vector<double>& values, std::size_t bins);

/// One corpus's normality verdict, bundling both tests.
struct NormalityReport {
    std::size_t n = 0;
    double sw_stat = 0.0;
    double sw_p = 0.0;
    bool sw_normal = false;
    bool sw_beyond_validated_range = false;  // n > 5000
    double ad_stat = 0.0;
    double ad_crit_5 = 0.0;
    bool ad_normal = false;
    double alpha = 0.05;
};

/// Runs both tests on a sample and applies the decision rule.
NormalityReport test_normality(const std::vector<double>& sample, double alpha = 0.05);

}  // namespace lexibalance::stats

#endif
