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

#ifndef LEXIBALANCE_NORMAL_HPP
#define LEXIBALANCE_NORMAL_HPP

namespace lexibalance::stats {

/// Standard normal CDF via the complementary error function,
/// |error| <= 1e-12 over the double range.
double normal_cdf(double z);

/// Standard normal survival function, accurate in the upper tail where
/// 1 - normal_cdf(z) would cancel.
double normal_sf(double z);

/// Standard normal density.
double normal_pdf(double z);

/// Inverse standard normal CDF. Rational approximation refined with one
/// Halley step; |error| <= 1e-9 (in practice near machine precision).
/// Requires 0 < p < 1.
double normal_quantile(double p);

}  // namespace lexibalance::stats

#endif
