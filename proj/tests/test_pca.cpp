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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lexibalance/pca.hpp"
#include "support/oracles.hpp"
#include "support/testrand.hpp"

using lexibalance::Matrix;
namespace pca = lexibalance::pca;

namespace {

Matrix make(std::size_t r, std::size_t c, std::initializer_list<double> vals) {
    Matrix m(r, c);
    std::size_t i = 0;
    for (double v : vals) m.data()[i++] = v;
    return m;
}

Matrix random_matrix(testrand::Rng& rng, std::size_t n, std::size_t d) {
    Matrix m(n, d);
    for (std::size_t i = 0; i < n * d; ++i) m.data()[i] = 20.0 * rng.u01() - 10.0;
    return m;
}

}  // namespace

TEST_SUITE("pca") {

TEST_CASE("center subtracts per-column means") {
    const auto [centered, mean] = pca::center(make(2, 2, {1, 2, 3, 4}));
    CHECK(mean == std::vector<double>{2.0, 3.0});
    CHECK(centered == make(2, 2, {-1, -1, 1, 1}));
}

TEST_CASE("center of constant columns is all zeros") {
    const auto [centered, mean] = pca::center(make(2, 2, {5, 5, 5, 5}));
    CHECK(mean == std::vector<double>{5.0, 5.0});
    CHECK(centered == make(2, 2, {0, 0, 0, 0}));
}

TEST_CASE("center accepts a single row") {
    const auto [centered, mean] = pca::center(make(1, 2, {7, 8}));
    CHECK(mean == std::vector<double>{7.0, 8.0});
    CHECK(centered == make(1, 2, {0, 0}));
}

TEST_CASE("center rejects an empty matrix") {
    CHECK_THROWS_AS(pca::center(Matrix(0, 0)), std::invalid_argument);
}

TEST_CASE("covariance of the two-point example") {
    CHECK(pca::covariance(make(2, 2, {-1, -1, 1, 1})) == make(2, 2, {2, 2, 2, 2}));
}

TEST_CASE("covariance of zero data is zero") {
    CHECK(pca::covariance(make(3, 2, {0, 0, 0, 0, 0, 0})) == make(2, 2, {0, 0, 0, 0}));
}

TEST_CASE("covariance demands at least two samples") {
    CHECK_THROWS_WITH_AS(pca::covariance(make(1, 2, {1, 2})),
                         "covariance: insufficient samples (n < 2)", std::invalid_argument);
}

TEST_CASE("covariance is symmetric on random data") {
    testrand::Rng rng(42);
    const Matrix cov = pca::covariance(pca::center(random_matrix(rng, 9, 6)).first);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(cov(i, j) == doctest::Approx(cov(j, i)).epsilon(1e-12));
}

TEST_CASE("eig_symmetric solves the analytic 2x2 case") {
    const auto eig = pca::eig_symmetric(make(2, 2, {2, 2, 2, 2}));
    REQUIRE(eig.values.size() == 2);
    CHECK(eig.values[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::fabs(eig.vectors(0, 0)) == doctest::Approx(inv_sqrt2));
    CHECK(std::fabs(eig.vectors(1, 0)) == doctest::Approx(inv_sqrt2));
    CHECK(eig.vectors(0, 0) * eig.vectors(1, 0) > 0.0);  // same sign entries
}

TEST_CASE("eig_symmetric on the identity returns all ones") {
    const auto eig = pca::eig_symmetric(Matrix::identity(3));
    for (double v : eig.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_symmetric sorts a diagonal matrix descending with axis vectors") {
    const auto eig = pca::eig_symmetric(make(3, 3, {3, 0, 0, 0, 1, 0, 0, 0, 2}));
    CHECK(eig.values == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(eig.vectors(0, 0) == doctest::Approx(1.0));
    CHECK(eig.vectors(2, 1) == doctest::Approx(1.0));
    CHECK(eig.vectors(1, 2) == doctest::Approx(1.0));
}

TEST_CASE("eig_symmetric rejects non-symmetric and non-square input") {
    CHECK_THROWS_AS(pca::eig_symmetric(make(2, 2, {1, 5, -5, 1})), std::invalid_argument);
    CHECK_THROWS_AS(pca::eig_symmetric(make(2, 3, {1, 2, 3, 4, 5, 6})), std::invalid_argument);
}

TEST_CASE("eig_symmetric satisfies the eigen equation on random covariances") {
    testrand::Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 5 + rep;
        const std::size_t d = 3 + rep % 4;
        const Matrix cov = pca::covariance(pca::center(random_matrix(rng, n, d)).first);
        const auto eig = pca::eig_symmetric(cov);

        double norm = 0.0;
        for (double v : cov.data()) norm += v * v;
        norm = std::sqrt(norm);

        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t r = 0; r < d; ++r) {
                double mv = 0.0;
                for (std::size_t j = 0; j < d; ++j) mv += cov(r, j) * eig.vectors(j, c);
                CHECK(std::fabs(mv - eig.values[c] * eig.vectors(r, c)) <= 1e-7 * norm);
            }
        }
        // Orthonormal columns.
        for (std::size_t c1 = 0; c1 < d; ++c1) {
            for (std::size_t c2 = c1; c2 < d; ++c2) {
                double dot = 0.0;
                for (std::size_t r = 0; r < d; ++r) dot += eig.vectors(r, c1) * eig.vectors(r, c2);
                CHECK(std::fabs(dot - (c1 == c2 ? 1.0 : 0.0)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("eig_symmetric matches a characteristic-polynomial oracle up to 8x8") {
    testrand::Rng rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t d = 2 + rep % 7;  // 2..8
        Matrix sym(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) {
                const double v = 4.0 * rng.u01() - 2.0;
                sym(i, j) = v;
                sym(j, i) = v;
            }
        }
        auto values = pca::eig_symmetric(sym).values;   // descending
        auto oracle = oracles::eig_by_charpoly(sym);    // ascending
        REQUIRE(values.size() == oracle.size());
        std::reverse(oracle.begin(), oracle.end());
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(std::fabs(values[i] - oracle[i]) <= 1e-6);
        }
    }
}

TEST_CASE("fit on rank-1 data concentrates all variance in one component") {
    const Matrix data = make(2, 2, {1, 2, 3, 4});
    const pca::PcaModel k1 = pca::fit(data, 1);
    REQUIRE(k1.eigenvalues.size() == 1);
    CHECK(k1.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(k1.explained_variance_ratio[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k1.cumulative_explained_variance == doctest::Approx(1.0).epsilon(1e-12));

    const pca::PcaModel k2 = pca::fit(data, 2);
    CHECK(k2.explained_variance_ratio[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k2.explained_variance_ratio[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("fit rejects bad component counts and tiny samples") {
    const Matrix data = make(2, 2, {1, 2, 3, 4});
    CHECK_THROWS_AS(pca::fit(data, 0), std::invalid_argument);
    CHECK_THROWS_AS(pca::fit(data, 3), std::invalid_argument);
    CHECK_THROWS_AS(pca::fit(make(1, 2, {1, 2}), 1), std::invalid_argument);
}

TEST_CASE("fit succeeds on constant data with all-zero ratios") {
    const pca::PcaModel m = pca::fit(make(3, 2, {4, 4, 4, 4, 4, 4}), 2);
    CHECK(m.eigenvalues == std::vector<double>{0.0, 0.0});
    CHECK(m.explained_variance_ratio == std::vector<double>{0.0, 0.0});
    CHECK(m.cumulative_explained_variance == 0.0);
}

TEST_CASE("project matches the analytic two-point case") {
    const Matrix data = make(2, 2, {1, 2, 3, 4});
    const pca::PcaModel model = pca::fit(data, 1);
    const Matrix proj = pca::project(data, model);
    const double sqrt2 = std::sqrt(2.0);
    // Sign convention fixes the component, so the first point maps to -sqrt(2).
    CHECK(proj(0, 0) == doctest::Approx(-sqrt2).epsilon(1e-12));
    CHECK(proj(1, 0) == doctest::Approx(sqrt2).epsilon(1e-12));
}

TEST_CASE("projecting the mean row gives zero coordinates") {
    testrand::Rng rng(3);
    const Matrix data = random_matrix(rng, 6, 4);
    const pca::PcaModel model = pca::fit(data, 3);
    Matrix mean_row(1, 4);
    for (std::size_t j = 0; j < 4; ++j) mean_row(0, j) = model.mean[j];
    const Matrix proj = pca::project(mean_row, model);
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::fabs(proj(0, c)) <= 1e-12);
}

TEST_CASE("project rejects dimension mismatches") {
    const pca::PcaModel model = pca::fit(make(2, 2, {1, 2, 3, 4}), 1);
    CHECK_THROWS_AS(pca::project(make(1, 3, {1, 2, 3}), model), std::invalid_argument);
}

TEST_CASE("explained_variance_curve accumulates ratios") {
    pca::PcaModel model;
    model.explained_variance_ratio = {1.0, 0.0};
    auto curve = pca::explained_variance_curve(model);
    REQUIRE(curve.size() == 2);
    CHECK(curve[0] == std::pair<std::size_t, double>{1, 1.0});
    CHECK(curve[1] == std::pair<std::size_t, double>{2, 1.0});

    model.explained_variance_ratio = {0.5, 0.5};
    curve = pca::explained_variance_curve(model);
    CHECK(curve[0].second == doctest::Approx(0.5));
    CHECK(curve[1].second == doctest::Approx(1.0));

    model.explained_variance_ratio = {1.0};
    curve = pca::explained_variance_curve(model);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0] == std::pair<std::size_t, double>{1, 1.0});
}

TEST_CASE("full-rank reconstruction reproduces the input") {
    testrand::Rng rng(17);
    for (int rep = 0; rep < 5; ++rep) {
        const std::size_t n = 8 + rep;
        const std::size_t d = 4 + rep;
        const Matrix data = random_matrix(rng, n, d);
        const pca::PcaModel model = pca::fit(data, d);
        const Matrix proj = pca::project(data, model);

        double scale = 0.0;
        for (double v : data.data()) scale = std::max(scale, std::fabs(v));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                double rec = model.mean[j];
                for (std::size_t c = 0; c < d; ++c) rec += proj(i, c) * model.components(c, j);
                CHECK(std::fabs(rec - data(i, j)) <= 1e-8 * std::max(scale, 1.0));
            }
        }
    }
}

TEST_CASE("eigenvalue sum equals the covariance trace") {
    testrand::Rng rng(19);
    const Matrix data = random_matrix(rng, 12, 7);
    const Matrix cov = pca::covariance(pca::center(data).first);
    double trace = 0.0;
    for (std::size_t i = 0; i < 7; ++i) trace += cov(i, i);
    const pca::PcaModel model = pca::fit(data, 7);
    double sum = 0.0;
    for (double v : model.eigenvalues) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-8));
}

TEST_CASE("projected coordinates are uncorrelated") {
    testrand::Rng rng(23);
    const Matrix data = random_matrix(rng, 14, 6);
    const pca::PcaModel model = pca::fit(data, 6);
    const Matrix proj = pca::project(data, model);
    const Matrix pc_cov = pca::covariance(pca::center(proj).first);
    double scale = 0.0;
    for (std::size_t i = 0; i < 6; ++i) scale = std::max(scale, std::fabs(pc_cov(i, i)));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (i != j) CHECK(std::fabs(pc_cov(i, j)) <= 1e-7 * std::max(scale, 1.0));
}

TEST_CASE("fit is bitwise deterministic") {
    testrand::Rng rng(29);
    const Matrix data = random_matrix(rng, 10, 5);
    const pca::PcaModel a = pca::fit(data, 5);
    const pca::PcaModel b = pca::fit(data, 5);
    CHECK(a == b);
}

TEST_CASE("eigenvalues are clamped non-negative and ratios normalized") {
    testrand::Rng rng(31);
    const Matrix data = random_matrix(rng, 9, 5);
    const pca::PcaModel model = pca::fit(data, 5);
    double total_ratio = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(model.eigenvalues[i] >= 0.0);
        if (i > 0) CHECK(model.eigenvalues[i] <= model.eigenvalues[i - 1]);
        total_ratio += model.explained_variance_ratio[i];
    }
    CHECK(total_ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(model.cumulative_explained_variance <= 1.0 + 1e-10);
}

}  // TEST_SUITE
