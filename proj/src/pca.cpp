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

#include "lexibalance/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lexibalance::pca {

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;  // relative to the input Frobenius norm
constexpr int kMaxSweeps = 100;

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data()) s += v * v;
    return std::sqrt(s);
}

double off_diagonal_norm(const Matrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

void check_symmetric(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("eig_symmetric: matrix is not square");
    }
    double scale = 0.0;
    for (double v : m.data()) scale = std::max(scale, std::fabs(v));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (std::fabs(m(i, j) - m(j, i)) > 1e-8 * std::max(scale, 1.0)) {
                throw std::invalid_argument("eig_symmetric: matrix is not symmetric");
            }
        }
    }
}

// Flip each eigenvector (column) so its largest-magnitude entry is
// positive; the lowest index wins ties. Removes the sign ambiguity.
void canonicalize_signs(Matrix& vectors) {
    const std::size_t d = vectors.rows();
    for (std::size_t c = 0; c < vectors.cols(); ++c) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t r = 0; r < d; ++r) {
            double a = std::fabs(vectors(r, c));
            if (a > best) {
                best = a;
                arg = r;
            }
        }
        if (vectors(arg, c) < 0.0) {
            for (std::size_t r = 0; r < d; ++r) vectors(r, c) = -vectors(r, c);
        }
    }
}

}  // namespace

std::pair<Matrix, std::vector<double>> center(const Matrix& data) {
    if (data.rows() == 0 || data.cols() == 0) {
        throw std::invalid_argument("center: empty matrix");
    }
    const std::size_t n = data.rows();
    const std::size_t d = data.cols();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) mean[j] += data(i, j);
    for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);
    Matrix centered(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) centered(i, j) = data(i, j) - mean[j];
    return {std::move(centered), std::move(mean)};
}

Matrix covariance(const Matrix& centered) {
    const std::size_t n = centered.rows();
    const std::size_t d = centered.cols();
    if (n < 2) {
        throw std::invalid_argument("covariance: insufficient samples (n < 2)");
    }
    Matrix cov(d, d);
    const double inv = 1.0 / static_cast<double>(n - 1);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += centered(i, a) * centered(i, b);
            cov(a, b) = s * inv;
            cov(b, a) = cov(a, b);
        }
    }
    return cov;
}

EigenDecomposition eig_symmetric(const Matrix& m) {
    check_symmetric(m);
    const std::size_t d = m.rows();
    Matrix a = m;
    Matrix v = Matrix::identity(d);
    const double norm = frobenius_norm(m);
    const double threshold = kOffDiagonalTolerance * norm;

    if (norm > 0.0) {
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (off_diagonal_norm(a) <= threshold) break;
            for (std::size_t p = 0; p + 1 < d; ++p) {
                for (std::size_t q = p + 1; q < d; ++q) {
                    const double apq = a(p, q);
                    if (apq == 0.0) continue;
                    // Classic two-sided Jacobi rotation annihilating a(p,q).
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);

                    const double app = a(p, p);
                    const double aqq = a(q, q);
                    a(p, p) = app - t * apq;
                    a(q, q) = aqq + t * apq;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (std::size_t i = 0; i < d; ++i) {
                        if (i == p || i == q) continue;
                        const double aip = a(i, p);
                        const double aiq = a(i, q);
                        a(i, p) = aip - s * (aiq + tau * aip);
                        a(i, q) = aiq + s * (aip - tau * aiq);
                        a(p, i) = a(i, p);
                        a(q, i) = a(i, q);
                    }
                    for (std::size_t i = 0; i < d; ++i) {
                        const double vip = v(i, p);
                        const double viq = v(i, q);
                        v(i, p) = vip - s * (viq + tau * vip);
                        v(i, q) = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }

    // Stable sort by descending eigenvalue keeps tied pairs in sweep order.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    EigenDecomposition out;
    out.values.resize(d);
    out.vectors = Matrix(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    canonicalize_signs(out.vectors);
    return out;
}

PcaModel fit(const Matrix& data, std::size_t k) {
    if (k < 1 || k > data.cols()) {
        throw std::invalid_argument("fit: component count k out of range");
    }
    auto [centered, mean] = center(data);
    const Matrix cov = covariance(centered);
    const EigenDecomposition eig = eig_symmetric(cov);
    const std::size_t d = data.cols();

    std::vector<double> all_values(eig.values);
    for (double& v : all_values) v = std::max(v, 0.0);
    const double total = std::accumulate(all_values.begin(), all_values.end(), 0.0);

    PcaModel model;
    model.mean = std::move(mean);
    model.components = Matrix(k, d);
    model.eigenvalues.resize(k);
    model.explained_variance_ratio.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        model.eigenvalues[c] = all_values[c];
        model.explained_variance_ratio[c] = total > 0.0 ? all_values[c] / total : 0.0;
        for (std::size_t j = 0; j < d; ++j) model.components(c, j) = eig.vectors(j, c);
    }
    model.cumulative_explained_variance =
        std::accumulate(model.explained_variance_ratio.begin(),
                        model.explained_variance_ratio.end(), 0.0);
    return model;
}

Matrix project(const Matrix& data, const PcaModel& model) {
    if (data.cols() != model.dimension()) {
        throw std::invalid_argument("project: dimension mismatch");
    }
    const std::size_t n = data.rows();
    const std::size_t d = data.cols();
    const std::size_t k = model.component_count();
    Matrix out(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                s += (data(i, j) - model.mean[j]) * model.components(c, j);
            }
            out(i, c) = s;
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, double>> explained_variance_curve(const PcaModel& model) {
    std::vector<std::pair<std::size_t, double>> curve;
    curve.reserve(model.explained_variance_ratio.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < model.explained_variance_ratio.size(); ++i) {
        cum += model.explained_variance_ratio[i];
        curve.emplace_back(i + 1, cum);
    }
    return curve;
}

}  // namespace lexibalance::pca
