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

#ifndef LEXIBALANCE_PCA_HPP
#define LEXIBALANCE_PCA_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lexibalance/matrix.hpp"

namespace lexibalance::pca {

/// A fitted principal-component model.
///
/// components holds the top-k eigenvectors of the covariance matrix as
/// rows, orthonormal and ordered by descending eigenvalue. Every
/// eigenvector is flipped so its largest-magnitude entry is positive
/// (lowest index wins ties), which makes fitting deterministic.
struct PcaModel {
    std::vector<double> mean;                       // length d
    Matrix components;                              // k x d
    std::vector<double> eigenvalues;                // k, descending, clamped >= 0
    std::vector<double> explained_variance_ratio;   // k, eigenvalue / total variance
    double cumulative_explained_variance = 0.0;

    std::size_t dimension() const { return mean.size(); }
    std::size_t component_count() const { return components.rows(); }

    bool operator==(const PcaModel& other) const = default;
};

/// Subtracts the per-column mean. Returns the centered matrix and the mean.
std::pair<Matrix, std::vector<double>> center(const Matrix& data);

/// Sample covariance of centered data with the n-1 divisor. Requires n >= 2.
Matrix covariance(const Matrix& centered);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column i is the eigenvector for values[i]
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi
/// rotations. Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 times the input norm (at most 100 sweeps). Eigenpairs come back
/// sorted by descending eigenvalue under the deterministic sign
/// convention described on PcaModel.
EigenDecomposition eig_symmetric(const Matrix& m);

/// Fits a k-component model: center, covariance, eigendecomposition,
/// top-k selection, variance accounting. Negative round-off eigenvalues
/// are clamped to zero; constant data yields all-zero ratios.
PcaModel fit(const Matrix& data, std::size_t k);

/// Projects rows of data onto the model: (row - mean) * components^T.
Matrix project(const Matrix& data, const PcaModel& model);

/// Cumulative explained variance per component count, 1-based.
std::vector<std::pair<std::size_t, double>> explained_variance_curve(const PcaModel& model);

}  // namespace lexibalance::pca

#endif
