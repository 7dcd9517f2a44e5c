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

#ifndef LEXIBALANCE_ALIGN_HPP
#define LEXIBALANCE_ALIGN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lexibalance/ingest.hpp"
#include "lexibalance/matrix.hpp"
#include "lexibalance/pca.hpp"

namespace lexibalance::align {

/// Number of lexical categories, and the sentence embedding dimension.
inline constexpr std::size_t kCategoryCount = 17;

/// The fixed category set, in canonical order.
struct LexicalCategorySet {
    std::vector<std::string> names;  // exactly kCategoryCount entries
};

/// The canonical 17 lexical categories. Hardcoded rather than fetched:
/// the set is fixed and reproducibility matters more than configurability.
LexicalCategorySet canonical_categories();

/// The 17-entry category alignment vector: each category name is
/// capitalized, ASCII-encoded, padded, and the 17xW matrix is compressed
/// to one dimension with PCA. The projections, in category order, are
/// the vector's entries.
struct AlignmentVector {
    std::array<double, kCategoryCount> values{};
    pca::PcaModel model;  // the k=1 category model (provenance)

    double cumulative_explained_variance() const {
        return model.cumulative_explained_variance;
    }
};

/// Capitalizes the first letter, as the category encoding requires.
std::string capitalize(const std::string& name);

/// Builds the category alignment vector. Deterministic: two calls with
/// the same category set produce bitwise-equal results.
AlignmentVector build_category_vector(const LexicalCategorySet& categories = canonical_categories());

/// Per-sentence PCA coordinates, always 17 columns.
struct SentenceEmbedding {
    Matrix coords;  // n x 17
    std::string corpus_id;
    double cumulative_explained_variance = 0.0;  // of the k=17 fit
};

/// Embeds a corpus's ASCII matrix into 17 dimensions with a per-corpus
/// PCA fit. Matrices narrower than 17 columns are widened with zero
/// columns so the embedding dimension stays fixed. Requires at least
/// two rows.
SentenceEmbedding embed_sentences(const ingest::AsciiMatrix& matrix,
                                  const std::string& corpus_id);

/// Per-sentence alignment scores: the dot product of each sentence's
/// 17 coordinates with the category vector.
struct AlignmentScores {
    std::vector<double> scores;
    std::string corpus_id;
};

AlignmentScores alignment_scores(const SentenceEmbedding& embedding,
                                 const AlignmentVector& k_vector);

/// Fraction of scores that are exactly zero.
double zero_score_fraction(const AlignmentScores& scores);

}  // namespace lexibalance::align

#endif
