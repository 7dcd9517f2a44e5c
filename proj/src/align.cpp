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

#include "lexibalance/align.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lexibalance::align {

LexicalCategorySet canonical_categories() {
    return LexicalCategorySet{{"abbreviation", "adjective", "adposition", "adverb",
                               "affix", "conjunction", "contraction", "determiner",
                               "interjection", "noun", "other", "phrase",
                               "predeterminer", "preposition", "pronoun", "symbol",
                               "verb"}};
}

std::string capitalize(const std::string& name) {
    std::string out = name;
    if (!out.empty()) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

AlignmentVector build_category_vector(const LexicalCategorySet& categories) {
    if (categories.names.size() != kCategoryCount) {
        throw std::invalid_argument("build_category_vector: expected exactly 17 categories");
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(kCategoryCount);
    for (const auto& name : categories.names) {
        rows.push_back(ingest::encode_ascii(capitalize(name)));
    }
    const ingest::AsciiMatrix padded = ingest::pad_matrix(rows);
    const Matrix data = padded.to_matrix();

    AlignmentVector out;
    out.model = pca::fit(data, 1);
    const Matrix projected = pca::project(data, out.model);
    for (std::size_t i = 0; i < kCategoryCount; ++i) out.values[i] = projected(i, 0);
    return out;
}

SentenceEmbedding embed_sentences(const ingest::AsciiMatrix& matrix,
                                  const std::string& corpus_id) {
    if (matrix.rows < 2) {
        throw std::invalid_argument("embed_sentences: corpus too small (needs >= 2 sentences)");
    }
    // Widen with zero columns when sentences are shorter than the
    // embedding dimension; the extra components carry zero variance.
    const std::size_t width = std::max(matrix.cols, kCategoryCount);
    Matrix data(matrix.rows, width);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        for (std::size_t c = 0; c < matrix.cols; ++c) data(r, c) = matrix.at(r, c);
    }

    SentenceEmbedding out;
    const pca::PcaModel model = pca::fit(data, kCategoryCount);
    out.coords = pca::project(data, model);
    out.corpus_id = corpus_id;
    out.cumulative_explained_variance = model.cumulative_explained_variance;
    return out;
}

AlignmentScores alignment_scores(const SentenceEmbedding& embedding,
                                 const AlignmentVector& k_vector) {
    if (embedding.coords.cols() != kCategoryCount) {
        throw std::invalid_argument("alignment_scores: embedding must have 17 columns");
    }
    AlignmentScores out;
    out.corpus_id = embedding.corpus_id;
    out.scores.resize(embedding.coords.rows());
    for (std::size_t i = 0; i < embedding.coords.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < kCategoryCount; ++j) {
            s += embedding.coords(i, j) * k_vector.values[j];
        }
        out.scores[i] = s;
    }
    return out;
}

double zero_score_fraction(const AlignmentScores& scores) {
    if (scores.scores.empty()) return 0.0;
    const auto zeros = std::count(scores.scores.begin(), scores.scores.end(), 0.0);
    return static_cast<double>(zeros) / static_cast<double>(scores.scores.size());
}

}  // namespace lexibalance::align
