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

#ifndef LEXIBALANCE_INGEST_HPP
#define LEXIBALANCE_INGEST_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lexibalance/matrix.hpp"

namespace lexibalance::ingest {

/// A labeled list of sentences. Immutable once built.
struct Corpus {
    std::string id;
    std::vector<std::string> sentences;
    std::string source;  // file path or "inline"
};

/// Rectangular matrix of ASCII codes. Rows are items (sentences or
/// category names), columns are character positions. Shorter rows are
/// right-padded with 0 (NUL), which is deliberately outside printable
/// text so padding never collides with content.
struct AsciiMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> values;  // row-major, every entry in [0, 127]

    int at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    Matrix to_matrix() const {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < values.size(); ++i) m.data()[i] = values[i];
        return m;
    }
};

/// Splits text into sentences. A sentence boundary is a maximal run of
/// '.', '!', '?' followed by whitespace or end of text; the terminator
/// run stays with the preceding sentence. Newlines count as whitespace.
/// Surrounding whitespace is trimmed, empty fragments are dropped, and
/// a trailing fragment without a terminator is kept as a sentence.
std::vector<std::string> split_sentences(const std::string& text);

/// Encodes text as ASCII codes, one per codepoint. Codepoints above 127
/// (and malformed UTF-8 bytes) become '?' (63).
std::vector<int> encode_ascii(const std::string& text);

/// Decodes a code sequence back to a string. Inverse of encode_ascii on
/// pure-ASCII input.
std::string decode_ascii(const std::vector<int>& codes);

/// Right-pads the code sequences with 0 into a rectangular matrix whose
/// width is the longest sequence. Throws if every sequence is empty.
AsciiMatrix pad_matrix(const std::vector<std::vector<int>>& sequences);

/// Encodes every sentence of a corpus and pads into one matrix.
AsciiMatrix encode_corpus(const Corpus& corpus);

/// Builds a corpus from raw text via split_sentences.
Corpus corpus_from_text(const std::string& text, const std::string& id,
                        const std::string& source = "inline");

/// Builds a corpus from pre-split text, one sentence per line.
Corpus corpus_from_lines(const std::string& text, const std::string& id,
                         const std::string& source = "inline");

/// Reads a UTF-8 text file and tokenizes it. Throws on unreadable files
/// and on text that is empty after trimming.
Corpus load_corpus(const std::string& path, const std::string& id,
                   bool pre_split = false);

}  // namespace lexibalance::ingest

#endif
