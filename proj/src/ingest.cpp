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

#include "lexibalance/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lexibalance::ingest {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Collapses internal whitespace runs (incl. newlines) to single spaces.
std::string collapse_whitespace(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (is_space(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += c;
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (is_terminator(c)) {
            // Consume the maximal terminator run.
            std::size_t j = i;
            while (j < n && is_terminator(text[j])) ++j;
            current.append(text, i, j - i);
            i = j;
            // Boundary only when the run is followed by whitespace or EOT.
            if (i >= n || is_space(text[i])) {
                std::string sentence = collapse_whitespace(trim(current));
                if (!sentence.empty()) out.push_back(std::move(sentence));
                current.clear();
            }
        } else {
            current += c;
            ++i;
        }
    }
    std::string tail = collapse_whitespace(trim(current));
    if (!tail.empty()) out.push_back(std::move(tail));
    return out;
}

std::vector<int> encode_ascii(const std::string& text) {
    std::vector<int> codes;
    codes.reserve(text.size());
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char b = static_cast<unsigned char>(text[i]);
        if (b < 0x80) {
            codes.push_back(static_cast<int>(b));
            ++i;
            continue;
        }
        // Multi-byte UTF-8 sequence: one '?' per codepoint. Malformed
        // lead or continuation bytes also collapse to a single '?'.
        std::size_t len = 0;
        if ((b & 0xE0) == 0xC0) len = 2;
        else if ((b & 0xF0) == 0xE0) len = 3;
        else if ((b & 0xF8) == 0xF0) len = 4;
        if (len == 0) {
            codes.push_back('?');
            ++i;
            continue;
        }
        std::size_t k = 1;
        while (k < len && i + k < n &&
               (static_cast<unsigned char>(text[i + k]) & 0xC0) == 0x80) {
            ++k;
        }
        codes.push_back('?');
        i += k;
    }
    return codes;
}

std::string decode_ascii(const std::vector<int>& codes) {
    std::string out;
    out.reserve(codes.size());
    for (int c : codes) out += static_cast<char>(c);
    return out;
}

AsciiMatrix pad_matrix(const std::vector<std::vector<int>>& sequences) {
    std::size_t width = 0;
    for (const auto& seq : sequences) width = std::max(width, seq.size());
    if (sequences.empty() || width == 0) {
        throw std::invalid_argument("pad_matrix: empty matrix");
    }
    AsciiMatrix m;
    m.rows = sequences.size();
    m.cols = width;
    m.values.assign(m.rows * m.cols, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const auto& seq = sequences[r];
        std::copy(seq.begin(), seq.end(), m.values.begin() + r * width);
    }
    return m;
}

AsciiMatrix encode_corpus(const Corpus& corpus) {
    std::vector<std::vector<int>> rows;
    rows.reserve(corpus.sentences.size());
    for (const auto& s : corpus.sentences) rows.push_back(encode_ascii(s));
    return pad_matrix(rows);
}

Corpus corpus_from_text(const std::string& text, const std::string& id,
                        const std::string& source) {
    Corpus c;
    c.id = id;
    c.source = source;
    c.sentences = split_sentences(text);
    if (c.sentences.empty()) {
        throw std::invalid_argument("load_corpus: empty corpus '" + id + "'");
    }
    return c;
}

Corpus corpus_from_lines(const std::string& text, const std::string& id,
                         const std::string& source) {
    Corpus c;
    c.id = id;
    c.source = source;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = collapse_whitespace(trim(line));
        if (!s.empty()) c.sentences.push_back(std::move(s));
    }
    if (c.sentences.empty()) {
        throw std::invalid_argument("load_corpus: empty corpus '" + id + "'");
    }
    return c;
}

Corpus load_corpus(const std::string& path, const std::string& id, bool pre_split) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("load_corpus: cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("load_corpus: read error on '" + path + "'");
    }
    const std::string text = buf.str();
    return pre_split ? corpus_from_lines(text, id, path)
                     : corpus_from_text(text, id, path);
}

}  // namespace lexibalance::ingest
