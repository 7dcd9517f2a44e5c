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

#ifndef LEXIBALANCE_REPORT_HPP
#define LEXIBALANCE_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexibalance/align.hpp"
#include "lexibalance/stats.hpp"

namespace lexibalance::report {

/// One corpus to analyze: a file path, or inline text for programmatic use.
struct CorpusSpec {
    std::string label;
    std::string path;                       // ignored when text is set
    std::optional<std::string> text;
    bool pre_split = false;                 // one sentence per line
};

struct RunConfig {
    std::vector<CorpusSpec> corpora;
    std::size_t bins = 30;
    double alpha = 0.05;
    std::string out_dir = ".";
    bool verbose_pca = false;   // include the sentence PCA model in JSON
    bool combined = false;      // append the all-corpora experiment
};

/// Everything one experiment produces: one summary-table row plus the
/// two histograms behind its figure panels.
struct CorpusReport {
    std::string corpus_id;
    std::string source;
    std::size_t sample_size = 0;

    bool skipped = false;
    std::string skip_reason;

    stats::NormalityReport normality;
    stats::Histogram dot_histogram;
    stats::Histogram length_histogram;
    double zero_score_fraction = 0.0;
    double pca_cumulative_explained_variance = 0.0;       // sentence model, k=17
    double category_cumulative_explained_variance = 0.0;  // alignment-vector model, k=1

    std::size_t matrix_rows = 0;
    std::size_t matrix_cols = 0;

    std::vector<double> scores;               // per sentence, corpus order
    std::vector<std::size_t> sentence_lengths;
    std::optional<pca::PcaModel> sentence_model;  // populated under verbose_pca
};

struct BatchResult {
    std::vector<CorpusReport> rows;  // ascending by sample size
};

/// Validates labels (unique, filename-safe) and general config sanity.
void validate_config(const RunConfig& config);

/// Runs the full pipeline on one corpus: ingest, encode, embed, align,
/// test. Corpora with fewer than 3 sentences come back marked skipped.
/// I/O failures and degenerate statistics propagate as exceptions.
CorpusReport analyze_corpus(const CorpusSpec& spec, const RunConfig& config,
                            const align::AlignmentVector& k_vector);

/// Analyzes every corpus in the config (plus the combined experiment
/// when enabled) and sorts rows by ascending sample size. Per-corpus
/// analysis errors demote the row to skipped; if nothing survives, an
/// empty-table error is thrown.
BatchResult batch(const RunConfig& config);

/// JSON document for one report. Numeric fields keep full precision.
std::string report_to_json(const CorpusReport& report);

/// CSV of per-sentence scores: sentence_index, length, score.
std::string scores_to_csv(const CorpusReport& report);

/// Plain-text bar chart of a histogram.
std::string text_histogram(const stats::Histogram& hist, std::size_t max_bar_width = 50);

/// Standalone SVG bar chart of a histogram.
std::string svg_histogram(const stats::Histogram& hist, const std::string& title);

/// Summary table in the report column order: experiment, sample size,
/// SW statistic, SW p, SW normal, A-D statistic, A-D 5% critical value,
/// A-D normal. Statistics print with 6 decimals; p-values below 1e-6
/// switch to scientific notation with 2 digits; critical values use 3.
std::string format_summary_csv(const BatchResult& result);
std::string format_summary_table(const BatchResult& result);

/// Writes <label>.report.json, <label>.scores.csv, <label>.dots.svg and
/// <label>.lengths.svg into out_dir (scores and histograms only for
/// analyzed rows). Throws when the directory cannot be written.
void render(const CorpusReport& report, const std::string& out_dir);

/// Renders every row and writes summary.csv.
void render_batch(const BatchResult& result, const std::string& out_dir);

/// Loads a JSON run config (documented in the README).
RunConfig load_config(const std::string& path);

}  // namespace lexibalance::report

#endif
