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

#include "lexibalance/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lexibalance::report {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

bool label_is_safe(const std::string& label) {
    if (label.empty()) return false;
    for (char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// Table precision: 6 decimals, except tiny p-values which would print
// as 0.000000 and switch to 2-digit scientific notation instead.
std::string format_p(double p) {
    if (p != 0.0 && p < 1e-6) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2e", p);
        return buf;
    }
    return fixed(p, 6);
}

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json histogram_to_json(const stats::Histogram& h) {
    return ordered_json{{"edges", h.edges}, {"counts", h.counts}};
}

stats::Histogram empty_histogram() { return stats::Histogram{{0.0, 1.0}, {0}}; }

CorpusReport skipped_report(const CorpusSpec& spec, const std::string& source,
                            std::size_t sentence_count, const std::string& reason) {
    CorpusReport r;
    r.corpus_id = spec.label;
    r.source = source;
    r.sample_size = sentence_count;
    r.skipped = true;
    r.skip_reason = reason;
    r.dot_histogram = empty_histogram();
    r.length_histogram = empty_histogram();
    return r;
}

ingest::Corpus load_spec(const CorpusSpec& spec) {
    if (spec.text.has_value()) {
        return spec.pre_split ? ingest::corpus_from_lines(*spec.text, spec.label)
                              : ingest::corpus_from_text(*spec.text, spec.label);
    }
    return ingest::load_corpus(spec.path, spec.label, spec.pre_split);
}

CorpusReport analyze_sentences(const CorpusSpec& spec, const std::string& source,
                               const std::vector<std::string>& sentences,
                               const RunConfig& config,
                               const align::AlignmentVector& k_vector) {
    if (sentences.size() < 3) {
        return skipped_report(spec, source, sentences.size(),
                              "too small: fewer than 3 sentences");
    }
    ingest::Corpus corpus{spec.label, sentences, source};
    const ingest::AsciiMatrix matrix = ingest::encode_corpus(corpus);
    const align::SentenceEmbedding embedding = align::embed_sentences(matrix, spec.label);
    const align::AlignmentScores scores = align::alignment_scores(embedding, k_vector);

    CorpusReport r;
    r.corpus_id = spec.label;
    r.source = source;
    r.sample_size = scores.scores.size();
    r.normality = stats::test_normality(scores.scores, config.alpha);
    r.dot_histogram = stats::histogram(scores.scores, config.bins);
    r.zero_score_fraction = align::zero_score_fraction(scores);
    r.pca_cumulative_explained_variance = embedding.cumulative_explained_variance;
    r.category_cumulative_explained_variance = k_vector.cumulative_explained_variance();
    r.matrix_rows = matrix.rows;
    r.matrix_cols = matrix.cols;
    r.scores = scores.scores;
    r.sentence_lengths.reserve(sentences.size());
    std::vector<double> lengths;
    lengths.reserve(sentences.size());
    for (const auto& s : sentences) {
        const std::size_t len = ingest::encode_ascii(s).size();
        r.sentence_lengths.push_back(len);
        lengths.push_back(static_cast<double>(len));
    }
    r.length_histogram = stats::histogram(lengths, config.bins);
    if (config.verbose_pca) {
        // Refit is cheap relative to keeping the model on every path.
        const std::size_t width = std::max(matrix.cols, align::kCategoryCount);
        Matrix data(matrix.rows, width);
        for (std::size_t i = 0; i < matrix.rows; ++i)
            for (std::size_t j = 0; j < matrix.cols; ++j) data(i, j) = matrix.at(i, j);
        r.sentence_model = pca::fit(data, align::kCategoryCount);
    }
    return r;
}

}  // namespace

void validate_config(const RunConfig& config) {
    if (config.corpora.empty()) {
        throw std::invalid_argument("config: at least one corpus required");
    }
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw std::invalid_argument("config: alpha must lie in (0, 1)");
    }
    if (config.bins < 1) {
        throw std::invalid_argument("config: bins must be >= 1");
    }
    std::vector<std::string> labels;
    for (const auto& spec : config.corpora) {
        if (!label_is_safe(spec.label)) {
            throw std::invalid_argument("config: label '" + spec.label +
                                        "' must be non-empty and use only [A-Za-z0-9_.-]");
        }
        labels.push_back(spec.label);
    }
    if (config.combined) labels.emplace_back("Combined");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw std::invalid_argument("config: duplicate corpus label");
    }
}

CorpusReport analyze_corpus(const CorpusSpec& spec, const RunConfig& config,
                            const align::AlignmentVector& k_vector) {
    const ingest::Corpus corpus = load_spec(spec);
    return analyze_sentences(spec, corpus.source, corpus.sentences, config, k_vector);
}

BatchResult batch(const RunConfig& config) {
    validate_config(config);
    const align::AlignmentVector k_vector = align::build_category_vector();

    BatchResult result;
    std::vector<std::string> combined_sentences;
    for (const auto& spec : config.corpora) {
        ingest::Corpus corpus = load_spec(spec);  // I/O errors propagate
        if (config.combined) {
            combined_sentences.insert(combined_sentences.end(), corpus.sentences.begin(),
                                      corpus.sentences.end());
        }
        try {
            result.rows.push_back(
                analyze_sentences(spec, corpus.source, corpus.sentences, config, k_vector));
        } catch (const std::invalid_argument& e) {
            result.rows.push_back(
                skipped_report(spec, corpus.source, corpus.sentences.size(), e.what()));
        }
    }
    if (config.combined) {
        CorpusSpec spec;
        spec.label = "Combined";
        try {
            result.rows.push_back(analyze_sentences(spec, "(all corpora)",
                                                    combined_sentences, config, k_vector));
        } catch (const std::invalid_argument& e) {
            result.rows.push_back(
                skipped_report(spec, "(all corpora)", combined_sentences.size(), e.what()));
        }
    }

    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const CorpusReport& a, const CorpusReport& b) {
                         return a.sample_size < b.sample_size;
                     });

    const bool any = std::any_of(result.rows.begin(), result.rows.end(),
                                 [](const CorpusReport& r) { return !r.skipped; });
    if (!any) {
        throw std::runtime_error("batch: empty table, every corpus was skipped");
    }
    return result;
}

std::string report_to_json(const CorpusReport& report) {
    ordered_json j;
    j["corpus"] = report.corpus_id;
    j["source"] = report.source;
    j["sample_size"] = report.sample_size;
    j["skipped"] = report.skipped;
    if (report.skipped) {
        j["skip_reason"] = report.skip_reason;
        return j.dump(2) + "\n";
    }
    j["ascii_matrix"] = ordered_json{{"rows", report.matrix_rows}, {"cols", report.matrix_cols}};
    j["pca"] = ordered_json{
        {"k", align::kCategoryCount},
        {"cumulative_explained_variance", report.pca_cumulative_explained_variance}};
    j["category_model"] = ordered_json{
        {"k", 1},
        {"cumulative_explained_variance", report.category_cumulative_explained_variance}};
    j["zero_score_fraction"] = report.zero_score_fraction;
    j["normality"] = ordered_json{
        {"n", report.normality.n},
        {"sw_stat", report.normality.sw_stat},
        {"sw_p", report.normality.sw_p},
        {"sw_normal", report.normality.sw_normal},
        {"sw_beyond_validated_range", report.normality.sw_beyond_validated_range},
        {"ad_stat", report.normality.ad_stat},
        {"ad_crit_5", report.normality.ad_crit_5},
        {"ad_normal", report.normality.ad_normal},
        {"alpha", report.normality.alpha}};
    j["histograms"] = ordered_json{{"dots", histogram_to_json(report.dot_histogram)},
                                   {"lengths", histogram_to_json(report.length_histogram)}};
    j["scores"] = report.scores;
    j["sentence_lengths"] = report.sentence_lengths;
    if (report.sentence_model.has_value()) {
        const pca::PcaModel& m = *report.sentence_model;
        ordered_json comps = ordered_json::array();
        for (std::size_t r = 0; r < m.components.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < m.components.cols(); ++c) row.push_back(m.components(r, c));
            comps.push_back(std::move(row));
        }
        j["sentence_model"] = ordered_json{{"mean", m.mean},
                                           {"eigenvalues", m.eigenvalues},
                                           {"explained_variance_ratio", m.explained_variance_ratio},
                                           {"components", std::move(comps)}};
    }
    return j.dump(2) + "\n";
}

std::string scores_to_csv(const CorpusReport& report) {
    std::ostringstream out;
    out << "sentence_index,length,score\n";
    for (std::size_t i = 0; i < report.scores.size(); ++i) {
        out << i << ',' << report.sentence_lengths[i] << ',' << full_precision(report.scores[i])
            << '\n';
    }
    return out.str();
}

std::string text_histogram(const stats::Histogram& hist, std::size_t max_bar_width) {
    std::size_t peak = 1;
    for (std::size_t c : hist.counts) peak = std::max(peak, c);
    std::ostringstream out;
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        const bool last = i + 1 == hist.counts.size();
        char range[80];
        std::snprintf(range, sizeof(range), "[%12.4f, %12.4f%c", hist.edges[i],
                      hist.edges[i + 1], last ? ']' : ')');
        const std::size_t bar =
            (hist.counts[i] * max_bar_width + peak - 1) / peak;  // ceil, so nonzero shows
        out << range << ' ' << std::string(bar, '#') << ' ' << hist.counts[i] << '\n';
    }
    return out.str();
}

std::string svg_histogram(const stats::Histogram& hist, const std::string& title) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kMarginLeft = 56.0;
    constexpr double kMarginRight = 16.0;
    constexpr double kMarginTop = 36.0;
    constexpr double kMarginBottom = 44.0;
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    std::size_t peak = 1;
    for (std::size_t c : hist.counts) peak = std::max(peak, c);
    const std::size_t bins = hist.counts.size();

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    s << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    s << "  <text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
    for (std::size_t i = 0; i < bins; ++i) {
        const double x = kMarginLeft + plot_w * static_cast<double>(i) / static_cast<double>(bins);
        const double w = plot_w / static_cast<double>(bins);
        const double h = plot_h * static_cast<double>(hist.counts[i]) / static_cast<double>(peak);
        const double y = kMarginTop + (plot_h - h);
        s << "  <rect x=\"" << fixed(x, 2) << "\" y=\"" << fixed(y, 2) << "\" width=\""
          << fixed(w, 2) << "\" height=\"" << fixed(h, 2)
          << "\" fill=\"#4878a8\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
    }
    // Axes with min/max labels.
    s << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
      << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s << "  <text x=\"" << kMarginLeft << "\" y=\"" << kHeight - 16
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
      << fixed(hist.edges.front(), 3) << "</text>\n";
    s << "  <text x=\"" << kMarginLeft + plot_w << "\" y=\"" << kHeight - 16
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
      << fixed(hist.edges.back(), 3) << "</text>\n";
    s << "  <text x=\"" << kMarginLeft - 8 << "\" y=\"" << kMarginTop + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << peak
      << "</text>\n";
    s << "  <text x=\"" << kMarginLeft - 8 << "\" y=\"" << kMarginTop + plot_h
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">0</text>\n";
    s << "</svg>\n";
    return s.str();
}

namespace {

void append_summary_row(std::ostringstream& out, const CorpusReport& r, char sep) {
    out << r.corpus_id << sep << r.sample_size << sep;
    if (r.skipped) {
        out << "skipped (" << r.skip_reason << ")";
        out << '\n';
        return;
    }
    out << fixed(r.normality.sw_stat, 6) << sep << format_p(r.normality.sw_p) << sep
        << (r.normality.sw_normal ? "Yes" : "No") << sep << fixed(r.normality.ad_stat, 6) << sep
        << fixed(r.normality.ad_crit_5, 3) << sep << (r.normality.ad_normal ? "Yes" : "No")
        << '\n';
}

}  // namespace

std::string format_summary_csv(const BatchResult& result) {
    std::ostringstream out;
    out << "experiment,sample_size,shapiro_statistic,shapiro_p_value,shapiro_normal,"
           "ad_statistic,ad_critical_5,ad_normal\n";
    for (const auto& r : result.rows) {
        if (r.skipped) continue;
        append_summary_row(out, r, ',');
    }
    return out.str();
}

std::string format_summary_table(const BatchResult& result) {
    std::ostringstream out;
    char header[160];
    std::snprintf(header, sizeof(header), "%-16s %11s %10s %12s %7s %12s %9s %7s\n", "experiment",
                  "sample_size", "sw_stat", "sw_p", "sw_ok", "ad_stat", "ad_crit5", "ad_ok");
    out << header;
    for (const auto& r : result.rows) {
        char line[256];
        if (r.skipped) {
            std::snprintf(line, sizeof(line), "%-16s %11zu skipped: %s\n", r.corpus_id.c_str(),
                          r.sample_size, r.skip_reason.c_str());
        } else {
            std::snprintf(line, sizeof(line), "%-16s %11zu %10.6f %12s %7s %12.6f %9.3f %7s\n",
                          r.corpus_id.c_str(), r.sample_size, r.normality.sw_stat,
                          format_p(r.normality.sw_p).c_str(), r.normality.sw_normal ? "Yes" : "No",
                          r.normality.ad_stat, r.normality.ad_crit_5,
                          r.normality.ad_normal ? "Yes" : "No");
        }
        out << line;
    }
    return out.str();
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("render: cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("render: write failed on '" + path.string() + "'");
    }
}

}  // namespace

void render(const CorpusReport& report, const std::string& out_dir) {
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("render: output directory '" + out_dir + "' is not writable");
    }
    write_file(dir / (report.corpus_id + ".report.json"), report_to_json(report));
    if (report.skipped) return;
    write_file(dir / (report.corpus_id + ".scores.csv"), scores_to_csv(report));
    write_file(dir / (report.corpus_id + ".dots.svg"),
               svg_histogram(report.dot_histogram, report.corpus_id + ": alignment scores"));
    write_file(dir / (report.corpus_id + ".lengths.svg"),
               svg_histogram(report.length_histogram, report.corpus_id + ": sentence lengths"));
}

void render_batch(const BatchResult& result, const std::string& out_dir) {
    for (const auto& row : result.rows) render(row, out_dir);
    write_file(fs::path(out_dir) / "summary.csv", format_summary_csv(result));
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config: cannot read '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("config: invalid JSON in '" + path + "': " + e.what());
    }
    RunConfig config;
    if (!j.contains("corpora") || !j["corpora"].is_array()) {
        throw std::runtime_error("config: 'corpora' array required");
    }
    const fs::path base = fs::path(path).parent_path();
    for (const auto& item : j["corpora"]) {
        CorpusSpec spec;
        spec.label = item.at("label").get<std::string>();
        if (item.contains("text")) {
            spec.text = item["text"].get<std::string>();
        } else {
            // Relative corpus paths resolve against the config file.
            const fs::path p = item.at("path").get<std::string>();
            spec.path = p.is_absolute() ? p.string() : (base / p).string();
        }
        spec.pre_split = item.value("pre_split", false);
        config.corpora.push_back(std::move(spec));
    }
    config.bins = j.value("bins", std::size_t{30});
    config.alpha = j.value("alpha", 0.05);
    config.out_dir = j.value("out", std::string{"."});
    config.verbose_pca = j.value("verbose_pca", false);
    config.combined = j.value("combined", false);
    validate_config(config);
    return config;
}

}  // namespace lexibalance::report
