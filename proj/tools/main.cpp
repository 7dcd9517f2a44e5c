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

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lexibalance/align.hpp"
#include "lexibalance/report.hpp"

namespace {

using namespace lexibalance;

int run_analyze(const std::string& file, const std::string& label, bool pre_split,
                std::size_t bins, double alpha, const std::string& out_dir,
                bool verbose_pca) {
    report::RunConfig config;
    report::CorpusSpec spec;
    spec.label = label;
    spec.path = file;
    spec.pre_split = pre_split;
    config.corpora = {spec};
    config.bins = bins;
    config.alpha = alpha;
    config.out_dir = out_dir;
    config.verbose_pca = verbose_pca;
    report::validate_config(config);

    const align::AlignmentVector k_vector = align::build_category_vector();
    const report::CorpusReport rep = report::analyze_corpus(spec, config, k_vector);
    report::render(rep, out_dir);

    if (rep.skipped) {
        std::cout << rep.corpus_id << ": skipped (" << rep.skip_reason << ")\n";
        return 1;
    }
    report::BatchResult single;
    single.rows = {rep};
    std::cout << report::format_summary_table(single) << '\n';
    std::cout << "alignment scores (" << rep.sample_size << " sentences):\n"
              << report::text_histogram(rep.dot_histogram) << '\n';
    std::cout << "sentence lengths:\n" << report::text_histogram(rep.length_histogram) << '\n';
    std::cout << "zero-score fraction: " << rep.zero_score_fraction << '\n';
    std::cout << "cumulative explained variance (17 components): "
              << rep.pca_cumulative_explained_variance << '\n';
    std::cout << "reports written to " << out_dir << '/' << rep.corpus_id << ".*\n";
    return 0;
}

int run_batch(const std::string& config_path, bool combined_flag, const std::string& out_override) {
    report::RunConfig config = report::load_config(config_path);
    if (combined_flag) config.combined = true;
    if (!out_override.empty()) config.out_dir = out_override;

    const report::BatchResult result = report::batch(config);
    report::render_batch(result, config.out_dir);
    std::cout << report::format_summary_table(result) << '\n';
    std::cout << "reports written to " << config.out_dir << "/ (summary.csv + per-corpus files)\n";
    return 0;
}

int run_categories() {
    const align::LexicalCategorySet set = align::canonical_categories();
    const align::AlignmentVector k = align::build_category_vector(set);
    std::printf("%-16s %-16s %s\n", "category", "encoded", "ascii codes");
    for (std::size_t i = 0; i < set.names.size(); ++i) {
        const std::string cap = align::capitalize(set.names[i]);
        std::string codes;
        for (int c : ingest::encode_ascii(cap)) {
            if (!codes.empty()) codes += ',';
            codes += std::to_string(c);
        }
        std::printf("%-16s %-16s [%s]\n", set.names[i].c_str(), cap.c_str(), codes.c_str());
    }
    std::printf("\nalignment vector (k=1 projections, category order):\n");
    for (std::size_t i = 0; i < k.values.size(); ++i) {
        std::printf("  %-16s %+.12f\n", set.names[i].c_str(), k.values[i]);
    }
    std::printf("\ncategory model cumulative explained variance: %.12f\n",
                k.cumulative_explained_variance());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexibalance: sentence-structure balance analysis over ASCII-encoded corpora"};
    app.require_subcommand(1);

    std::string file;
    std::string label = "corpus";
    bool pre_split = false;
    std::size_t bins = 30;
    double alpha = 0.05;
    std::string out_dir = ".";
    bool verbose_pca = false;

    auto* analyze = app.add_subcommand("analyze", "Analyze a single text corpus");
    analyze->add_option("file", file, "UTF-8 text file")->required();
    analyze->add_option("--label", label, "Corpus label used in report filenames");
    analyze->add_flag("--pre-split", pre_split, "Treat input as one sentence per line");
    analyze->add_option("--bins", bins, "Histogram bin count (default 30)");
    analyze->add_option("--alpha", alpha, "Significance level (default 0.05)");
    analyze->add_option("--out", out_dir, "Output directory (default .)");
    analyze->add_flag("--verbose-pca", verbose_pca, "Include the sentence PCA model in JSON");

    std::string config_path;
    bool combined = false;
    std::string batch_out;
    auto* batch_cmd = app.add_subcommand("batch", "Analyze every corpus in a JSON config");
    batch_cmd->add_option("config", config_path, "JSON config file")->required();
    batch_cmd->add_flag("--combined", combined, "Append the combined all-corpora experiment");
    batch_cmd->add_option("--out", batch_out, "Override the config's output directory");

    auto* categories = app.add_subcommand("categories", "Print the 17 lexical categories and the alignment vector");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return run_analyze(file, label, pre_split, bins, alpha, out_dir, verbose_pca);
        }
        if (batch_cmd->parsed()) {
            return run_batch(config_path, combined, batch_out);
        }
        if (categories->parsed()) {
            return run_categories();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
