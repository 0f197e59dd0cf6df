#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lingo/preprocess.hpp"
#include "lingo/types.hpp"

namespace lingo {

struct StrategySummary {
    std::size_t cluster_count = 0;
    std::size_t assigned_doc_count = 0; // distinct docs in >= 1 cluster
    std::size_t others_count = 0;
    double total_score = 0.0;
};

StrategySummary summarize(const ClusteringResult& result);

struct StrategyRun {
    Strategy strategy;
    ClusteringResult result;
    StrategySummary summary;
};

struct ComparisonReport {
    std::string corpus_name;
    std::vector<StrategyRun> runs;
};

/// Runs the pipeline once per strategy; only config.strategy differs between
/// runs. Runs execute concurrently; the report keeps the requested order.
ComparisonReport compare_strategies(std::span<const Document> docs, const LingoConfig& config,
                                    std::span<const Strategy> strategies, const StopWords& stopwords,
                                    std::string corpus_name = {});

std::string render_comparison_csv(const ComparisonReport& report);
void emit_comparison_csv(const ComparisonReport& report, const std::filesystem::path& path);

struct ComparisonRow {
    std::string strategy;
    int cluster_id = 0;
    std::size_t size = 0;
    double score = 0.0;
    bool operator==(const ComparisonRow&) const = default;
};
// Cluster rows only; summary rows are skipped.
std::vector<ComparisonRow> parse_comparison_csv(const std::string& text);

} // namespace lingo
