#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lingo/types.hpp"

namespace lingo {

/// Loads a corpus from either a directory (one UTF-8 text file per document,
/// ordered by filename) or a JSON-lines file (one {"title", "body"} object per
/// line). Ids are assigned 1..N in loading order.
std::vector<Document> load_corpus(const std::filesystem::path& path);

LingoConfig load_config(const std::filesystem::path& path);
// Absent keys keep their defaults; unknown keys are rejected.
LingoConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const LingoConfig& config);

nlohmann::json result_to_json(const ClusteringResult& result);
ClusteringResult result_from_json(const nlohmann::json& j);

// "%.2E", e.g. 5.34 -> "5.34E+00".
std::string format_score_scientific(double score);
// Shortest text that parses back to the same double.
std::string format_score_exact(double score);

std::string render_table(const ClusteringResult& result);
std::string render_csv(const ClusteringResult& result, std::string_view dataset);

struct OutputFiles {
    std::filesystem::path json;
    std::filesystem::path table;
    std::filesystem::path csv;
};

/// Writes result.json, clusters.txt and clusters.csv into out_dir (created if
/// missing).
OutputFiles write_outputs(const ClusteringResult& result, const std::filesystem::path& out_dir,
                          std::string_view dataset);

bool is_valid_utf8(std::string_view bytes);

} // namespace lingo
