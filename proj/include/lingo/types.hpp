#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lingo {

enum class Strategy { vsm, lsi, lsi_bm25 };

std::string_view to_string(Strategy s);
// Throws lingo::Error listing the accepted names.
Strategy parse_strategy(std::string_view name);

struct Document {
    int id = 0; // 1-based, contiguous in loading order
    std::string title;
    std::string body;
};

struct LingoConfig {
    int term_frequency_threshold = 2;
    double candidate_label_threshold = 0.775;
    double label_similarity_threshold = 0.30;
    double snippet_assignment_threshold = 0.15;
    double k1 = 1.2;
    double b = 0.75;
    Strategy strategy = Strategy::vsm;
    // Empty selects the built-in English list.
    std::string stopword_list_path;
    int max_phrase_length = 8;

    // Throws lingo::Error naming the offending field and its allowed range.
    void validate() const;

    bool operator==(const LingoConfig&) const = default;
};

struct Phrase {
    std::vector<std::string> terms; // stems
    int occurrence_count = 0;
    std::string surface_form;

    bool operator==(const Phrase&) const = default;
};

struct LabelCandidate {
    Phrase phrase;
    double score = 0.0;
    Eigen::VectorXd term_vector; // unit length in term space

    bool operator==(const LabelCandidate& o) const
    {
        return phrase == o.phrase && score == o.score && term_vector.size() == o.term_vector.size() &&
               term_vector == o.term_vector;
    }
};

struct Cluster {
    LabelCandidate label;
    std::vector<int> members; // ascending document ids
    double score = 0.0;       // label.score * members.size()

    bool operator==(const Cluster&) const = default;
};

struct ClusteringResult {
    std::vector<Cluster> clusters; // descending score
    std::vector<int> others;       // ascending document ids
    LingoConfig config_echo;
    std::size_t corpus_size = 0;

    bool operator==(const ClusteringResult&) const = default;
};

} // namespace lingo
