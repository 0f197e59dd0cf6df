#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lingo/linalg.hpp"
#include "lingo/preprocess.hpp"
#include "lingo/types.hpp"
#include "lingo/weighting.hpp"

namespace lingo {

TruncationChoice select_k(const SvdFactors& f, double candidate_label_threshold);

struct WeightingScheme {
    Weighting kind = Weighting::tfidf;
    double k1 = 1.2;
    double b = 0.75;
};

/// Candidate label vectors, one unit column per kept phrase.
struct PhraseMatrix {
    Eigen::MatrixXd columns; // t x p
    std::vector<Phrase> phrases;
    std::vector<std::string> warnings; // one per dropped candidate
};

/// Each phrase is weighted as a pseudo-document against the corpus statistics
/// in counts. Phrases with no weighted vocabulary term are dropped.
PhraseMatrix build_phrase_matrix(std::span<const Phrase> candidates, const Vocabulary& vocabulary,
                                 const TermCounts& counts, const WeightingScheme& scheme);

/// M = U_k^T P. Every concept row picks the column with the largest |M(i, j)|
/// (lowest column on ties); each picked phrase becomes one candidate scored by
/// the largest |component| of its column.
std::vector<LabelCandidate> induce_label_candidates(const SvdFactors& f, int k, const PhraseMatrix& p);

/// Groups candidates into connected components of the graph with an edge
/// wherever cosine >= threshold and keeps the top scorer of each group (ties
/// go to the lexicographically smaller phrase). Survivors keep input order.
std::vector<LabelCandidate> dedupe_labels(std::span<const LabelCandidate> candidates,
                                          double label_similarity_threshold);
// Same grouping over a precomputed symmetric similarity matrix; returns the
// indices of the survivors in ascending order.
std::vector<std::size_t> dedupe_label_indices(std::span<const LabelCandidate> candidates,
                                              const Eigen::MatrixXd& similarity, double label_similarity_threshold);

Eigen::MatrixXd label_matrix(std::span<const LabelCandidate> labels);

struct ContentAssignment {
    Eigen::MatrixXd similarity;           // labels x docs
    std::vector<std::vector<int>> members; // per label, ascending doc ids
    std::vector<int> unassigned;           // ascending doc ids
};

/// Assigns document j to label i iff similarity(i, j) > threshold.
///  vsm       similarity = Q^T * normalized(a)
///  lsi       similarity = Q^T * normalized(A_k), A_k rebuilt from factors
///  lsi-bm25  as lsi; a and factors must come from BM25 weights
ContentAssignment discover_contents(Strategy strategy, const Eigen::MatrixXd& q, const TermDocumentMatrix& a,
                                    const SvdFactors& factors, int k, double snippet_assignment_threshold);

ClusteringResult form_final_clusters(std::span<const LabelCandidate> labels, const ContentAssignment& contents,
                                     const LingoConfig& config, std::size_t corpus_size);

struct LingoRun {
    ClusteringResult result;
    int rank = 0;
    TruncationChoice truncation;
    std::size_t phrase_count = 0;
    std::size_t candidate_count = 0;
    std::size_t label_count = 0;
    ContentAssignment contents;
};

LingoRun run_lingo_detailed(std::span<const Document> docs, const LingoConfig& config, const StopWords& stopwords);
ClusteringResult run_lingo(std::span<const Document> docs, const LingoConfig& config, const StopWords& stopwords);
// Stop words come from config.stopword_list_path, or the built-in list.
ClusteringResult run_lingo(std::span<const Document> docs, const LingoConfig& config);

} // namespace lingo
