#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lingo/preprocess.hpp"

namespace lingo {

enum class Weighting { tfidf, bm25 };

/// Raw term counts of the vocabulary over a corpus.
struct TermCounts {
    Eigen::MatrixXd counts;            // t x d
    std::vector<double> doc_lengths;   // l(d): tokens per document, stop words included
    std::vector<int> doc_frequencies;  // n(t)
    std::vector<int> doc_ids;
};

TermCounts count_terms(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary);

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
    double avg_doc_length = 0.0; // L
    std::vector<double> doc_lengths;
    std::vector<int> doc_frequencies;
    int corpus_size = 0;

    static Bm25Params from_counts(const TermCounts& counts, double k1, double b);
};

struct TermDocumentMatrix {
    Eigen::MatrixXd weights; // t x d
    std::vector<int> doc_ids;
    Weighting weighting = Weighting::tfidf;

    Eigen::Index terms() const { return weights.rows(); }
    Eigen::Index docs() const { return weights.cols(); }
};

// ln(d / df); 0 when df == 0.
double tfidf_idf(int corpus_size, int doc_frequency);

// ln((n - n_t + 0.5) / (n_t + 0.5)); negative once a term is in more than
// half of the documents.
double bm25_idf(int corpus_size, int doc_frequency);

// Saturated term frequency component of BM25, without the idf factor.
double bm25_tf(double count, double doc_length, double avg_doc_length, double k1, double b);

/// Okapi BM25 score of document column doc_index for the given query term
/// indices.
double bm25_score(std::span<const std::size_t> query_terms, std::size_t doc_index, const Bm25Params& params,
                  const Eigen::MatrixXd& counts);

TermDocumentMatrix tfidf_matrix(const TermCounts& counts);
TermDocumentMatrix tfidf_matrix(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary);

// Columns are left unnormalized.
TermDocumentMatrix bm25_weight_matrix(const TermCounts& counts, const Bm25Params& params);
TermDocumentMatrix bm25_weight_matrix(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary,
                                      double k1, double b);

// Copy of m with every nonzero column scaled to unit Euclidean length.
Eigen::MatrixXd normalize_columns(const Eigen::MatrixXd& m);

} // namespace lingo
