#include "lingo/weighting.hpp"

#include <cmath>
#include <numeric>

namespace lingo {

TermCounts count_terms(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary)
{
    const auto t = static_cast<Eigen::Index>(vocabulary.size());
    const auto d = static_cast<Eigen::Index>(docs.size());
    TermCounts out;
    out.counts = Eigen::MatrixXd::Zero(t, d);
    out.doc_lengths.reserve(docs.size());
    out.doc_ids.reserve(docs.size());
    for (Eigen::Index j = 0; j < d; ++j) {
        const auto& doc = docs[static_cast<std::size_t>(j)];
        out.doc_ids.push_back(doc.doc_id);
        out.doc_lengths.push_back(static_cast<double>(doc.token_count()));
        for (const auto& sentence : doc.sentences) {
            for (const auto& tok : sentence) {
                if (tok.is_stopword) {
                    continue;
                }
                if (auto i = vocabulary.index_of(tok.stem)) {
                    out.counts(static_cast<Eigen::Index>(*i), j) += 1.0;
                }
            }
        }
    }
    out.doc_frequencies.resize(vocabulary.size());
    for (Eigen::Index i = 0; i < t; ++i) {
        out.doc_frequencies[static_cast<std::size_t>(i)] = static_cast<int>((out.counts.row(i).array() > 0.0).count());
    }
    return out;
}

Bm25Params Bm25Params::from_counts(const TermCounts& counts, double k1, double b)
{
    Bm25Params p;
    p.k1 = k1;
    p.b = b;
    p.doc_lengths = counts.doc_lengths;
    p.doc_frequencies = counts.doc_frequencies;
    p.corpus_size = static_cast<int>(counts.doc_lengths.size());
    if (!p.doc_lengths.empty()) {
        p.avg_doc_length = std::accumulate(p.doc_lengths.begin(), p.doc_lengths.end(), 0.0) /
                           static_cast<double>(p.doc_lengths.size());
    }
    return p;
}

double tfidf_idf(int corpus_size, int doc_frequency)
{
    if (doc_frequency <= 0) {
        return 0.0;
    }
    return std::log(static_cast<double>(corpus_size) / static_cast<double>(doc_frequency));
}

double bm25_idf(int corpus_size, int doc_frequency)
{
    return std::log((static_cast<double>(corpus_size) - doc_frequency + 0.5) / (doc_frequency + 0.5));
}

double bm25_tf(double count, double doc_length, double avg_doc_length, double k1, double b)
{
    if (count == 0.0) {
        return 0.0;
    }
    const double norm = avg_doc_length > 0.0 ? doc_length / avg_doc_length : 1.0;
    return count * (k1 + 1.0) / (count + k1 * (1.0 - b + b * norm));
}

double bm25_score(std::span<const std::size_t> query_terms, std::size_t doc_index, const Bm25Params& params,
                  const Eigen::MatrixXd& counts)
{
    double score = 0.0;
    const auto j = static_cast<Eigen::Index>(doc_index);
    for (const auto term : query_terms) {
        const double c = counts(static_cast<Eigen::Index>(term), j);
        if (c == 0.0) {
            continue;
        }
        score += bm25_idf(params.corpus_size, params.doc_frequencies[term]) *
                 bm25_tf(c, params.doc_lengths[doc_index], params.avg_doc_length, params.k1, params.b);
    }
    return score;
}

TermDocumentMatrix tfidf_matrix(const TermCounts& counts)
{
    TermDocumentMatrix m;
    m.weighting = Weighting::tfidf;
    m.doc_ids = counts.doc_ids;
    m.weights = counts.counts;
    const int d = static_cast<int>(counts.counts.cols());
    for (Eigen::Index i = 0; i < m.weights.rows(); ++i) {
        m.weights.row(i) *= tfidf_idf(d, counts.doc_frequencies[static_cast<std::size_t>(i)]);
    }
    return m;
}

TermDocumentMatrix tfidf_matrix(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary)
{
    return tfidf_matrix(count_terms(docs, vocabulary));
}

TermDocumentMatrix bm25_weight_matrix(const TermCounts& counts, const Bm25Params& params)
{
    TermDocumentMatrix m;
    m.weighting = Weighting::bm25;
    m.doc_ids = counts.doc_ids;
    m.weights = Eigen::MatrixXd::Zero(counts.counts.rows(), counts.counts.cols());
    for (Eigen::Index i = 0; i < m.weights.rows(); ++i) {
        const double idf = bm25_idf(params.corpus_size, params.doc_frequencies[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < m.weights.cols(); ++j) {
            const double c = counts.counts(i, j);
            if (c != 0.0) {
                m.weights(i, j) = idf * bm25_tf(c, params.doc_lengths[static_cast<std::size_t>(j)],
                                                params.avg_doc_length, params.k1, params.b);
            }
        }
    }
    return m;
}

TermDocumentMatrix bm25_weight_matrix(std::span<const PreprocessedDocument> docs, const Vocabulary& vocabulary,
                                      double k1, double b)
{
    const auto counts = count_terms(docs, vocabulary);
    return bm25_weight_matrix(counts, Bm25Params::from_counts(counts, k1, b));
}

Eigen::MatrixXd normalize_columns(const Eigen::MatrixXd& m)
{
    Eigen::MatrixXd out = m;
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
        const double norm = out.col(j).norm();
        if (norm > 0.0) {
            out.col(j) /= norm;
        }
    }
    return out;
}

} // namespace lingo
