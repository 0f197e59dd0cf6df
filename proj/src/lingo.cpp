#include "lingo/lingo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "lingo/error.hpp"
#include "lingo/phrase_miner.hpp"

namespace lingo {

TruncationChoice select_k(const SvdFactors& f, double candidate_label_threshold)
{
    if (f.rank < 1) {
        throw Error("select_k: factors have rank 0");
    }
    std::vector<double> prefix(static_cast<std::size_t>(f.rank));
    double total = 0.0;
    for (int i = 0; i < f.rank; ++i) {
        total += f.sigma(i);
        prefix[static_cast<std::size_t>(i)] = total;
    }
    for (int k = 1; k <= f.rank; ++k) {
        const double q = prefix[static_cast<std::size_t>(k - 1)] / total;
        if (q >= candidate_label_threshold) {
            return {k, q};
        }
    }
    return {f.rank, 1.0};
}

PhraseMatrix build_phrase_matrix(std::span<const Phrase> candidates, const Vocabulary& vocabulary,
                                 const TermCounts& counts, const WeightingScheme& scheme)
{
    const auto t = static_cast<Eigen::Index>(vocabulary.size());
    const int d = static_cast<int>(counts.doc_lengths.size());
    double avg_len = 0.0;
    if (d > 0) {
        avg_len = std::accumulate(counts.doc_lengths.begin(), counts.doc_lengths.end(), 0.0) / d;
    }

    PhraseMatrix out;
    std::vector<Eigen::VectorXd> columns;
    for (const auto& phrase : candidates) {
        std::map<std::size_t, double> tf;
        for (const auto& term : phrase.terms) {
            if (auto i = vocabulary.index_of(term)) {
                tf[*i] += 1.0;
            }
        }
        Eigen::VectorXd column = Eigen::VectorXd::Zero(t);
        const auto length = static_cast<double>(phrase.terms.size());
        for (const auto& [i, count] : tf) {
            const int df = counts.doc_frequencies[i];
            column(static_cast<Eigen::Index>(i)) =
                scheme.kind == Weighting::tfidf
                    ? count * tfidf_idf(d, df)
                    : bm25_idf(d, df) * bm25_tf(count, length, avg_len, scheme.k1, scheme.b);
        }
        const double norm = column.norm();
        if (norm == 0.0) {
            out.warnings.push_back("dropped label candidate '" + phrase.surface_form +
                                   "': no weighted vocabulary term");
            continue;
        }
        columns.push_back(column / norm);
        out.phrases.push_back(phrase);
    }
    out.columns.resize(t, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        out.columns.col(static_cast<Eigen::Index>(j)) = columns[j];
    }
    return out;
}

std::vector<LabelCandidate> induce_label_candidates(const SvdFactors& f, int k, const PhraseMatrix& p)
{
    if (k < 1 || k > f.rank) {
        throw Error("induce_label_candidates: k=" + std::to_string(k) + " outside [1," + std::to_string(f.rank) +
                    "]");
    }
    std::vector<LabelCandidate> out;
    if (p.columns.cols() == 0) {
        return out;
    }
    const Eigen::MatrixXd m = (f.u.leftCols(k).transpose() * p.columns).cwiseAbs();
    std::vector<bool> taken(static_cast<std::size_t>(m.cols()), false);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index j = 1; j < m.cols(); ++j) {
            if (m(i, j) > m(i, best)) {
                best = j;
            }
        }
        if (m(i, best) <= 0.0 || taken[static_cast<std::size_t>(best)]) {
            continue;
        }
        taken[static_cast<std::size_t>(best)] = true;
        out.push_back(LabelCandidate{p.phrases[static_cast<std::size_t>(best)], m.col(best).maxCoeff(),
                                     p.columns.col(best)});
    }
    return out;
}

namespace {

bool phrase_less(const Phrase& a, const Phrase& b)
{
    if (a.terms != b.terms) {
        return a.terms < b.terms;
    }
    return a.surface_form < b.surface_form;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

std::vector<std::size_t> dedupe_label_indices(std::span<const LabelCandidate> candidates,
                                              const Eigen::MatrixXd& similarity, double label_similarity_threshold)
{
    const std::size_t n = candidates.size();
    if (similarity.rows() != static_cast<Eigen::Index>(n) || similarity.cols() != static_cast<Eigen::Index>(n)) {
        throw Error("dedupe_labels: similarity matrix does not match the candidate count");
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (similarity(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) >=
                label_similarity_threshold) {
                parent[find_root(parent, a)] = find_root(parent, b);
            }
        }
    }
    // best member per component
    std::map<std::size_t, std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find_root(parent, i);
        auto [it, inserted] = best.emplace(root, i);
        if (!inserted) {
            const auto& cur = candidates[it->second];
            const auto& cand = candidates[i];
            if (cand.score > cur.score || (cand.score == cur.score && phrase_less(cand.phrase, cur.phrase))) {
                it->second = i;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (const auto& [root, i] : best) {
        keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

std::vector<LabelCandidate> dedupe_labels(std::span<const LabelCandidate> candidates,
                                          double label_similarity_threshold)
{
    const auto n = static_cast<Eigen::Index>(candidates.size());
    Eigen::MatrixXd similarity = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a + 1; b < n; ++b) {
            similarity(a, b) = similarity(b, a) = cosine_similarity(
                candidates[static_cast<std::size_t>(a)].term_vector, candidates[static_cast<std::size_t>(b)].term_vector);
        }
    }
    std::vector<LabelCandidate> out;
    for (auto i : dedupe_label_indices(candidates, similarity, label_similarity_threshold)) {
        out.push_back(candidates[i]);
    }
    return out;
}

Eigen::MatrixXd label_matrix(std::span<const LabelCandidate> labels)
{
    if (labels.empty()) {
        return {};
    }
    Eigen::MatrixXd q(labels.front().term_vector.size(), static_cast<Eigen::Index>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j) {
        q.col(static_cast<Eigen::Index>(j)) = labels[j].term_vector;
    }
    return q;
}

ContentAssignment discover_contents(Strategy strategy, const Eigen::MatrixXd& q, const TermDocumentMatrix& a,
                                    const SvdFactors& factors, int k, double snippet_assignment_threshold)
{
    if (q.cols() > 0 && q.rows() != a.terms()) {
        throw Error("discover_contents: label matrix has " + std::to_string(q.rows()) + " rows, expected " +
                    std::to_string(a.terms()));
    }
    const Weighting expected = strategy == Strategy::lsi_bm25 ? Weighting::bm25 : Weighting::tfidf;
    if (a.weighting != expected) {
        throw Error("discover_contents: strategy " + std::string(to_string(strategy)) +
                    " needs a matrix with matching weighting");
    }

    Eigen::MatrixXd docs;
    switch (strategy) {
    case Strategy::vsm:
        docs = normalize_columns(a.weights);
        break;
    case Strategy::lsi:
    case Strategy::lsi_bm25:
        if (factors.u.rows() != a.terms() || factors.v.rows() != a.docs()) {
            throw Error("discover_contents: factors do not match the term-document matrix");
        }
    {
        Eigen::MatrixXd ak = reconstruct_rank_k(factors, k);
        // columns orthogonal to the kept concepts are rounding noise
        const double floor = kRankTolerance * factors.sigma(0);
        for (Eigen::Index j = 0; j < ak.cols(); ++j) {
            if (ak.col(j).norm() <= floor) {
                ak.col(j).setZero();
            }
        }
        docs = normalize_columns(ak);
        break;
    }
    default:
        throw Error("discover_contents: unknown strategy");
    }

    ContentAssignment out;
    out.similarity = q.cols() > 0 ? Eigen::MatrixXd(q.transpose() * docs) : Eigen::MatrixXd(0, a.docs());
    out.members.resize(static_cast<std::size_t>(q.cols()));
    std::vector<bool> assigned(static_cast<std::size_t>(a.docs()), false);
    for (Eigen::Index j = 0; j < a.docs(); ++j) {
        for (Eigen::Index i = 0; i < q.cols(); ++i) {
            if (out.similarity(i, j) > snippet_assignment_threshold) {
                out.members[static_cast<std::size_t>(i)].push_back(a.doc_ids[static_cast<std::size_t>(j)]);
                assigned[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    for (Eigen::Index j = 0; j < a.docs(); ++j) {
        if (!assigned[static_cast<std::size_t>(j)]) {
            out.unassigned.push_back(a.doc_ids[static_cast<std::size_t>(j)]);
        }
    }
    for (auto& m : out.members) {
        std::sort(m.begin(), m.end());
    }
    std::sort(out.unassigned.begin(), out.unassigned.end());
    return out;
}

ClusteringResult form_final_clusters(std::span<const LabelCandidate> labels, const ContentAssignment& contents,
                                     const LingoConfig& config, std::size_t corpus_size)
{
    ClusteringResult r;
    r.config_echo = config;
    r.corpus_size = corpus_size;
    for (std::size_t i = 0; i < labels.size() && i < contents.members.size(); ++i) {
        const auto& members = contents.members[i];
        if (members.empty()) {
            continue;
        }
        const double score = labels[i].score * static_cast<double>(members.size());
        r.clusters.push_back(Cluster{labels[i], members, score});
    }
    std::stable_sort(r.clusters.begin(), r.clusters.end(),
                     [](const Cluster& a, const Cluster& b) { return a.score > b.score; });
    r.others = contents.unassigned;
    std::sort(r.others.begin(), r.others.end());
    return r;
}

namespace {

// Frequent single terms not already mined as one-token phrases.
std::vector<Phrase> single_term_candidates(const PreprocessedCorpus& corpus, const std::vector<Phrase>& phrases)
{
    std::set<std::string> covered;
    for (const auto& p : phrases) {
        if (p.terms.size() == 1) {
            covered.insert(p.terms.front());
        }
    }
    std::map<std::string, std::map<std::string, int>> surfaces;
    for (const auto& doc : corpus.documents) {
        for (const auto& sentence : doc.sentences) {
            for (const auto& tok : sentence) {
                if (!tok.is_stopword && corpus.vocabulary.index_of(tok.stem)) {
                    ++surfaces[tok.stem][tok.surface];
                }
            }
        }
    }
    std::vector<Phrase> out;
    for (const auto& entry : corpus.vocabulary.entries()) {
        if (covered.contains(entry.stem)) {
            continue;
        }
        const auto& forms = surfaces[entry.stem];
        const auto best = std::max_element(forms.begin(), forms.end(),
                                           [](const auto& a, const auto& b) { return a.second < b.second; });
        out.push_back(Phrase{{entry.stem}, entry.corpus_frequency, best == forms.end() ? entry.stem : best->first});
    }
    return out;
}

} // namespace

LingoRun run_lingo_detailed(std::span<const Document> docs, const LingoConfig& config, const StopWords& stopwords)
{
    config.validate();
    const auto corpus = preprocess_corpus(docs, config, stopwords);
    if (corpus.vocabulary.empty()) {
        throw Error("no clusterable terms");
    }

    LingoRun run;
    const auto phrases = discover_frequent_complete_phrases(
        corpus.documents, PhraseMinerOptions{config.term_frequency_threshold, config.max_phrase_length});
    run.phrase_count = phrases.size();

    const auto counts = count_terms(corpus.documents, corpus.vocabulary);
    const WeightingScheme scheme{config.strategy == Strategy::lsi_bm25 ? Weighting::bm25 : Weighting::tfidf,
                                 config.k1, config.b};
    const auto a = scheme.kind == Weighting::bm25
                       ? bm25_weight_matrix(counts, Bm25Params::from_counts(counts, config.k1, config.b))
                       : tfidf_matrix(counts);

    const auto factors = svd(a.weights);
    run.rank = factors.rank;

    std::vector<LabelCandidate> labels;
    if (factors.rank > 0) {
        run.truncation = select_k(factors, config.candidate_label_threshold);
        auto candidates = phrases;
        auto singles = single_term_candidates(corpus, phrases);
        candidates.insert(candidates.end(), singles.begin(), singles.end());
        const auto p = build_phrase_matrix(candidates, corpus.vocabulary, counts, scheme);
        const auto induced = induce_label_candidates(factors, run.truncation.k, p);
        run.candidate_count = induced.size();
        labels = dedupe_labels(induced, config.label_similarity_threshold);
    }
    run.label_count = labels.size();

    if (labels.empty()) {
        run.contents.similarity = Eigen::MatrixXd(0, a.docs());
        run.contents.unassigned = a.doc_ids;
        std::sort(run.contents.unassigned.begin(), run.contents.unassigned.end());
    } else {
        run.contents = discover_contents(config.strategy, label_matrix(labels), a, factors, run.truncation.k,
                                         config.snippet_assignment_threshold);
    }
    run.result = form_final_clusters(labels, run.contents, config, docs.size());
    return run;
}

ClusteringResult run_lingo(std::span<const Document> docs, const LingoConfig& config, const StopWords& stopwords)
{
    return run_lingo_detailed(docs, config, stopwords).result;
}

ClusteringResult run_lingo(std::span<const Document> docs, const LingoConfig& config)
{
    const auto stopwords = config.stopword_list_path.empty() ? StopWords::builtin_english()
                                                             : StopWords::from_file(config.stopword_list_path);
    return run_lingo(docs, config, stopwords);
}

} // namespace lingo
