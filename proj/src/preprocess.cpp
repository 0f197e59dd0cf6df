#include "lingo/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "lingo/error.hpp"
#include "lingo/porter_stemmer.hpp"

namespace lingo {

namespace {

constexpr std::string_view kEnglishStopWords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are", "as", "at",
    "be", "because", "been", "before", "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "down", "during", "each", "few", "for", "from", "further", "had", "has", "have",
    "having", "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into",
    "is", "it", "its", "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of",
    "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own", "same",
    "she", "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them", "themselves",
    "then", "there", "these", "they", "this", "those", "through", "to", "too", "under", "until", "up", "very",
    "was", "we", "were", "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with",
    "would", "you", "your", "yours", "yourself", "yourselves",
};

bool is_word_byte(unsigned char c)
{
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_sentence_break(char c) { return c == '.' || c == '!' || c == '?' || c == '\n'; }

} // namespace

StopWords StopWords::builtin_english()
{
    std::unordered_set<std::string> words;
    for (auto w : kEnglishStopWords) {
        words.emplace(w);
    }
    return StopWords(std::move(words));
}

StopWords StopWords::parse(std::string_view text)
{
    std::unordered_set<std::string> words;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        auto word = line.substr(first, last - first + 1);
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(std::move(word));
    }
    return StopWords(std::move(words));
}

StopWords StopWords::from_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read stop-word list " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::size_t PreprocessedDocument::token_count() const
{
    std::size_t n = 0;
    for (const auto& s : sentences) {
        n += s.size();
    }
    return n;
}

Vocabulary::Vocabulary(std::vector<Entry> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        index_.emplace(entries_[i].stem, i);
    }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view stem) const
{
    if (auto it = index_.find(stem); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<std::vector<std::string>> tokenize(std::string_view text)
{
    std::vector<std::vector<std::string>> sentences;
    std::vector<std::string> current;
    std::string token;
    auto flush_token = [&] {
        if (!token.empty()) {
            current.push_back(std::move(token));
            token.clear();
        }
    };
    auto flush_sentence = [&] {
        flush_token();
        if (!current.empty()) {
            sentences.push_back(std::move(current));
            current.clear();
        }
    };
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (is_word_byte(c)) {
            token += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : ch;
        } else if (is_sentence_break(ch)) {
            flush_sentence();
        } else {
            flush_token();
        }
    }
    flush_sentence();
    return sentences;
}

std::string stem_token(std::string_view surface) { return porter_stem(surface); }

PreprocessedDocument preprocess_document(const Document& doc, const StopWords& stopwords)
{
    PreprocessedDocument out;
    out.doc_id = doc.id;
    auto add = [&](std::string_view text) {
        for (auto& words : tokenize(text)) {
            Sentence sentence;
            sentence.reserve(words.size());
            for (auto& w : words) {
                const bool stop = stopwords.contains(w);
                // stop words are not stemmed so they never collide with content stems
                auto stem = stop ? w : stem_token(w);
                sentence.push_back(Token{std::move(w), std::move(stem), stop});
            }
            out.sentences.push_back(std::move(sentence));
        }
    };
    // the title is its own sentence
    add(doc.title);
    add(doc.body);
    return out;
}

Vocabulary build_vocabulary(std::span<const PreprocessedDocument> docs, int term_frequency_threshold)
{
    struct Counts {
        int corpus = 0;
        int documents = 0;
        int last_doc = -1;
    };
    std::unordered_map<std::string, Counts> counts;
    std::unordered_set<std::string> stop_stems;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& sentence : docs[d].sentences) {
            for (const auto& tok : sentence) {
                if (tok.is_stopword) {
                    stop_stems.insert(tok.stem);
                    continue;
                }
                auto& c = counts[tok.stem];
                ++c.corpus;
                if (c.last_doc != static_cast<int>(d)) {
                    c.last_doc = static_cast<int>(d);
                    ++c.documents;
                }
            }
        }
    }
    std::vector<Vocabulary::Entry> entries;
    for (const auto& [stem, c] : counts) {
        if (c.corpus > term_frequency_threshold && !stop_stems.contains(stem)) {
            entries.push_back({stem, c.corpus, c.documents});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.stem < b.stem; });
    return Vocabulary(std::move(entries));
}

PreprocessedCorpus preprocess_corpus(std::span<const Document> docs, const LingoConfig& config,
                                     const StopWords& stopwords)
{
    if (docs.empty()) {
        throw Error("empty corpus");
    }
    PreprocessedCorpus out;
    out.documents.reserve(docs.size());
    for (const auto& doc : docs) {
        out.documents.push_back(preprocess_document(doc, stopwords));
    }
    out.vocabulary = build_vocabulary(out.documents, config.term_frequency_threshold);
    return out;
}

PreprocessedCorpus preprocess_corpus(std::span<const Document> docs, const LingoConfig& config)
{
    const auto stopwords = config.stopword_list_path.empty() ? StopWords::builtin_english()
                                                             : StopWords::from_file(config.stopword_list_path);
    return preprocess_corpus(docs, config, stopwords);
}

} // namespace lingo
