#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lingo/types.hpp"

namespace lingo {

struct Token {
    std::string surface; // lowercased
    std::string stem;
    bool is_stopword = false;

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct PreprocessedDocument {
    int doc_id = 0;
    std::vector<Sentence> sentences;

    std::size_t token_count() const;
};

class StopWords {
  public:
    StopWords() = default;
    explicit StopWords(std::unordered_set<std::string> words) : words_(std::move(words)) {}

    static StopWords builtin_english();
    // One lowercase word per line; '#' starts a comment.
    static StopWords from_file(const std::filesystem::path& path);
    static StopWords parse(std::string_view text);

    bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
    std::size_t size() const { return words_.size(); }

  private:
    std::unordered_set<std::string> words_;
};

/// Terms eligible for the term-document matrix, indexed in lexicographic stem
/// order.
class Vocabulary {
  public:
    struct Entry {
        std::string stem;
        int corpus_frequency = 0;
        int document_frequency = 0;
    };

    Vocabulary() = default;
    explicit Vocabulary(std::vector<Entry> entries); // entries must be sorted by stem

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<std::size_t> index_of(std::string_view stem) const;

  private:
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Splits text into sentences of lowercased maximal alphanumeric runs.
/// Sentences end at '.', '!', '?' and newlines. Bytes >= 0x80 (UTF-8
/// sequences) count as word characters.
std::vector<std::vector<std::string>> tokenize(std::string_view text);

std::string stem_token(std::string_view surface);

PreprocessedDocument preprocess_document(const Document& doc, const StopWords& stopwords);

struct PreprocessedCorpus {
    std::vector<PreprocessedDocument> documents;
    Vocabulary vocabulary;
};

Vocabulary build_vocabulary(std::span<const PreprocessedDocument> docs, int term_frequency_threshold);

PreprocessedCorpus preprocess_corpus(std::span<const Document> docs, const LingoConfig& config);
PreprocessedCorpus preprocess_corpus(std::span<const Document> docs, const LingoConfig& config,
                                     const StopWords& stopwords);

} // namespace lingo
