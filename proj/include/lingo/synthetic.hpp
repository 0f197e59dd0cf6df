#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lingo/types.hpp"

namespace lingo {

/// Planted-topic corpus generator. Topics get disjoint vocabularies. Each
/// synonym pair splits a topic's documents: one half writes the first word,
/// the other half the second, and a few bridge documents use both so the two
/// words co-occur.
struct SyntheticCorpusSpec {
    int topics = 3;
    int docs_per_topic = 30;
    int synonym_pairs = 5;
    std::uint64_t seed = 7;
};

std::vector<Document> generate_corpus(const SyntheticCorpusSpec& spec);
// Topic of each generated document, indexed by id - 1.
std::vector<int> generated_topics(const SyntheticCorpusSpec& spec);

// Writes doc_0001.txt, doc_0002.txt, ... into dir.
void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& dir);

} // namespace lingo
