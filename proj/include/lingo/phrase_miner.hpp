#pragma once

#include <span>
#include <vector>

#include "lingo/preprocess.hpp"
#include "lingo/types.hpp"

namespace lingo {

struct PhraseMinerOptions {
    int frequency_threshold = 2;
    int max_phrase_length = 8;
};

/// Frequent complete phrases over stems. A phrase is retained when
///  - it occurs (by starting position, overlaps allowed) more than
///    frequency_threshold times inside sentences,
///  - no single token precedes every occurrence and no single token follows
///    every occurrence,
///  - it neither begins nor ends with a stop word, and
///  - it is at most max_phrase_length tokens long.
/// Output is sorted by term sequence.
std::vector<Phrase> discover_frequent_complete_phrases(std::span<const PreprocessedDocument> docs,
                                                       const PhraseMinerOptions& options);

} // namespace lingo
