#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lingo {

/// Suffix array over an integer token sequence. Sentinels are represented as
/// negative values, each distinct, so they sort below all terms and never
/// match one another.
struct SuffixArray {
    std::vector<std::int64_t> tokens;
    std::vector<std::size_t> order; // sa
    std::vector<std::size_t> lcp;   // lcp[i] = common prefix of order[i-1], order[i]; lcp[0] = 0
};

SuffixArray build_suffix_array(std::span<const std::int64_t> tokens);

} // namespace lingo
