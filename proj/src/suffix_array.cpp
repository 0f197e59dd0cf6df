#include "lingo/suffix_array.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace lingo {

SuffixArray build_suffix_array(std::span<const std::int64_t> tokens)
{
    SuffixArray sa;
    sa.tokens.assign(tokens.begin(), tokens.end());
    const std::size_t n = tokens.size();
    if (n == 0) {
        return sa;
    }

    // prefix doubling over dense ranks
    std::vector<std::int64_t> rank(tokens.begin(), tokens.end());
    std::vector<std::int64_t> next(n);
    std::vector<std::size_t>& order = sa.order;
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t h = 1;; h <<= 1) {
        auto key = [&](std::size_t i) {
            const std::int64_t second = i + h < n ? rank[i + h] : std::numeric_limits<std::int64_t>::min();
            return std::pair{rank[i], second};
        };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        next[order[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            next[order[i]] = next[order[i - 1]] + (key(order[i - 1]) < key(order[i]) ? 1 : 0);
        }
        rank.swap(next);
        if (rank[order[n - 1]] == static_cast<std::int64_t>(n - 1) || h >= n) {
            break;
        }
    }

    // Kasai et al.
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) {
        inverse[order[i]] = i;
    }
    sa.lcp.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (inverse[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = order[inverse[i] - 1];
        while (i + h < n && j + h < n && tokens[i + h] == tokens[j + h]) {
            ++h;
        }
        sa.lcp[inverse[i]] = h;
        if (h > 0) {
            --h;
        }
    }
    return sa;
}

} // namespace lingo
