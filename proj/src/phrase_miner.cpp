#include "lingo/phrase_miner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lingo/suffix_array.hpp"

namespace lingo {

namespace {

struct Position {
    const Token* token = nullptr;
    std::size_t room = 0;        // tokens left in the sentence, this one included
    bool sentence_start = false;
};

} // namespace

std::vector<Phrase> discover_frequent_complete_phrases(std::span<const PreprocessedDocument> docs,
                                                       const PhraseMinerOptions& options)
{
    // Stop and content tokens with equal stems get distinct ids.
    std::map<std::pair<std::string, bool>, std::int64_t> ids;
    for (const auto& doc : docs) {
        for (const auto& sentence : doc.sentences) {
            for (const auto& tok : sentence) {
                ids.emplace(std::pair{tok.stem, tok.is_stopword}, 0);
            }
        }
    }
    std::int64_t next_id = 0;
    for (auto& [key, id] : ids) {
        id = next_id++;
    }

    std::vector<std::int64_t> seq;
    std::vector<Position> positions;
    std::int64_t sentinel = -1;
    for (const auto& doc : docs) {
        for (const auto& sentence : doc.sentences) {
            if (sentence.empty()) {
                continue;
            }
            for (std::size_t i = 0; i < sentence.size(); ++i) {
                seq.push_back(ids.at({sentence[i].stem, sentence[i].is_stopword}));
                positions.push_back({&sentence[i], sentence.size() - i, i == 0});
            }
            seq.push_back(sentinel--);
            positions.push_back({});
        }
    }

    const auto sa = build_suffix_array(seq);
    const std::size_t n = seq.size();
    const auto threshold = static_cast<std::size_t>(std::max(0, options.frequency_threshold));
    const auto max_len = static_cast<std::size_t>(std::max(1, options.max_phrase_length));

    std::vector<Phrase> phrases;
    for (std::size_t len = 1; len <= max_len; ++len) {
        bool any_frequent = false;
        std::size_t begin = 0;
        while (begin < n) {
            std::size_t end = begin + 1;
            while (end < n && sa.lcp[end] >= len) {
                ++end;
            }
            const std::size_t first = sa.order[begin];
            const std::size_t count = end - begin;
            if (positions[first].room >= len && count > threshold) {
                any_frequent = true;
                const Token& head = *positions[first].token;
                const Token& tail = *positions[first + len - 1].token;
                bool left_complete = false;
                bool right_complete = false;
                std::int64_t left_token = 0;
                std::int64_t right_token = 0;
                for (std::size_t i = begin; i < end; ++i) {
                    const std::size_t p = sa.order[i];
                    if (!left_complete) {
                        if (positions[p].sentence_start) {
                            left_complete = true;
                        } else if (i == begin) {
                            left_token = seq[p - 1];
                        } else if (seq[p - 1] != left_token) {
                            left_complete = true;
                        }
                    }
                    if (!right_complete) {
                        if (positions[p].room == len) {
                            right_complete = true;
                        } else if (i == begin) {
                            right_token = seq[p + len];
                        } else if (seq[p + len] != right_token) {
                            right_complete = true;
                        }
                    }
                }
                if (left_complete && right_complete && !head.is_stopword && !tail.is_stopword) {
                    Phrase phrase;
                    phrase.occurrence_count = static_cast<int>(count);
                    for (std::size_t t = 0; t < len; ++t) {
                        phrase.terms.push_back(positions[first + t].token->stem);
                    }
                    std::map<std::string, int> surfaces;
                    for (std::size_t i = begin; i < end; ++i) {
                        const std::size_t p = sa.order[i];
                        std::string s;
                        for (std::size_t t = 0; t < len; ++t) {
                            if (t) {
                                s += ' ';
                            }
                            s += positions[p + t].token->surface;
                        }
                        ++surfaces[s];
                    }
                    // first maximum in lexicographic order
                    phrase.surface_form =
                        std::max_element(surfaces.begin(), surfaces.end(), [](const auto& a, const auto& b) {
                            return a.second < b.second;
                        })->first;
                    phrases.push_back(std::move(phrase));
                }
            }
            begin = end;
        }
        // extending a phrase never raises its count
        if (!any_frequent) {
            break;
        }
    }
    std::sort(phrases.begin(), phrases.end(), [](const Phrase& a, const Phrase& b) { return a.terms < b.terms; });
    return phrases;
}

} // namespace lingo
