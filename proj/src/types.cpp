#include "lingo/types.hpp"

#include <cmath>
#include <string>

#include "lingo/error.hpp"

namespace lingo {

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::vsm:
        return "vsm";
    case Strategy::lsi:
        return "lsi";
    case Strategy::lsi_bm25:
        return "lsi-bm25";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name)
{
    if (name == "vsm") {
        return Strategy::vsm;
    }
    if (name == "lsi") {
        return Strategy::lsi;
    }
    if (name == "lsi-bm25") {
        return Strategy::lsi_bm25;
    }
    throw Error("unknown strategy '" + std::string(name) + "', expected one of {vsm, lsi, lsi-bm25}");
}

namespace {

void require(bool ok, const char* field, const char* range)
{
    if (!ok) {
        throw Error(std::string(field) + " must be in " + range);
    }
}

} // namespace

void LingoConfig::validate() const
{
    require(term_frequency_threshold >= 0, "term_frequency_threshold", "[0,inf)");
    require(candidate_label_threshold > 0.0 && candidate_label_threshold <= 1.0, "candidate_label_threshold",
            "(0,1]");
    require(label_similarity_threshold >= 0.0 && label_similarity_threshold <= 1.0, "label_similarity_threshold",
            "[0,1]");
    require(snippet_assignment_threshold >= 0.0 && snippet_assignment_threshold <= 1.0,
            "snippet_assignment_threshold", "[0,1]");
    require(std::isfinite(k1) && k1 >= 0.0, "k1", "[0,inf)");
    require(b >= 0.0 && b <= 1.0, "b", "[0,1]");
    require(max_phrase_length >= 1, "max_phrase_length", "[1,inf)");
}

} // namespace lingo
