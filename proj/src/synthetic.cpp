#include "lingo/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "lingo/error.hpp"

namespace lingo {

namespace {

// std distributions are implementation-defined; draw from the engine directly
// so corpora are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % n;
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  private:
    std::mt19937_64 engine_;
};

// Consonant-vowel words with vowels a/o/u only: no suffix the stemmer strips.
std::string make_word(Rng& rng, int syllables)
{
    static constexpr std::string_view consonants = "bdfgklmnprtvz";
    static constexpr std::string_view vowels = "aou";
    std::string w;
    for (int i = 0; i < syllables; ++i) {
        w += consonants[rng.below(consonants.size())];
        w += vowels[rng.below(vowels.size())];
    }
    return w;
}

struct TopicVocabulary {
    std::vector<std::string> first;  // one side of each synonym pair
    std::vector<std::string> second; // the other side
};

enum class Role { first, second, bridge };

std::string capitalize(std::string s)
{
    if (!s.empty()) {
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
    }
    return s;
}

// Bridge documents restate both sides of every pair several times, which
// makes the pair's shared direction dominate the spectrum.
constexpr std::uint64_t kBridgePercent = 30;
constexpr int kBridgeRepeats = 3;

constexpr std::string_view kFillers[] = {"the", "of", "and", "for", "with", "in"};

std::string sentence(Rng& rng, const std::vector<std::string>& words)
{
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) {
            s += ' ';
            if (rng.chance(1, 4)) {
                s += kFillers[rng.below(std::size(kFillers))];
                s += ' ';
            }
        }
        s += i == 0 ? capitalize(words[i]) : words[i];
    }
    return s + ".";
}

} // namespace

namespace {

struct Plan {
    std::vector<Document> docs;
    std::vector<int> topics;
};

Plan plan(const SyntheticCorpusSpec& spec)
{
    if (spec.topics < 1 || spec.docs_per_topic < 1 || spec.synonym_pairs < 1) {
        throw Error("synthetic corpus needs topics, docs-per-topic and synonym-pairs >= 1");
    }
    Rng rng(spec.seed);
    std::set<std::string> used;
    auto fresh = [&] {
        while (true) {
            auto w = make_word(rng, 3);
            if (used.insert(w).second) {
                return w;
            }
        }
    };
    std::vector<TopicVocabulary> vocab(static_cast<std::size_t>(spec.topics));
    for (auto& v : vocab) {
        for (int p = 0; p < spec.synonym_pairs; ++p) {
            v.first.push_back(fresh());
            v.second.push_back(fresh());
        }
    }

    Plan out;
    for (int t = 0; t < spec.topics; ++t) {
        const auto& v = vocab[static_cast<std::size_t>(t)];
        for (int i = 0; i < spec.docs_per_topic; ++i) {
            Role role = Role::bridge;
            if (!rng.chance(kBridgePercent, 100)) {
                role = rng.chance(1, 2) ? Role::first : Role::second;
            }
            std::string body;
            auto add = [&](const std::vector<std::string>& side) {
                if (!body.empty()) {
                    body += ' ';
                }
                body += sentence(rng, side);
            };
            if (role == Role::bridge) {
                for (int r = 0; r < kBridgeRepeats; ++r) {
                    add(v.first);
                    add(v.second);
                }
            } else {
                add(role == Role::first ? v.first : v.second);
            }
            body += '\n';
            out.docs.push_back(Document{static_cast<int>(out.docs.size()) + 1, "", std::move(body)});
            out.topics.push_back(t);
        }
    }
    return out;
}

} // namespace

std::vector<Document> generate_corpus(const SyntheticCorpusSpec& spec) { return plan(spec).docs; }

std::vector<int> generated_topics(const SyntheticCorpusSpec& spec) { return plan(spec).topics; }

void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error("cannot create " + dir.string() + ": " + ec.message());
    }
    for (const auto& doc : docs) {
        char name[32];
        std::snprintf(name, sizeof name, "doc_%04d.txt", doc.id);
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + (dir / name).string());
        }
        out << doc.body;
        if (!out) {
            throw Error("I/O error writing " + (dir / name).string());
        }
    }
}

} // namespace lingo
