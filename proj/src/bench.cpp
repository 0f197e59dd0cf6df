#include "lingo/bench.hpp"

#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "lingo/corpus_io.hpp"
#include "lingo/error.hpp"
#include "lingo/lingo.hpp"

namespace lingo {

StrategySummary summarize(const ClusteringResult& result)
{
    StrategySummary s;
    s.cluster_count = result.clusters.size();
    std::set<int> assigned;
    for (const auto& c : result.clusters) {
        assigned.insert(c.members.begin(), c.members.end());
        s.total_score += c.score;
    }
    s.assigned_doc_count = assigned.size();
    s.others_count = result.others.size();
    return s;
}

ComparisonReport compare_strategies(std::span<const Document> docs, const LingoConfig& config,
                                    std::span<const Strategy> strategies, const StopWords& stopwords,
                                    std::string corpus_name)
{
    if (strategies.empty()) {
        throw Error("compare_strategies: no strategies given");
    }
    std::vector<std::future<ClusteringResult>> pending;
    pending.reserve(strategies.size());
    for (const auto strategy : strategies) {
        auto c = config;
        c.strategy = strategy;
        pending.push_back(std::async(std::launch::async, [docs, c, &stopwords] { return run_lingo(docs, c, stopwords); }));
    }
    ComparisonReport report;
    report.corpus_name = std::move(corpus_name);
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        auto result = pending[i].get();
        auto summary = summarize(result);
        report.runs.push_back(StrategyRun{strategies[i], std::move(result), summary});
    }
    return report;
}

std::string render_comparison_csv(const ComparisonReport& report)
{
    std::string out = "strategy,cluster_id,size,score\n";
    for (const auto& run : report.runs) {
        const std::string name(to_string(run.strategy));
        for (std::size_t i = 0; i < run.result.clusters.size(); ++i) {
            const auto& c = run.result.clusters[i];
            out += name + "," + std::to_string(i + 1) + "," + std::to_string(c.members.size()) + "," +
                   format_score_exact(c.score) + "\n";
        }
    }
    for (const auto& run : report.runs) {
        out += std::string(to_string(run.strategy)) + ",TOTAL," + std::to_string(run.summary.assigned_doc_count) +
               "," + std::to_string(run.summary.others_count) + "," + format_score_exact(run.summary.total_score) +
               "\n";
    }
    return out;
}

void emit_comparison_csv(const ComparisonReport& report, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << render_comparison_csv(report);
    out.flush();
    if (!out) {
        throw Error("I/O error writing " + path.string());
    }
}

std::vector<ComparisonRow> parse_comparison_csv(const std::string& text)
{
    std::vector<ComparisonRow> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 4) {
            continue;
        }
        rows.push_back(ComparisonRow{fields[0], std::stoi(fields[1]), std::stoul(fields[2]), std::stod(fields[3])});
    }
    return rows;
}

} // namespace lingo
