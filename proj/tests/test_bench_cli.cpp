#include <doctest.h>

#include <sstream>

#include "lingo/bench.hpp"
#include "lingo/cli.hpp"
#include "lingo/corpus_io.hpp"
#include "lingo/lingo.hpp"
#include "lingo/synthetic.hpp"
#include "test_support.hpp"

using namespace lingo;
using lingo::testing::read_file;
using lingo::testing::TempDir;
using lingo::testing::write_file;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> list_files(const std::filesystem::path& dir)
{
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        names.push_back(e.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace

TEST_CASE("summaries are derived from results")
{
    ClusteringResult r;
    r.corpus_size = 6;
    r.clusters = {Cluster{{}, {1, 2, 3}, 2.5}, Cluster{{}, {3, 4}, 1.0}};
    r.others = {5, 6};
    const auto s = summarize(r);
    CHECK(s.cluster_count == 2);
    CHECK(s.assigned_doc_count == 4);
    CHECK(s.others_count == 2);
    CHECK(s.total_score == 3.5);
    CHECK(s.assigned_doc_count + s.others_count == r.corpus_size);
}

TEST_CASE("compare with one strategy equals a lone run")
{
    const auto docs = generate_corpus({3, 10, 3, 5});
    const auto sw = StopWords::builtin_english();
    LingoConfig config;
    const std::vector<Strategy> one{Strategy::lsi};
    const auto report = compare_strategies(docs, config, one, sw, "synthetic");
    REQUIRE(report.runs.size() == 1);
    config.strategy = Strategy::lsi;
    const auto alone = run_lingo(docs, config, sw);
    CHECK(result_to_json(report.runs[0].result).dump() == result_to_json(alone).dump());
    CHECK(report.runs[0].summary.cluster_count == summarize(alone).cluster_count);
    CHECK(report.corpus_name == "synthetic");
}

TEST_CASE("comparison CSV layout and round trip")
{
    const auto docs = generate_corpus({3, 30, 5, 7});
    const std::vector<Strategy> strategies{Strategy::vsm, Strategy::lsi};
    const auto report = compare_strategies(docs, LingoConfig{}, strategies, StopWords::builtin_english());
    const auto csv = render_comparison_csv(report);
    CHECK(csv.starts_with("strategy,cluster_id,size,score\n"));

    const auto rows = parse_comparison_csv(csv);
    std::size_t expected_rows = 0;
    for (const auto& run : report.runs) {
        expected_rows += run.result.clusters.size();
    }
    REQUIRE(rows.size() == expected_rows);
    std::size_t i = 0;
    for (const auto& run : report.runs) {
        for (std::size_t c = 0; c < run.result.clusters.size(); ++c, ++i) {
            CHECK(rows[i].strategy == to_string(run.strategy));
            CHECK(rows[i].cluster_id == static_cast<int>(c) + 1);
            CHECK(rows[i].size == run.result.clusters[c].members.size());
            CHECK(rows[i].score == run.result.clusters[c].score); // exact
        }
    }
    // one summary row per strategy
    std::size_t totals = 0;
    for (std::size_t pos = csv.find(",TOTAL,"); pos != std::string::npos; pos = csv.find(",TOTAL,", pos + 1)) {
        ++totals;
    }
    CHECK(totals == 2);
    CHECK(report.runs[1].summary.assigned_doc_count > report.runs[0].summary.assigned_doc_count);
}

TEST_CASE("comparison CSV row count for one strategy with two clusters")
{
    ComparisonReport report;
    ClusteringResult r;
    r.clusters = {Cluster{{}, {1}, 0.1}, Cluster{{}, {2}, 0.30000000000000004}};
    report.runs.push_back({Strategy::vsm, r, summarize(r)});
    const auto csv = render_comparison_csv(report);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 2 + summary
    CHECK(csv.find("vsm,2,1,0.30000000000000004\n") != std::string::npos);
    CHECK(csv.find("vsm,TOTAL,2,0,0.4\n") != std::string::npos);
}

TEST_CASE("generator is deterministic and seed-sensitive")
{
    const auto a = generate_corpus({3, 30, 5, 7});
    const auto b = generate_corpus({3, 30, 5, 7});
    const auto c = generate_corpus({3, 30, 5, 8});
    REQUIRE(a.size() == 90);
    bool same = true;
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        same = same && a[i].body == b[i].body;
        differs = differs || a[i].body != c[i].body;
    }
    CHECK(same);
    CHECK(differs);
    const auto topics = generated_topics({3, 30, 5, 7});
    CHECK(topics.size() == 90);
    CHECK(topics.front() == 0);
    CHECK(topics.back() == 2);
}

TEST_CASE("cli cluster happy path")
{
    TempDir dir;
    CHECK(cli({"gen-corpus", "--topics", "3", "--docs-per-topic", "10", "--seed", "7", "--out",
               (dir / "corpus").string()})
              .code == 0);
    const auto run = cli({"cluster", "--input", (dir / "corpus").string(), "--strategy", "lsi", "--out",
                          (dir / "out").string()});
    CHECK(run.code == 0);
    CHECK(list_files(dir / "out") == std::vector<std::string>{"clusters.csv", "clusters.txt", "result.json"});
    const auto result = result_from_json(nlohmann::json::parse(read_file(dir / "out" / "result.json")));
    CHECK(result.config_echo.strategy == Strategy::lsi);
    CHECK(read_file(dir / "out" / "clusters.csv").find(",corpus,") == std::string::npos);
    CHECK(read_file(dir / "out" / "clusters.csv").find("corpus,lsi,1,") != std::string::npos);
}

TEST_CASE("cli config file and compare")
{
    TempDir dir;
    write_file(dir / "c.json", R"({"snippet_assignment_threshold": 0.2})");
    REQUIRE(cli({"gen-corpus", "--docs-per-topic", "12", "--out", (dir / "corpus").string()}).code == 0);
    const auto run = cli({"compare", "--input", (dir / "corpus").string(), "--config", (dir / "c.json").string(),
                          "--strategies", "vsm,lsi,lsi-bm25", "--out", (dir / "cmp").string()});
    CHECK(run.code == 0);
    CHECK(list_files(dir / "cmp") == std::vector<std::string>{"comparison.csv", "lsi", "lsi-bm25", "vsm"});
    const auto result = result_from_json(nlohmann::json::parse(read_file(dir / "cmp" / "lsi" / "result.json")));
    CHECK(result.config_echo.snippet_assignment_threshold == 0.2);
    CHECK(run.out.find("lsi-bm25:") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2")
{
    TempDir dir;
    auto run = cli({"cluster", "--input", dir.path().string(), "--strategy", "bogus", "--out",
                    (dir / "o").string()});
    CHECK(run.code == 2);
    CHECK(run.err.find("{vsm, lsi, lsi-bm25}") != std::string::npos);

    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"cluster", "--input", "x", "--out", "y", "--bogus-flag"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"compare", "--input", "x", "--out", "y", "--strategies", "vsm,nope"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli runtime errors exit 1 with a one-line diagnostic")
{
    TempDir dir;
    const auto run = cli({"cluster", "--input", dir.path().string(), "--out", (dir / "o").string()});
    CHECK(run.code == 1);
    CHECK(run.err.find("empty corpus") != std::string::npos);
    CHECK(std::count(run.err.begin(), run.err.end(), '\n') == 1);
}

TEST_CASE("gen-corpus twice gives byte-identical files")
{
    TempDir dir;
    for (const auto* name : {"a", "b"}) {
        REQUIRE(cli({"gen-corpus", "--topics", "3", "--docs-per-topic", "30", "--seed", "7", "--out",
                     (dir / name).string()})
                    .code == 0);
    }
    const auto files = list_files(dir / "a");
    CHECK(files == list_files(dir / "b"));
    CHECK(files.size() == 90);
    for (const auto& f : files) {
        CHECK(read_file(dir / "a" / f) == read_file(dir / "b" / f));
    }
}
