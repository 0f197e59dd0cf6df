#include "lingo/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "lingo/bench.hpp"
#include "lingo/corpus_io.hpp"
#include "lingo/error.hpp"
#include "lingo/lingo.hpp"
#include "lingo/synthetic.hpp"

namespace lingo {

namespace {

namespace fs = std::filesystem;

struct UsageError : Error {
    using Error::Error;
};

std::string dataset_name(const fs::path& input)
{
    auto p = input;
    if (!p.has_filename()) {
        p = p.parent_path();
    }
    return p.stem().string();
}

LingoConfig resolve_config(const std::string& config_path)
{
    return config_path.empty() ? LingoConfig{} : load_config(config_path);
}

StopWords stopwords_for(const LingoConfig& config)
{
    return config.stopword_list_path.empty() ? StopWords::builtin_english()
                                             : StopWords::from_file(config.stopword_list_path);
}

Strategy strategy_arg(const std::string& name)
{
    try {
        return parse_strategy(name);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<Strategy> strategies_arg(const std::string& list)
{
    std::vector<Strategy> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(strategy_arg(item));
        }
    }
    if (out.empty()) {
        throw UsageError("--strategies needs at least one of {vsm, lsi, lsi-bm25}");
    }
    return out;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"LINGO search-results clustering with VSM, LSI and LSI+BM25 content discovery", "lingo"};
    app.require_subcommand(1);

    std::string input;
    std::string config_path;
    std::string strategy;
    std::string strategies = "vsm,lsi,lsi-bm25";
    std::string out_dir;
    SyntheticCorpusSpec gen;

    auto* cluster = app.add_subcommand("cluster", "Cluster one corpus with one strategy");
    cluster->add_option("--input", input, "Corpus directory or JSON-lines file")->required();
    cluster->add_option("--config", config_path, "JSON config file");
    cluster->add_option("--strategy", strategy, "vsm, lsi or lsi-bm25 (overrides the config)");
    cluster->add_option("--out", out_dir, "Output directory")->required();

    auto* compare = app.add_subcommand("compare", "Run several strategies on one corpus and compare them");
    compare->add_option("--input", input, "Corpus directory or JSON-lines file")->required();
    compare->add_option("--config", config_path, "JSON config file");
    compare->add_option("--strategies", strategies, "Comma-separated strategies")->capture_default_str();
    compare->add_option("--out", out_dir, "Output directory")->required();

    auto* gen_corpus = app.add_subcommand("gen-corpus", "Write a seeded planted-topic corpus");
    gen_corpus->add_option("--topics", gen.topics)->capture_default_str();
    gen_corpus->add_option("--docs-per-topic", gen.docs_per_topic)->capture_default_str();
    gen_corpus->add_option("--synonym-pairs", gen.synonym_pairs)->capture_default_str();
    gen_corpus->add_option("--seed", gen.seed)->capture_default_str();
    gen_corpus->add_option("--out", out_dir, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (cluster->parsed()) {
            auto config = resolve_config(config_path);
            if (!strategy.empty()) {
                config.strategy = strategy_arg(strategy);
            }
            const auto docs = load_corpus(input);
            const auto result = run_lingo(docs, config, stopwords_for(config));
            write_outputs(result, out_dir, dataset_name(input));
            const auto s = summarize(result);
            out << to_string(config.strategy) << ": " << s.cluster_count << " clusters, " << s.assigned_doc_count
                << " assigned, " << s.others_count << " others\n";
        } else if (compare->parsed()) {
            const auto list = strategies_arg(strategies);
            const auto config = resolve_config(config_path);
            const auto docs = load_corpus(input);
            const auto name = dataset_name(input);
            const auto report = compare_strategies(docs, config, list, stopwords_for(config), name);
            for (const auto& run : report.runs) {
                write_outputs(run.result, fs::path(out_dir) / std::string(to_string(run.strategy)), name);
                out << to_string(run.strategy) << ": " << run.summary.cluster_count << " clusters, "
                    << run.summary.assigned_doc_count << " assigned, " << run.summary.others_count << " others, "
                    << "total score " << format_score_scientific(run.summary.total_score) << "\n";
            }
            emit_comparison_csv(report, fs::path(out_dir) / "comparison.csv");
        } else if (gen_corpus->parsed()) {
            const auto docs = generate_corpus(gen);
            write_corpus(docs, out_dir);
            out << "wrote " << docs.size() << " documents to " << out_dir << "\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cli_main(int argc, char** argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return cli_main(args, std::cout, std::cerr);
}

} // namespace lingo
