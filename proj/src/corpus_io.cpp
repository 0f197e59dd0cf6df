#include "lingo/corpus_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lingo/error.hpp"

namespace lingo {

namespace fs = std::filesystem;
using nlohmann::json;

bool is_valid_utf8(std::string_view bytes)
{
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) {
            return false;
        }
        for (std::size_t k = 1; k < len; ++k) {
            const auto cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) {
                return false;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        // overlong forms, surrogates, out of range
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            return false;
        }
        i += len;
    }
    return true;
}

namespace {

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Document> load_directory(const fs::path& dir)
{
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && !name.starts_with(".")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& file : files) {
        auto text = read_file(file);
        if (!is_valid_utf8(text)) {
            throw Error("invalid UTF-8 in " + file.string());
        }
        docs.push_back(Document{static_cast<int>(docs.size()) + 1, "", std::move(text)});
    }
    return docs;
}

std::vector<Document> load_json_lines(const fs::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + file.string());
    }
    std::vector<Document> docs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        const auto where = file.string() + ":" + std::to_string(line_no);
        if (!is_valid_utf8(line)) {
            throw Error("invalid UTF-8 at " + where);
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error("malformed JSON at " + where + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("body") || !j["body"].is_string() ||
            (j.contains("title") && !j["title"].is_string())) {
            throw Error("expected {\"title\": string, \"body\": string} at " + where);
        }
        docs.push_back(Document{static_cast<int>(docs.size()) + 1, j.value("title", std::string{}),
                                j["body"].get<std::string>()});
    }
    return docs;
}

} // namespace

std::vector<Document> load_corpus(const fs::path& path)
{
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        throw Error("corpus path does not exist: " + path.string());
    }
    auto docs = fs::is_directory(path) ? load_directory(path) : load_json_lines(path);
    if (docs.empty()) {
        throw Error("empty corpus: " + path.string());
    }
    return docs;
}

LingoConfig config_from_json(const json& j)
{
    if (!j.is_object()) {
        throw Error("config must be a JSON object");
    }
    LingoConfig c;
    for (const auto& [key, value] : j.items()) {
        auto number = [&]() {
            if (!value.is_number()) {
                throw Error(key + " must be a number");
            }
            return value.get<double>();
        };
        auto integer = [&]() {
            if (!value.is_number_integer() && !value.is_number_unsigned()) {
                throw Error(key + " must be an integer");
            }
            return value.get<long long>();
        };
        auto text = [&]() {
            if (!value.is_string()) {
                throw Error(key + " must be a string");
            }
            return value.get<std::string>();
        };
        if (key == "term_frequency_threshold") {
            const auto v = integer();
            if (v < 0 || v > 1'000'000'000) {
                throw Error("term_frequency_threshold must be in [0,inf)");
            }
            c.term_frequency_threshold = static_cast<int>(v);
        } else if (key == "candidate_label_threshold") {
            c.candidate_label_threshold = number();
        } else if (key == "label_similarity_threshold") {
            c.label_similarity_threshold = number();
        } else if (key == "snippet_assignment_threshold") {
            c.snippet_assignment_threshold = number();
        } else if (key == "k1") {
            c.k1 = number();
        } else if (key == "b") {
            c.b = number();
        } else if (key == "strategy") {
            c.strategy = parse_strategy(text());
        } else if (key == "stopword_list_path") {
            c.stopword_list_path = text();
        } else if (key == "max_phrase_length") {
            const auto v = integer();
            if (v < 1 || v > 1'000'000) {
                throw Error("max_phrase_length must be in [1,inf)");
            }
            c.max_phrase_length = static_cast<int>(v);
        } else {
            throw Error("unknown config field '" + key + "'");
        }
    }
    c.validate();
    return c;
}

LingoConfig load_config(const fs::path& path)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error("malformed config " + path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

json config_to_json(const LingoConfig& c)
{
    return json{
        {"term_frequency_threshold", c.term_frequency_threshold},
        {"candidate_label_threshold", c.candidate_label_threshold},
        {"label_similarity_threshold", c.label_similarity_threshold},
        {"snippet_assignment_threshold", c.snippet_assignment_threshold},
        {"k1", c.k1},
        {"b", c.b},
        {"strategy", std::string(to_string(c.strategy))},
        {"stopword_list_path", c.stopword_list_path},
        {"max_phrase_length", c.max_phrase_length},
    };
}

namespace {

json phrase_to_json(const Phrase& p)
{
    return json{{"terms", p.terms}, {"occurrence_count", p.occurrence_count}, {"surface_form", p.surface_form}};
}

Phrase phrase_from_json(const json& j)
{
    return Phrase{j.at("terms").get<std::vector<std::string>>(), j.at("occurrence_count").get<int>(),
                  j.at("surface_form").get<std::string>()};
}

} // namespace

json result_to_json(const ClusteringResult& r)
{
    json clusters = json::array();
    for (const auto& c : r.clusters) {
        std::vector<double> vec(c.label.term_vector.data(), c.label.term_vector.data() + c.label.term_vector.size());
        clusters.push_back(json{
            {"label",
             {{"phrase", phrase_to_json(c.label.phrase)}, {"score", c.label.score}, {"term_vector", vec}}},
            {"members", c.members},
            {"score", c.score},
        });
    }
    return json{
        {"corpus_size", r.corpus_size},
        {"config", config_to_json(r.config_echo)},
        {"clusters", clusters},
        {"others", r.others},
    };
}

ClusteringResult result_from_json(const json& j)
{
    try {
        ClusteringResult r;
        r.corpus_size = j.at("corpus_size").get<std::size_t>();
        r.config_echo = config_from_json(j.at("config"));
        r.others = j.at("others").get<std::vector<int>>();
        for (const auto& jc : j.at("clusters")) {
            Cluster c;
            const auto& label = jc.at("label");
            c.label.phrase = phrase_from_json(label.at("phrase"));
            c.label.score = label.at("score").get<double>();
            const auto vec = label.at("term_vector").get<std::vector<double>>();
            c.label.term_vector = Eigen::Map<const Eigen::VectorXd>(vec.data(), static_cast<Eigen::Index>(vec.size()));
            c.members = jc.at("members").get<std::vector<int>>();
            c.score = jc.at("score").get<double>();
            r.clusters.push_back(std::move(c));
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed result JSON: ") + e.what());
    }
}

std::string format_score_scientific(double score)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2E", score);
    return buf;
}

std::string format_score_exact(double score)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, score);
    return std::string(buf, end);
}

namespace {

std::string join_ids(const std::vector<int>& ids)
{
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(ids[i]);
    }
    return s;
}

} // namespace

std::string render_table(const ClusteringResult& r)
{
    std::string out = "Serial # | No of Doc's in the cluster | Score of the cluster | Doc's of the cluster\n";
    for (std::size_t i = 0; i < r.clusters.size(); ++i) {
        const auto& c = r.clusters[i];
        out += "Cluster " + std::to_string(i + 1) + " | " + std::to_string(c.members.size()) + " | " +
               format_score_scientific(c.score) + " | " + join_ids(c.members) + "\n";
    }
    out += "Other topics = " + std::to_string(r.others.size()) + " |";
    if (!r.others.empty()) {
        out += " " + join_ids(r.others);
    }
    out += "\n";
    return out;
}

std::string render_csv(const ClusteringResult& r, std::string_view dataset)
{
    const std::string prefix = std::string(dataset) + "," + std::string(to_string(r.config_echo.strategy)) + ",";
    std::string out = "dataset,strategy,cluster_id,size,score\n";
    for (std::size_t i = 0; i < r.clusters.size(); ++i) {
        out += prefix + std::to_string(i + 1) + "," + std::to_string(r.clusters[i].members.size()) + "," +
               format_score_exact(r.clusters[i].score) + "\n";
    }
    out += prefix + "others," + std::to_string(r.others.size()) + ",\n";
    return out;
}

namespace {

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
    out.flush();
    if (!out) {
        throw Error("I/O error writing " + path.string());
    }
}

} // namespace

OutputFiles write_outputs(const ClusteringResult& result, const fs::path& out_dir, std::string_view dataset)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw Error("cannot create " + out_dir.string() + ": " + ec.message());
    }
    OutputFiles files{out_dir / "result.json", out_dir / "clusters.txt", out_dir / "clusters.csv"};
    write_text(files.json, result_to_json(result).dump(2) + "\n");
    write_text(files.table, render_table(result));
    write_text(files.csv, render_csv(result, dataset));
    return files;
}

} // namespace lingo
