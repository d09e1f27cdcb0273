#include "lexevo/corpus_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "lexevo/errors.hpp"

namespace lexevo {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    return in;
}

[[noreturn]] void line_error(const std::filesystem::path& path, size_t line_no, const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

std::string require_string_field(const nlohmann::json& obj, const char* key,
                                 const std::filesystem::path& path, size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) line_error(path, line_no, std::string("missing field `") + key + "`");
    if (!it->is_string()) line_error(path, line_no, std::string("field `") + key + "` is not a string");
    return it->get<std::string>();
}

} // namespace

bool is_valid_utf8(std::string_view data) {
    size_t i = 0;
    const size_t n = data.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(data[i]);
        size_t len;
        uint32_t cp;
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
        if (i + len > n) return false;
        for (size_t k = 1; k < len; ++k) {
            unsigned char cc = static_cast<unsigned char>(data[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // reject overlong encodings, surrogates, and out-of-range code points
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
            return false;
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += len;
    }
    return true;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<Document> docs;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!is_valid_utf8(line)) line_error(path, line_no, "invalid UTF-8");
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            line_error(path, line_no, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object()) line_error(path, line_no, "line is not a JSON object");
        Document doc;
        doc.id = require_string_field(obj, "_id", path, line_no);
        if (doc.id.empty()) line_error(path, line_no, "empty `_id`");
        doc.text = require_string_field(obj, "text", path, line_no);
        if (auto it = obj.find("title"); it != obj.end() && it->is_string())
            doc.title = it->get<std::string>();
        if (!seen_ids.insert(doc.id).second)
            line_error(path, line_no, "duplicate document id `" + doc.id + "`");
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<Query> load_queries(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<Query> queries;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!is_valid_utf8(line)) line_error(path, line_no, "invalid UTF-8");
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            line_error(path, line_no, std::string("malformed JSON: ") + e.what());
        }
        Query q;
        q.id = require_string_field(obj, "_id", path, line_no);
        if (q.id.empty()) line_error(path, line_no, "empty `_id`");
        q.text = require_string_field(obj, "text", path, line_no);
        if (!seen_ids.insert(q.id).second)
            line_error(path, line_no, "duplicate query id `" + q.id + "`");
        queries.push_back(std::move(q));
    }
    return queries;
}

std::vector<QrelEntry> load_qrels(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::istringstream hs(line);
        std::string c1, c2, c3;
        std::getline(hs, c1, '\t');
        std::getline(hs, c2, '\t');
        std::getline(hs, c3, '\t');
        if (c1 != "query-id" || c2 != "corpus-id" || c3 != "score")
            throw ParseError(path.string() + ": expected header `query-id\\tcorpus-id\\tscore`, got `" +
                             line + "`");
    }
    std::vector<QrelEntry> entries;
    std::unordered_set<std::string> seen_pairs;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!is_valid_utf8(line)) line_error(path, line_no, "invalid UTF-8");
        std::istringstream ls(line);
        QrelEntry e;
        std::string grade_str;
        if (!std::getline(ls, e.query_id, '\t') || !std::getline(ls, e.doc_id, '\t') ||
            !std::getline(ls, grade_str, '\t'))
            line_error(path, line_no, "expected three tab-separated columns");
        if (e.query_id.empty() || e.doc_id.empty()) line_error(path, line_no, "empty id column");
        try {
            size_t pos = 0;
            e.grade = std::stoi(grade_str, &pos);
            if (pos != grade_str.size()) throw std::invalid_argument(grade_str);
        } catch (const std::exception&) {
            line_error(path, line_no, "grade `" + grade_str + "` is not an integer");
        }
        if (e.grade < 0) line_error(path, line_no, "negative grade");
        if (!seen_pairs.insert(e.query_id + "\t" + e.doc_id).second)
            line_error(path, line_no, "duplicate (query, doc) pair");
        entries.push_back(std::move(e));
    }
    return entries;
}

Dataset load_dataset(const std::string& name, const std::filesystem::path& corpus_path,
                     const std::filesystem::path& queries_path,
                     const std::filesystem::path& qrels_path) {
    Dataset ds;
    ds.name = name;
    ds.documents = load_corpus(corpus_path);
    ds.queries = load_queries(queries_path);
    ds.qrels = load_qrels(qrels_path);
    std::unordered_set<std::string> query_ids;
    for (const auto& q : ds.queries) query_ids.insert(q.id);
    for (const auto& e : ds.qrels) {
        if (!query_ids.count(e.query_id))
            throw ValidationError("dataset " + name + ": qrel query id `" + e.query_id +
                                  "` has no matching query");
    }
    return ds;
}

void write_run(const ScoredRun& run, const std::string& tag, const std::filesystem::path& path,
               std::optional<size_t> cutoff) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char score_buf[64];
    for (const auto& qr : run.queries) {
        size_t limit = qr.docs.size();
        if (cutoff) limit = std::min(limit, *cutoff);
        for (size_t i = 0; i < limit; ++i) {
            std::snprintf(score_buf, sizeof(score_buf), "%.9g", qr.docs[i].score);
            out << qr.query_id << " Q0 " << qr.docs[i].doc_id << " " << (i + 1) << " " << score_buf
                << " " << tag << "\n";
        }
    }
    if (!out) throw IoError("write failed: " + path.string());
}

ScoredRun read_run(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    // query id -> (rank -> doc entry); preserves first-seen query order
    std::vector<std::string> order;
    std::unordered_map<std::string, std::map<long, ScoredDoc>> per_query;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string qid, q0, docid, rank_str, score_str, tag;
        if (!(ls >> qid >> q0 >> docid >> rank_str >> score_str >> tag))
            line_error(path, line_no, "expected six whitespace-separated columns");
        long rank = 0;
        double score = 0.0;
        try {
            rank = std::stol(rank_str);
            score = std::stod(score_str);
        } catch (const std::exception&) {
            line_error(path, line_no, "bad rank or score");
        }
        auto [it, inserted] = per_query.try_emplace(qid);
        if (inserted) order.push_back(qid);
        it->second[rank] = ScoredDoc{docid, score};
    }
    ScoredRun run;
    for (const auto& qid : order) {
        QueryRanking qr;
        qr.query_id = qid;
        for (auto& [rank, doc] : per_query[qid]) qr.docs.push_back(std::move(doc));
        run.queries.push_back(std::move(qr));
    }
    return run;
}

} // namespace lexevo
