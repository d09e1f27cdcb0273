#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexevo {

struct Document {
    std::string id;
    std::string title; // empty when absent
    std::string text;

    /// Text fed to the indexer: `title + " " + text` when a title is present.
    std::string index_text() const {
        if (title.empty()) return text;
        return title + " " + text;
    }
};

struct Query {
    std::string id;
    std::string text;
};

struct QrelEntry {
    std::string query_id;
    std::string doc_id;
    int grade = 0; // relevance judgment, >= 0
};

struct Dataset {
    std::string name;
    std::vector<Document> documents;
    std::vector<Query> queries;
    std::vector<QrelEntry> qrels;
};

/// One ranked document for one query.
struct ScoredDoc {
    std::string doc_id;
    double score = 0.0;
};

/// Ranked results for a set of queries, sorted by descending score with ties
/// broken by ascending doc id.
struct QueryRanking {
    std::string query_id;
    std::vector<ScoredDoc> docs;
};

struct ScoredRun {
    std::vector<QueryRanking> queries;
};

/// Load a BEIR corpus.jsonl file (keys `_id`, optional `title`, `text`).
/// Throws ParseError with the line number on malformed lines or duplicate ids.
std::vector<Document> load_corpus(const std::filesystem::path& path);

/// Load a BEIR queries.jsonl file (keys `_id`, `text`).
std::vector<Query> load_queries(const std::filesystem::path& path);

/// Load a BEIR qrels TSV with header `query-id\tcorpus-id\tscore`.
std::vector<QrelEntry> load_qrels(const std::filesystem::path& path);

/// Load and cross-validate a full dataset. Every qrel query id must appear in
/// the query set; qrels naming unknown doc ids are kept (they still count
/// toward ideal DCG and recall denominators).
Dataset load_dataset(const std::string& name, const std::filesystem::path& corpus_path,
                     const std::filesystem::path& queries_path,
                     const std::filesystem::path& qrels_path);

/// Write a run in TREC six-column format: `qid Q0 docid rank score tag`,
/// ranks starting at 1. With a cutoff, at most `cutoff` rows per query.
void write_run(const ScoredRun& run, const std::string& tag, const std::filesystem::path& path,
               std::optional<size_t> cutoff = std::nullopt);

/// Read a TREC run file back; per-query order follows the rank column.
ScoredRun read_run(const std::filesystem::path& path);

/// True iff `data` is well-formed UTF-8.
bool is_valid_utf8(std::string_view data);

} // namespace lexevo
