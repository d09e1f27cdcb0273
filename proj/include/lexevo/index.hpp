#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexevo/corpus_io.hpp"
#include "lexevo/tokenize.hpp"

namespace lexevo {

struct Posting {
    uint32_t doc_ordinal = 0;
    uint32_t tf = 0; // always >= 1
};

struct CollectionStats {
    uint64_t n_docs = 0;
    double avgdl = 0.0; // total_tokens / n_docs, 0 for an empty corpus
    uint64_t total_tokens = 0;
    std::unordered_map<std::string, uint32_t> df;
    std::unordered_map<std::string, uint64_t> ctf;
};

/// Inverted index over one token channel. Postings lists are sorted by
/// ascending doc ordinal; ordinals index into `doc_ids`/`doc_lengths` in
/// corpus order.
struct ChannelIndex {
    TokenChannel channel = TokenChannel::base;
    std::vector<std::string> doc_ids;
    std::vector<uint32_t> doc_lengths; // in channel tokens
    std::unordered_map<std::string, std::vector<Posting>> postings;
    CollectionStats stats;
    double build_millis = 0.0; // wall-clock build time, not serialized

    uint32_t df(const std::string& term) const {
        auto it = stats.df.find(term);
        return it == stats.df.end() ? 0 : it->second;
    }
    uint64_t ctf(const std::string& term) const {
        auto it = stats.ctf.find(term);
        return it == stats.ctf.end() ? 0 : it->second;
    }
    /// Term frequency of `term` in the document at `ordinal` (0 when absent).
    uint32_t tf(const std::string& term, uint32_t ordinal) const;
};

/// Per-channel query term multisets (term -> qtf). Sorted maps keep scoring
/// iteration order deterministic.
struct QueryRep {
    std::array<std::map<std::string, uint32_t>, kChannelCount> terms;
    std::array<bool, kChannelCount> active{};

    const std::map<std::string, uint32_t>& channel_terms(TokenChannel c) const {
        return terms[static_cast<size_t>(c)];
    }
    bool has_channel(TokenChannel c) const { return active[static_cast<size_t>(c)]; }
};

/// Build a channel index over `documents` (unique ids required). Documents
/// are indexed over `title + " " + text`. An empty corpus yields N=0 and
/// avgdl=0.
ChannelIndex build_index(const std::vector<Document>& documents, TokenChannel channel);

/// Tokenize `text` into the requested channels and count term frequencies.
QueryRep represent_query(std::string_view text, const std::set<TokenChannel>& channels);

/// All documents containing at least one query term in this channel, as a
/// sorted ordinal list.
std::vector<uint32_t> candidate_docs(const ChannelIndex& index, const QueryRep& rep);

/// Binary index serialization. The format is internal and versioned; a given
/// corpus always serializes to identical bytes.
void save_index(const ChannelIndex& index, const std::filesystem::path& path);
ChannelIndex load_index(const std::filesystem::path& path);

} // namespace lexevo
