#include "lexevo/index.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <unordered_set>

#include "lexevo/errors.hpp"

namespace lexevo {

namespace {

constexpr char kIndexMagic[8] = {'L', 'X', 'E', 'V', 'I', 'D', 'X', '\0'};
constexpr uint32_t kIndexVersion = 1;

template <typename T>
void write_pod(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw ParseError("truncated index file");
    return value;
}

void write_string(std::ostream& out, const std::string& s) {
    write_pod<uint32_t>(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
    uint32_t len = read_pod<uint32_t>(in);
    std::string s(len, '\0');
    in.read(s.data(), len);
    if (!in) throw ParseError("truncated index file");
    return s;
}

} // namespace

uint32_t ChannelIndex::tf(const std::string& term, uint32_t ordinal) const {
    auto it = postings.find(term);
    if (it == postings.end()) return 0;
    const auto& list = it->second;
    auto pos = std::lower_bound(list.begin(), list.end(), ordinal,
                                [](const Posting& p, uint32_t ord) { return p.doc_ordinal < ord; });
    if (pos == list.end() || pos->doc_ordinal != ordinal) return 0;
    return pos->tf;
}

ChannelIndex build_index(const std::vector<Document>& documents, TokenChannel channel) {
    const auto start = std::chrono::steady_clock::now();

    ChannelIndex index;
    index.channel = channel;
    index.doc_ids.reserve(documents.size());
    index.doc_lengths.reserve(documents.size());

    std::unordered_set<std::string> seen_ids;
    seen_ids.reserve(documents.size());

    std::unordered_map<std::string, uint32_t> doc_tf;
    for (uint32_t ordinal = 0; ordinal < documents.size(); ++ordinal) {
        const Document& doc = documents[ordinal];
        if (doc.id.empty()) throw ValidationError("document at ordinal " + std::to_string(ordinal) + " has an empty id");
        if (!seen_ids.insert(doc.id).second)
            throw ValidationError("duplicate document id `" + doc.id + "`");

        TokenStream stream = tokenize_channel(doc.index_text(), channel);
        index.doc_ids.push_back(doc.id);
        index.doc_lengths.push_back(static_cast<uint32_t>(stream.tokens.size()));
        index.stats.total_tokens += stream.tokens.size();

        doc_tf.clear();
        for (auto& tok : stream.tokens) ++doc_tf[tok];
        for (auto& [term, tf] : doc_tf) {
            index.postings[term].push_back(Posting{ordinal, tf});
            ++index.stats.df[term];
            index.stats.ctf[term] += tf;
        }
    }

    index.stats.n_docs = documents.size();
    index.stats.avgdl = index.stats.n_docs == 0
                            ? 0.0
                            : static_cast<double>(index.stats.total_tokens) /
                                  static_cast<double>(index.stats.n_docs);

    // postings were appended in ascending ordinal order already; keep the
    // invariant explicit for serialization determinism
    for (auto& [term, list] : index.postings) {
        (void)term;
        std::sort(list.begin(), list.end(),
                  [](const Posting& a, const Posting& b) { return a.doc_ordinal < b.doc_ordinal; });
    }

    index.build_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return index;
}

QueryRep represent_query(std::string_view text, const std::set<TokenChannel>& channels) {
    QueryRep rep;
    TokenStream base = tokenize_base(text);
    for (TokenChannel channel : channels) {
        const size_t slot = static_cast<size_t>(channel);
        rep.active[slot] = true;
        TokenStream stream;
        switch (channel) {
        case TokenChannel::base: stream = base; break;
        case TokenChannel::prefix: stream = tokenize_prefix(base); break;
        case TokenChannel::bigram: stream = tokenize_bigram(base); break;
        case TokenChannel::micro: stream = tokenize_micro(base); break;
        }
        for (auto& tok : stream.tokens) ++rep.terms[slot][tok];
    }
    return rep;
}

std::vector<uint32_t> candidate_docs(const ChannelIndex& index, const QueryRep& rep) {
    if (!rep.has_channel(index.channel))
        throw ValidationError("query representation lacks channel `" +
                              std::string(channel_name(index.channel)) + "`");
    std::vector<uint32_t> out;
    for (const auto& [term, qtf] : rep.channel_terms(index.channel)) {
        (void)qtf;
        auto it = index.postings.find(term);
        if (it == index.postings.end()) continue;
        for (const Posting& p : it->second) out.push_back(p.doc_ordinal);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void save_index(const ChannelIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());

    out.write(kIndexMagic, sizeof(kIndexMagic));
    write_pod<uint32_t>(out, kIndexVersion);
    write_pod<uint8_t>(out, static_cast<uint8_t>(index.channel));
    write_pod<uint64_t>(out, index.stats.n_docs);
    for (size_t i = 0; i < index.doc_ids.size(); ++i) {
        write_string(out, index.doc_ids[i]);
        write_pod<uint32_t>(out, index.doc_lengths[i]);
    }

    std::vector<const std::string*> terms;
    terms.reserve(index.postings.size());
    for (const auto& [term, list] : index.postings) {
        (void)list;
        terms.push_back(&term);
    }
    std::sort(terms.begin(), terms.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });

    write_pod<uint64_t>(out, terms.size());
    for (const std::string* term : terms) {
        write_string(out, *term);
        const auto& list = index.postings.at(*term);
        write_pod<uint32_t>(out, static_cast<uint32_t>(list.size()));
        for (const Posting& p : list) {
            write_pod<uint32_t>(out, p.doc_ordinal);
            write_pod<uint32_t>(out, p.tf);
        }
    }
    if (!out) throw IoError("write failed: " + path.string());
}

ChannelIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());

    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kIndexMagic, sizeof(magic)) != 0)
        throw ParseError("not an index file: " + path.string());
    uint32_t version = read_pod<uint32_t>(in);
    if (version != kIndexVersion)
        throw ParseError("unsupported index version " + std::to_string(version));

    ChannelIndex index;
    index.channel = static_cast<TokenChannel>(read_pod<uint8_t>(in));
    uint64_t n_docs = read_pod<uint64_t>(in);
    index.doc_ids.reserve(n_docs);
    index.doc_lengths.reserve(n_docs);
    for (uint64_t i = 0; i < n_docs; ++i) {
        index.doc_ids.push_back(read_string(in));
        uint32_t len = read_pod<uint32_t>(in);
        index.doc_lengths.push_back(len);
        index.stats.total_tokens += len;
    }
    index.stats.n_docs = n_docs;
    index.stats.avgdl =
        n_docs == 0 ? 0.0 : static_cast<double>(index.stats.total_tokens) / static_cast<double>(n_docs);

    uint64_t vocab = read_pod<uint64_t>(in);
    for (uint64_t t = 0; t < vocab; ++t) {
        std::string term = read_string(in);
        uint32_t count = read_pod<uint32_t>(in);
        std::vector<Posting> list;
        list.reserve(count);
        uint64_t ctf = 0;
        for (uint32_t i = 0; i < count; ++i) {
            Posting p;
            p.doc_ordinal = read_pod<uint32_t>(in);
            p.tf = read_pod<uint32_t>(in);
            ctf += p.tf;
            list.push_back(p);
        }
        index.stats.df[term] = count;
        index.stats.ctf[term] = ctf;
        index.postings.emplace(std::move(term), std::move(list));
    }
    return index;
}

} // namespace lexevo
