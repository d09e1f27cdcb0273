#include "lexevo/scorers.hpp"

#include <algorithm>
#include <cmath>

#include "lexevo/errors.hpp"

namespace lexevo {

namespace {

struct QueryTerm {
    const std::string* term;
    uint32_t qtf;
    uint32_t df;
    uint64_t ctf;
};

std::vector<QueryTerm> base_query_terms(const ChannelIndex& index, const QueryRep& rep) {
    if (!rep.has_channel(TokenChannel::base))
        throw ValidationError("query representation lacks the base channel");
    std::vector<QueryTerm> terms;
    for (const auto& [term, qtf] : rep.channel_terms(TokenChannel::base)) {
        terms.push_back(QueryTerm{&term, qtf, index.df(term), index.ctf(term)});
    }
    return terms;
}

void require_nonempty(const ChannelIndex& index) {
    if (index.stats.n_docs == 0) throw EmptyCorpusError();
}

std::vector<uint32_t> base_candidates(const ChannelIndex& index, const QueryRep& rep) {
    return candidate_docs(index, rep);
}

} // namespace

void sort_ranking(std::vector<ScoredDoc>& docs) {
    std::sort(docs.begin(), docs.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
}

std::vector<ScoredDoc> score_bm25(const ChannelIndex& index, const QueryRep& rep,
                                  const Bm25Params& params) {
    Bm25Params p = params;
    p.delta = 0.0;
    return score_bm25_plus(index, rep, p);
}

std::vector<ScoredDoc> score_bm25_plus(const ChannelIndex& index, const QueryRep& rep,
                                       const Bm25Params& params) {
    require_nonempty(index);
    const auto terms = base_query_terms(index, rep);
    const double n = static_cast<double>(index.stats.n_docs);
    const double avgdl = index.stats.avgdl;

    std::vector<ScoredDoc> result;
    for (uint32_t ordinal : base_candidates(index, rep)) {
        const double dl = static_cast<double>(index.doc_lengths[ordinal]);
        double score = 0.0;
        for (const QueryTerm& qt : terms) {
            if (qt.df == 0) continue;
            const uint32_t tf = index.tf(*qt.term, ordinal);
            if (tf == 0) continue;
            const double idf = std::log((n - qt.df + 0.5) / (qt.df + 0.5));
            const double tf_d = static_cast<double>(tf);
            const double norm = tf_d + params.k1 * (1.0 - params.b + params.b * dl / avgdl);
            const double tf_component = tf_d * (params.k1 + 1.0) / norm;
            score += qt.qtf * idf * (tf_component + params.delta);
        }
        result.push_back(ScoredDoc{index.doc_ids[ordinal], score});
    }
    sort_ranking(result);
    return result;
}

std::vector<ScoredDoc> score_ql_dirichlet(const ChannelIndex& index, const QueryRep& rep,
                                          const QlParams& params) {
    require_nonempty(index);
    if (params.mu <= 0.0) throw ValidationError("Dirichlet mu must be positive");
    const auto terms = base_query_terms(index, rep);
    const double collection_size = static_cast<double>(index.stats.total_tokens);

    std::vector<ScoredDoc> result;
    for (uint32_t ordinal : base_candidates(index, rep)) {
        const double dl = static_cast<double>(index.doc_lengths[ordinal]);
        double score = 0.0;
        for (const QueryTerm& qt : terms) {
            if (qt.ctf == 0) continue; // out-of-vocabulary: P(t|C)=0 would hit log(0)
            const double p_c = static_cast<double>(qt.ctf) / collection_size;
            const double tf = static_cast<double>(index.tf(*qt.term, ordinal));
            score += qt.qtf * std::log((tf + params.mu * p_c) / (dl + params.mu));
        }
        result.push_back(ScoredDoc{index.doc_ids[ordinal], score});
    }
    sort_ranking(result);
    return result;
}

std::vector<ScoredDoc> score_ql_jm(const ChannelIndex& index, const QueryRep& rep,
                                   const QlParams& params) {
    require_nonempty(index);
    if (params.alpha <= 0.0 || params.alpha >= 1.0)
        throw ValidationError("Jelinek-Mercer alpha must lie in (0,1)");
    const auto terms = base_query_terms(index, rep);
    const double collection_size = static_cast<double>(index.stats.total_tokens);

    std::vector<ScoredDoc> result;
    for (uint32_t ordinal : base_candidates(index, rep)) {
        const double dl = static_cast<double>(index.doc_lengths[ordinal]);
        if (dl == 0.0) continue;
        double score = 0.0;
        for (const QueryTerm& qt : terms) {
            if (qt.ctf == 0) continue;
            const double p_c = static_cast<double>(qt.ctf) / collection_size;
            const double tf = static_cast<double>(index.tf(*qt.term, ordinal));
            score += qt.qtf * std::log((1.0 - params.alpha) * tf / dl + params.alpha * p_c);
        }
        result.push_back(ScoredDoc{index.doc_ids[ordinal], score});
    }
    sort_ranking(result);
    return result;
}

} // namespace lexevo
