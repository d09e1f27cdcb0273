#pragma once

#include <vector>

#include "lexevo/corpus_io.hpp"
#include "lexevo/index.hpp"

namespace lexevo {

struct Bm25Params {
    double k1 = 0.9;
    double b = 0.4;
    double delta = 1.0; // BM25+ lower bound, ignored by plain BM25
};

struct QlParams {
    double mu = 2000.0;  // Dirichlet pseudo-count
    double alpha = 0.1;  // Jelinek-Mercer collection mixing weight
};

/// Okapi BM25 over the base channel. Per matched document:
///   sum over unique query terms of qtf * IDF(t) * tf(k1+1)/(tf + k1(1-b+b|d|/avgdl)),
/// IDF(t) = ln((N-df+0.5)/(df+0.5)). Only candidate documents (>=1 matched
/// term) are scored; results sorted by descending score, ties by doc id.
std::vector<ScoredDoc> score_bm25(const ChannelIndex& index, const QueryRep& rep,
                                  const Bm25Params& params);

/// BM25+ : the TF component of each matched term is shifted by +delta.
std::vector<ScoredDoc> score_bm25_plus(const ChannelIndex& index, const QueryRep& rep,
                                       const Bm25Params& params);

/// Query likelihood with Dirichlet smoothing:
///   sum over unique query terms of qtf * ln((tf + mu*P(t|C))/(|d| + mu)),
/// P(t|C) = ctf(t)/|C|. Out-of-vocabulary terms are skipped; terms with tf=0
/// in a candidate document still contribute the smoothing-only score.
std::vector<ScoredDoc> score_ql_dirichlet(const ChannelIndex& index, const QueryRep& rep,
                                          const QlParams& params);

/// Query likelihood with Jelinek-Mercer smoothing:
///   sum over unique query terms of qtf * ln((1-alpha)*tf/|d| + alpha*P(t|C)).
std::vector<ScoredDoc> score_ql_jm(const ChannelIndex& index, const QueryRep& rep,
                                   const QlParams& params);

/// Shared deterministic ordering: descending score, ascending doc id.
void sort_ranking(std::vector<ScoredDoc>& docs);

} // namespace lexevo
