#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lexevo/corpus_io.hpp"
#include "lexevo/index.hpp"

namespace lexevo {

/// Constants of the multi-channel modulated scorer. Defaults are the evolved
/// values; every one is overridable through the run configuration.
struct EvolvedBm25Config {
    double w_pfx = 0.1;    // prefix channel weight
    double w_bi = 0.08;    // bigram channel weight
    double w_mic = 0.12;   // micro channel weight
    double gate_center = 2.2;
    double gate_scale = 1.0;
    double cov_coeff = 0.25;
    double spec_coeff = 0.10;
    double pmi_cap = 3.0;
    double len_floor = 25.0; // document length floor inside PMI
    double coord_coeff = 0.20;
    double tau_coord = 2.5;
    double anc_coeff = 0.14;
    double anc_threshold = 4.2;
    double len_coeff = 0.15;
    double qtf_exp = 0.5;
    double idf_sat_exp = 0.6;
    double idf_shift = 1.25;
};

/// Per-(query, document, channel) score decomposition. Exposed so the bound
/// suite can audit every multiplier.
struct ChannelScoreParts {
    double evidence = 0.0;       // E: weighted log-TF evidence over matched terms
    double total_weight = 0.0;   // W: sum of w(t) over all query terms
    double matched_weight = 0.0; // W_M: sum of w(t) over matched terms
    double b_cov = 1.0;
    double b_spec = 1.0;
    double b_coord = 1.0;
    double b_anc = 1.0;
    double b_len = 1.0;
    double r = 0.0; // ln(1+E) * B_cov * B_spec * B_coord * B_anc / B_len
    size_t matched_terms = 0;
    size_t query_terms = 0;
};

/// Smoothed inverse document frequency, -ln((df+1)/(N+2)). Strictly positive
/// and finite for every 0 <= df <= N.
double evolved_idf(uint64_t df, uint64_t n_docs);

/// Composite query-term weight:
///   qtf^0.5 * idf * (idf/(idf+1))^0.6 * idf/(idf+1.25).
/// The three IDF factors jointly suppress stopword-like terms.
double term_weight(uint32_t qtf, double idf, const EvolvedBm25Config& cfg = {});

/// Logistic gate value for a given mean query IDF.
double gate_from_mean_idf(double mean_idf, const EvolvedBm25Config& cfg = {});

/// Micro-channel gate: sigmoid of the query's mean evolved IDF over unique
/// base terms (df=0 terms count at their smoothed IDF). Queries whose base
/// terms are all out of vocabulary gate to 0.
double micro_gate(const QueryRep& rep, const ChannelIndex& base_index,
                  const EvolvedBm25Config& cfg = {});

/// Core per-channel score R for one document, with full decomposition.
/// `channel_terms` maps query term -> qtf for this channel.
ChannelScoreParts core_score(const ChannelIndex& index,
                             const std::map<std::string, uint32_t>& channel_terms,
                             uint32_t doc_ordinal, const EvolvedBm25Config& cfg = {});

/// Full four-channel score:
///   S = R_base + w_pfx*R_pfx + w_bi*R_bi + w_mic*G(q)*R_mic
/// over the union of candidate documents across channels. All four indexes
/// must be built over the same corpus.
std::vector<ScoredDoc> score_evolved_bm25(const ChannelIndex& base, const ChannelIndex& prefix,
                                          const ChannelIndex& bigram, const ChannelIndex& micro,
                                          const QueryRep& rep, const EvolvedBm25Config& cfg = {});

} // namespace lexevo
