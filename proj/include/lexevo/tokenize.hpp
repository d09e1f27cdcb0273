#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexevo {

/// The four parallel token spaces used for scoring. `base` feeds everything;
/// the other three are derived from it.
enum class TokenChannel : uint8_t {
    base = 0,   // lowercased, split on non-alphanumerics
    prefix = 1, // each base token truncated to its first 5 characters
    bigram = 2, // consecutive base token pairs joined with '_'
    micro = 3,  // rolling character 3-grams within each base token
};

inline constexpr size_t kChannelCount = 4;

inline constexpr std::array<TokenChannel, kChannelCount> kAllChannels = {
    TokenChannel::base, TokenChannel::prefix, TokenChannel::bigram, TokenChannel::micro};

std::string_view channel_name(TokenChannel channel);
TokenChannel channel_from_name(std::string_view name);

struct TokenStream {
    std::vector<std::string> tokens;
    TokenChannel channel = TokenChannel::base;
};

/// Lowercase and split on any non-alphanumeric character (ASCII alnum only;
/// multi-byte UTF-8 sequences act as separators). No stemming, no stopwords.
TokenStream tokenize_base(std::string_view text);

/// Truncate each token to its first 5 characters; shorter tokens pass through.
TokenStream tokenize_prefix(const TokenStream& base);

/// Join consecutive token pairs with '_'; output length is max(0, n-1).
TokenStream tokenize_bigram(const TokenStream& base);

/// All contiguous character 3-grams of each base token; tokens shorter than
/// 3 characters are emitted whole. Grams never cross token boundaries.
TokenStream tokenize_micro(const TokenStream& base);

/// Tokenize `text` into the requested channel (base computed internally).
TokenStream tokenize_channel(std::string_view text, TokenChannel channel);

} // namespace lexevo
