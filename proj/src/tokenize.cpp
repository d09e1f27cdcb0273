#include "lexevo/tokenize.hpp"

#include "lexevo/errors.hpp"

namespace lexevo {

namespace {

inline bool is_token_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

} // namespace

std::string_view channel_name(TokenChannel channel) {
    switch (channel) {
    case TokenChannel::base: return "base";
    case TokenChannel::prefix: return "prefix";
    case TokenChannel::bigram: return "bigram";
    case TokenChannel::micro: return "micro";
    }
    return "base";
}

TokenChannel channel_from_name(std::string_view name) {
    for (TokenChannel c : kAllChannels) {
        if (channel_name(c) == name) return c;
    }
    throw ValidationError("unknown token channel: " + std::string(name));
}

TokenStream tokenize_base(std::string_view text) {
    TokenStream out;
    out.channel = TokenChannel::base;
    std::string current;
    for (char c : text) {
        if (is_token_char(c)) {
            current.push_back(ascii_lower(c));
        } else if (!current.empty()) {
            out.tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) out.tokens.push_back(std::move(current));
    return out;
}

TokenStream tokenize_prefix(const TokenStream& base) {
    TokenStream out;
    out.channel = TokenChannel::prefix;
    out.tokens.reserve(base.tokens.size());
    for (const auto& tok : base.tokens) {
        out.tokens.push_back(tok.size() > 5 ? tok.substr(0, 5) : tok);
    }
    return out;
}

TokenStream tokenize_bigram(const TokenStream& base) {
    TokenStream out;
    out.channel = TokenChannel::bigram;
    if (base.tokens.size() < 2) return out;
    out.tokens.reserve(base.tokens.size() - 1);
    for (size_t i = 0; i + 1 < base.tokens.size(); ++i) {
        out.tokens.push_back(base.tokens[i] + "_" + base.tokens[i + 1]);
    }
    return out;
}

TokenStream tokenize_micro(const TokenStream& base) {
    TokenStream out;
    out.channel = TokenChannel::micro;
    for (const auto& tok : base.tokens) {
        if (tok.size() < 3) {
            out.tokens.push_back(tok);
            continue;
        }
        for (size_t i = 0; i + 3 <= tok.size(); ++i) {
            out.tokens.push_back(tok.substr(i, 3));
        }
    }
    return out;
}

TokenStream tokenize_channel(std::string_view text, TokenChannel channel) {
    TokenStream base = tokenize_base(text);
    switch (channel) {
    case TokenChannel::base: return base;
    case TokenChannel::prefix: return tokenize_prefix(base);
    case TokenChannel::bigram: return tokenize_bigram(base);
    case TokenChannel::micro: return tokenize_micro(base);
    }
    return base;
}

} // namespace lexevo
