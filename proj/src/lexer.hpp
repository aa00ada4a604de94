#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "bks/errors.hpp"
#include "bks/term.hpp"

namespace bks::detail {

enum class Tok : unsigned char { LParen, RParen, Plus, Dot, Star, Ident, Zero, End };

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

// Shared lexer for the term grammar and the certificate s-expressions.
// Identifiers may contain '-' so that certificate keywords like comp-plus
// lex as one token; action names reject it separately.
class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        switch (c) {
        case '(': tok_ = {Tok::LParen, "(", start}; ++i_; return;
        case ')': tok_ = {Tok::RParen, ")", start}; ++i_; return;
        case '+': tok_ = {Tok::Plus, "+", start}; ++i_; return;
        case '.': tok_ = {Tok::Dot, ".", start}; ++i_; return;
        case '*': tok_ = {Tok::Star, "*", start}; ++i_; return;
        case '0': tok_ = {Tok::Zero, "0", start}; ++i_; return;
        default: break;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t j = i_ + 1;
            while (j < src_.size()) {
                char d = src_[j];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '-')
                    ++j;
                else
                    break;
            }
            tok_ = {Tok::Ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

// Greedy term parse off a token stream; stops at the first token that cannot
// extend the term. Used directly by parse_term and by the certificate parser.
Term parse_term_stream(Lexer& lx);

} // namespace bks::detail
