#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nbsql {

enum class TokenKind {
    Keyword,
    Identifier,
    String,   // quoted literal; text holds the unquoted content
    Number,
    Operator, // = != <> < <= > >= + - * /
    Punct,    // ( ) , . ;
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // original spelling (string tokens: unescaped content)
    std::string lower; // lower-cased spelling, what the parser matches on
    std::size_t offset = 0;
    std::size_t end = 0; // one past the last source byte of the token

    bool is(TokenKind k) const { return kind == k; }
    bool is_kw(std::string_view kw) const { return kind == TokenKind::Keyword && lower == kw; }
    bool is_op(std::string_view op) const { return kind == TokenKind::Operator && lower == op; }
    bool is_punct(std::string_view p) const { return kind == TokenKind::Punct && lower == p; }
};

bool is_sql_keyword(std::string_view word);

/// Splits SQL text into tokens. Keywords are case-insensitive; single- and
/// double-quoted strings are supported with doubled-quote escapes.
/// Throws LexError (offset of the opening quote) on an unterminated string,
/// and on bytes that belong to no token class.
std::vector<Token> tokenize(std::string_view sql);

} // namespace nbsql
