#include "nbsql/lexer.hpp"

#include "nbsql/errors.hpp"
#include "nbsql/strings.hpp"

#include <array>
#include <cctype>

namespace nbsql {

namespace {

constexpr std::array kKeywords = {
    "select", "distinct", "from", "join", "on", "as", "where", "group", "by",
    "having", "order", "asc", "desc", "limit", "union", "except", "intersect",
    "and", "or", "not", "in", "like", "between", "is", "null",
    "count", "sum", "avg", "min", "max",
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

} // namespace

bool is_sql_keyword(std::string_view word) {
    for (const char* kw : kKeywords)
        if (word == kw) return true;
    return false;
}

std::vector<Token> tokenize(std::string_view sql) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = sql.size();

    auto push = [&](TokenKind kind, std::size_t begin, std::size_t end, std::string text) {
        Token t;
        t.kind = kind;
        t.lower = to_lower(text);
        t.text = std::move(text);
        t.offset = begin;
        t.end = end;
        out.push_back(std::move(t));
    };

    while (i < n) {
        const auto c = static_cast<unsigned char>(sql[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '\'' || c == '"') {
            const char quote = sql[i];
            const std::size_t begin = i++;
            std::string content;
            bool closed = false;
            while (i < n) {
                if (sql[i] == quote) {
                    if (i + 1 < n && sql[i + 1] == quote) { // doubled quote escape
                        content.push_back(quote);
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                content.push_back(sql[i++]);
            }
            if (!closed) throw LexError("unterminated string literal", begin);
            push(TokenKind::String, begin, i, std::move(content));
            continue;
        }
        if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(sql[i + 1])))) {
            const std::size_t begin = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
            if (i < n && sql[i] == '.') {
                ++i;
                while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
            }
            push(TokenKind::Number, begin, i, std::string(sql.substr(begin, i - begin)));
            continue;
        }
        if (ident_start(c)) {
            const std::size_t begin = i;
            while (i < n && ident_char(static_cast<unsigned char>(sql[i]))) ++i;
            std::string word(sql.substr(begin, i - begin));
            const TokenKind kind =
                is_sql_keyword(to_lower(word)) ? TokenKind::Keyword : TokenKind::Identifier;
            push(kind, begin, i, std::move(word));
            continue;
        }
        // two-character operators first
        if (i + 1 < n) {
            const std::string_view two = sql.substr(i, 2);
            if (two == "!=" || two == "<>" || two == "<=" || two == ">=") {
                push(TokenKind::Operator, i, i + 2, std::string(two));
                i += 2;
                continue;
            }
        }
        switch (c) {
        case '=': case '<': case '>': case '+': case '-': case '*': case '/':
            push(TokenKind::Operator, i, i + 1, std::string(1, sql[i]));
            ++i;
            continue;
        case '(': case ')': case ',': case '.': case ';':
            push(TokenKind::Punct, i, i + 1, std::string(1, sql[i]));
            ++i;
            continue;
        default:
            throw LexError("unexpected character '" + std::string(1, sql[i]) + "'", i);
        }
    }

    Token eof;
    eof.kind = TokenKind::End;
    eof.offset = n;
    eof.end = n;
    out.push_back(std::move(eof));
    return out;
}

} // namespace nbsql
