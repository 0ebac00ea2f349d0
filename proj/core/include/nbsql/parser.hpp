#pragma once

#include "nbsql/ast.hpp"
#include "nbsql/errors.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace nbsql {

/// Syntax violation. `at_end` is true when the parse failed only because the
/// input stopped, i.e. the text is a proper prefix of some valid query.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, bool at_end)
        : Error(what), offset(offset), at_end(at_end) {}
    std::size_t offset;
    bool at_end;
};

/// Parses a complete query in the Spider SQL dialect:
/// SELECT/FROM/JOIN..ON/WHERE/GROUP BY/HAVING/ORDER BY/LIMIT, the three set
/// operators, subqueries in FROM and in condition values, aggregators with
/// DISTINCT, table aliases, BETWEEN/IN/LIKE/IS NULL, and arithmetic between
/// column units. Anything outside that dialect is a syntax error.
ParsedQuery parse(std::string_view sql);

/// parse() that reports failure as empty instead of throwing.
std::optional<ParsedQuery> try_parse(std::string_view sql);

enum class Validity { Valid, IncompletePrefix, Invalid };

struct ValidationResult {
    Validity verdict = Validity::Invalid;
    std::string diagnostic;
};

/// Full-parser verdict over arbitrary text: Valid for a complete dialect
/// query, IncompletePrefix when parsing fails exactly at end of input,
/// Invalid otherwise.
ValidationResult validate_full(std::string_view sql);

const char* to_string(Validity v);

/// Dialect rule that holds for all well-formed gold queries; hypotheses may
/// break it. Returns a diagnostic when violated.
std::optional<std::string> lint_gold(const ParsedQuery& q);

} // namespace nbsql
