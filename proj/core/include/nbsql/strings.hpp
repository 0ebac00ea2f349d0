#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nbsql {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

/// Lower-cased, whitespace-trimmed form; the comparison domain for cell values
/// and identifiers throughout the library.
std::string fold(std::string_view s);

bool iequals(std::string_view a, std::string_view b);
bool starts_with_fold(std::string_view text, std::string_view prefix);

/// Splits into lower-cased word tokens: runs of alphanumerics. Underscores
/// separate tokens so schema names and question text tokenize alike.
std::vector<std::string> word_tokens(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// True if `needle` occurs in `haystack` as a contiguous token subsequence.
bool token_subsequence(const std::vector<std::string>& needle,
                       const std::vector<std::string>& haystack);

/// First letter of each word token, concatenated ("New York" -> "ny").
std::string initials(std::string_view s);

bool parse_number(std::string_view s, double& out);

} // namespace nbsql
