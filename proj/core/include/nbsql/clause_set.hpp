#pragma once

#include "nbsql/ast.hpp"
#include "nbsql/schema.hpp"

#include <set>
#include <string>
#include <vector>

namespace nbsql {

/// Which exact-set-match convention to canonicalize for. Original reproduces
/// the Spider evaluator: every foreign-key column is replaced by the primary
/// key it references before comparison. Revised keeps foreign keys as
/// written, which removes that family of false positives.
enum class EmMode { Original, Revised };

/// Canonical comparison form of one query level. Literal values are erased,
/// join conditions are dropped, aliases are resolved to underlying tables,
/// and unordered clauses are sorted, so two queries match exactly when their
/// canonical texts are equal.
struct ClauseSet {
    bool select_distinct = false;
    std::vector<std::string> select_items; // sorted
    std::vector<std::string> from_tables;  // sorted, lower-cased
    std::vector<std::string> from_subqueries; // canonical texts, sorted
    std::vector<std::string> where_items;  // sorted
    std::set<std::string> where_connectors;
    std::vector<std::string> group_by_items; // sorted
    std::vector<std::string> having_items;   // sorted
    std::vector<std::string> order_by_items; // in clause order
    bool has_limit = false;
    std::string set_op;          // "", "union", "except", "intersect"
    std::string set_rhs;         // canonical text of the right-hand side

    /// Single deterministic text covering every field; the equality domain.
    std::string canonical;

    friend bool operator==(const ClauseSet& a, const ClauseSet& b) {
        return a.canonical == b.canonical;
    }
};

/// Extracts the canonical comparison form. Column references outside the
/// schema raise ResolutionError, except references into derived (subquery)
/// tables, which canonicalize by alias and name.
ClauseSet extract_clause_set(const ParsedQuery& q, const DatabaseSchema& schema, EmMode mode);

} // namespace nbsql
