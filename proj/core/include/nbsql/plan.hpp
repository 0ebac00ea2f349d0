#pragma once

#include "nbsql/ast.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace nbsql {

/// Eight boolean clause indicators: which of WHERE, GROUP BY, HAVING,
/// ORDER BY, LIMIT, EXCEPT, UNION, INTERSECT a query contains.
struct QueryPlan {
    bool where = false;
    bool group_by = false;
    bool having = false;
    bool order_by = false;
    bool limit = false;
    bool except_op = false;
    bool union_op = false;
    bool intersect_op = false;

    static constexpr std::size_t kClauseCount = 8;
    /// Wire/report names, in canonical order.
    static const std::array<const char*, kClauseCount>& clause_names();

    std::array<bool, kClauseCount> bits() const {
        return {where, group_by, having, order_by, limit, except_op, union_op, intersect_op};
    }
    static QueryPlan from_bits(const std::array<bool, kClauseCount>& b) {
        return {b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7]};
    }

    friend bool operator==(const QueryPlan& a, const QueryPlan& b) {
        return a.bits() == b.bits();
    }

    std::string str() const; // e.g. "{where, orderBy}"
};

/// Number of clause indicators on which the two plans disagree (0..8).
int plan_distance(const QueryPlan& a, const QueryPlan& b);

/// Clause flags of a parsed query. With include_nested (the default), a
/// clause anywhere in the query counts: a WHERE inside a subquery sets
/// `where`, and a nested set operator sets its flag. With it off, only the
/// top level is inspected.
QueryPlan extract_query_plan(const ParsedQuery& q, bool include_nested = true);

} // namespace nbsql
