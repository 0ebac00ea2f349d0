#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbsql {

/// Heap box with value semantics that tolerates an incomplete T, so query
/// nodes can nest recursively while staying copyable.
template <typename T>
class Box {
public:
    Box() = default;
    explicit Box(T value) { storage_.push_back(std::move(value)); }

    explicit operator bool() const { return !storage_.empty(); }
    bool empty() const { return storage_.empty(); }

    T& operator*() { return storage_.front(); }
    const T& operator*() const { return storage_.front(); }
    T* operator->() { return &storage_.front(); }
    const T* operator->() const { return &storage_.front(); }

    void set(T value) {
        storage_.clear();
        storage_.push_back(std::move(value));
    }
    void reset() { storage_.clear(); }

private:
    std::vector<T> storage_; // empty or exactly one element
};

enum class AggFn { None, Count, Sum, Avg, Min, Max };
enum class ArithOp { None, Add, Sub, Mul, Div };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge, Like, In, Between, Is };
enum class SetOp { None, Union, Except, Intersect };
enum class Connector { And, Or };

/// A column as written: optional qualifier (table name or alias) plus name,
/// or the bare star.
struct ColumnName {
    std::string qualifier;
    std::string name;
    bool star = false;
};

/// Column with an optional aggregator wrapped around it: count(distinct c).
struct ColUnit {
    AggFn agg = AggFn::None;
    bool distinct = false;
    ColumnName col;
};

/// Column expression, possibly arithmetic over two column units (a - b).
struct ValueExpr {
    ArithOp op = ArithOp::None;
    ColUnit lhs;
    std::optional<ColUnit> rhs; // present iff op != None
};

struct Literal {
    enum class Kind { Number, Text, Null };
    Kind kind = Kind::Number;
    std::string text;  // literal content (strings: unquoted)
    double number = 0; // valid for Kind::Number
    // source span of the literal token, for in-place value repair
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct ParsedQuery;

/// Right-hand side of a comparison: a literal, a column, or a subquery.
struct CondOperand {
    std::optional<Literal> literal;
    std::optional<ColUnit> column;
    Box<ParsedQuery> subquery;
};

struct Condition {
    bool negated = false; // NOT IN / NOT LIKE
    ValueExpr left;
    CmpOp op = CmpOp::Eq;
    std::vector<CondOperand> operands; // BETWEEN carries two, others one
};

/// Flat AND/OR chain; the dialect has no parenthesized boolean grouping.
struct CondChain {
    std::vector<Condition> conditions;
    std::vector<Connector> connectors; // size = conditions.size() - 1 when non-empty

    bool empty() const { return conditions.empty(); }
};

struct TableSource {
    std::string table; // empty when this source is a subquery
    std::string alias;
    Box<ParsedQuery> subquery;

    bool is_subquery() const { return !subquery.empty(); }
};

struct SelectItem {
    AggFn agg = AggFn::None; // aggregator wrapping the whole expression
    bool distinct = false;   // count(distinct ...)
    ValueExpr expr;
};

struct OrderItem {
    ValueExpr expr;
    bool descending = false;
};

struct ParsedQuery {
    bool distinct = false;
    std::vector<SelectItem> select;
    std::vector<TableSource> from;
    CondChain join_conditions; // ON conditions, flattened across joins
    CondChain where;
    std::vector<ColumnName> group_by;
    CondChain having;
    std::vector<OrderItem> order_by;
    std::optional<long long> limit;
    SetOp set_op = SetOp::None;
    Box<ParsedQuery> set_rhs;
};

/// Serializes back to dialect SQL. Round-trips through parse() to an AST with
/// an identical clause set; literal spans are recomputed, not preserved.
std::string to_sql(const ParsedQuery& q);

std::string to_sql(const ValueExpr& expr);
std::string to_sql(const Condition& cond);

const char* agg_name(AggFn agg);
const char* cmp_op_name(CmpOp op);
const char* set_op_name(SetOp op);

} // namespace nbsql
