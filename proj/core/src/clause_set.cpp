#include "nbsql/clause_set.hpp"

#include "nbsql/strings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nbsql {

namespace {

struct Scope {
    std::vector<std::string> from_order;          // schema tables, FROM order
    std::map<std::string, std::string> aliases;   // lower alias -> table name
    std::set<std::string> derived_aliases;        // lower aliases of FROM subqueries
    bool has_derived = false;
    const Scope* outer = nullptr;
};

class Canonicalizer {
public:
    Canonicalizer(const DatabaseSchema& schema, EmMode mode) : schema_(schema), mode_(mode) {}

    ClauseSet run(const ParsedQuery& q, const Scope* outer) {
        Scope scope;
        scope.outer = outer;
        for (const TableSource& src : q.from) {
            if (src.is_subquery()) {
                scope.has_derived = true;
                if (!src.alias.empty()) scope.derived_aliases.insert(to_lower(src.alias));
            } else {
                scope.from_order.push_back(src.table);
                if (!src.alias.empty()) scope.aliases[to_lower(src.alias)] = src.table;
            }
        }

        ClauseSet cs;
        cs.select_distinct = q.distinct;
        for (const SelectItem& item : q.select) cs.select_items.push_back(canon(item, scope));
        std::sort(cs.select_items.begin(), cs.select_items.end());

        for (const TableSource& src : q.from) {
            if (src.is_subquery())
                cs.from_subqueries.push_back(run(*src.subquery, &scope).canonical);
            else if (const TableDef* t = schema_.find_table(src.table))
                cs.from_tables.push_back(to_lower(t->name));
            else
                throw ResolutionError("unknown table '" + src.table + "'", src.table);
        }
        std::sort(cs.from_tables.begin(), cs.from_tables.end());
        std::sort(cs.from_subqueries.begin(), cs.from_subqueries.end());

        for (const Condition& c : q.where.conditions) cs.where_items.push_back(canon(c, scope));
        std::sort(cs.where_items.begin(), cs.where_items.end());
        for (Connector conn : q.where.connectors)
            cs.where_connectors.insert(conn == Connector::Or ? "or" : "and");

        for (const ColumnName& col : q.group_by) cs.group_by_items.push_back(canon_col(col, scope));
        std::sort(cs.group_by_items.begin(), cs.group_by_items.end());

        for (const Condition& c : q.having.conditions) cs.having_items.push_back(canon(c, scope));
        std::sort(cs.having_items.begin(), cs.having_items.end());

        for (const OrderItem& item : q.order_by)
            cs.order_by_items.push_back(canon(item.expr, scope) +
                                        (item.descending ? " desc" : " asc"));

        cs.has_limit = q.limit.has_value();

        if (q.set_op != SetOp::None && q.set_rhs) {
            cs.set_op = to_lower(set_op_name(q.set_op));
            cs.set_rhs = run(*q.set_rhs, &scope).canonical;
        }

        cs.canonical = assemble(cs);
        return cs;
    }

private:
    const DatabaseSchema& schema_;
    EmMode mode_;

    static std::string assemble(const ClauseSet& cs) {
        std::string out;
        out += "select";
        if (cs.select_distinct) out += " distinct";
        out += "{" + join(cs.select_items, "|") + "}";
        out += "from{" + join(cs.from_tables, "|");
        if (!cs.from_subqueries.empty()) out += "||" + join(cs.from_subqueries, "|");
        out += "}";
        out += "where{" + join(cs.where_items, "|") + "}";
        if (!cs.where_connectors.empty()) {
            out += "conn{";
            bool first = true;
            for (const auto& c : cs.where_connectors) {
                if (!first) out += "|";
                out += c;
                first = false;
            }
            out += "}";
        }
        out += "group{" + join(cs.group_by_items, "|") + "}";
        out += "having{" + join(cs.having_items, "|") + "}";
        out += "order{" + join(cs.order_by_items, "|") + "}";
        out += cs.has_limit ? "limit{1}" : "limit{0}";
        if (!cs.set_op.empty()) out += cs.set_op + "{" + cs.set_rhs + "}";
        return out;
    }

    std::string canon_col(const ColumnName& col, const Scope& scope) const {
        if (col.star) return "*";

        if (!col.qualifier.empty()) {
            const std::string q = to_lower(col.qualifier);
            // alias of a derived table: canonicalize textually, no schema ref
            if (scope.derived_aliases.count(q)) return "~" + q + "." + to_lower(col.name);
            std::string table = col.qualifier;
            auto alias_it = scope.aliases.find(q);
            if (alias_it != scope.aliases.end()) table = alias_it->second;
            if (const TableDef* t = schema_.find_table(table)) {
                if (const ColumnDef* c = t->find_column(col.name))
                    return resolved({t->name, c->name});
            }
            throw ResolutionError("unknown column '" + col.qualifier + "." + col.name + "'",
                                  col.qualifier + "." + col.name);
        }

        // unqualified: FROM order of this scope, then enclosing scopes
        for (const Scope* s = &scope; s != nullptr; s = s->outer) {
            if (auto ref = schema_.resolve_column_lenient(col.name, s->from_order))
                return resolved(*ref);
            if (s->has_derived) return "~." + to_lower(col.name);
        }
        throw ResolutionError("unknown column '" + col.name + "'", col.name);
    }

    std::string resolved(const ColumnRef& ref) const {
        const ColumnRef final_ref = mode_ == EmMode::Original ? schema_.pk_of_fk(ref) : ref;
        return to_lower(final_ref.table) + "." + to_lower(final_ref.column);
    }

    std::string canon(const ColUnit& unit, const Scope& scope) const {
        std::string inner = canon_col(unit.col, scope);
        if (unit.agg == AggFn::None) return inner;
        std::string out = agg_name(unit.agg);
        out += "(";
        if (unit.distinct) out += "distinct ";
        out += inner;
        out += ")";
        return out;
    }

    std::string canon(const ValueExpr& expr, const Scope& scope) const {
        std::string out = canon(expr.lhs, scope);
        if (expr.op != ArithOp::None && expr.rhs) {
            const char* sym = expr.op == ArithOp::Add ? "+"
                            : expr.op == ArithOp::Sub ? "-"
                            : expr.op == ArithOp::Mul ? "*"
                                                      : "/";
            out = "(" + out + sym + canon(*expr.rhs, scope) + ")";
        }
        return out;
    }

    std::string canon(const SelectItem& item, const Scope& scope) const {
        std::string inner = canon(item.expr, scope);
        if (item.agg == AggFn::None) return inner;
        std::string out = agg_name(item.agg);
        out += "(";
        if (item.distinct) out += "distinct ";
        out += inner;
        out += ")";
        return out;
    }

    // Values are erased: every non-subquery operand canonicalizes to "v",
    // so conditions compare on (negation, column expression, operator) only.
    std::string canon(const Condition& cond, const Scope& scope) {
        std::string out;
        if (cond.negated) out += "not ";
        out += cmp_op_name(cond.op);
        out += " ";
        out += canon(cond.left, scope);
        for (const CondOperand& operand : cond.operands) {
            out += " ";
            if (operand.subquery)
                out += "(" + run(*operand.subquery, &scope).canonical + ")";
            else
                out += "v";
        }
        return out;
    }
};

} // namespace

ClauseSet extract_clause_set(const ParsedQuery& q, const DatabaseSchema& schema, EmMode mode) {
    Canonicalizer c(schema, mode);
    return c.run(q, nullptr);
}

} // namespace nbsql
