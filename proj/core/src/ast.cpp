#include "nbsql/ast.hpp"

namespace nbsql {

namespace {

std::string quote_string(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "''";
        else out.push_back(c);
    }
    out += "'";
    return out;
}

std::string render(const ColumnName& c) {
    if (c.star) return "*";
    if (!c.qualifier.empty()) return c.qualifier + "." + c.name;
    return c.name;
}

std::string render(const ColUnit& u) {
    std::string inner = render(u.col);
    if (u.agg == AggFn::None) return inner;
    std::string out = agg_name(u.agg);
    out += "(";
    if (u.distinct) out += "DISTINCT ";
    out += inner;
    out += ")";
    return out;
}

const char* arith_symbol(ArithOp op) {
    switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::None: break;
    }
    return "";
}

std::string render(const Literal& lit) {
    switch (lit.kind) {
    case Literal::Kind::Number: return lit.text;
    case Literal::Kind::Text: return quote_string(lit.text);
    case Literal::Kind::Null: return "NULL";
    }
    return lit.text;
}

std::string render(const CondOperand& operand) {
    if (operand.literal) return render(*operand.literal);
    if (operand.column) return render(*operand.column);
    if (operand.subquery) return "(" + to_sql(*operand.subquery) + ")";
    return "NULL";
}

std::string render(const CondChain& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.conditions.size(); ++i) {
        if (i) out += chain.connectors[i - 1] == Connector::Or ? " OR " : " AND ";
        out += to_sql(chain.conditions[i]);
    }
    return out;
}

} // namespace

const char* agg_name(AggFn agg) {
    switch (agg) {
    case AggFn::Count: return "count";
    case AggFn::Sum: return "sum";
    case AggFn::Avg: return "avg";
    case AggFn::Min: return "min";
    case AggFn::Max: return "max";
    case AggFn::None: break;
    }
    return "";
}

const char* cmp_op_name(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Like: return "like";
    case CmpOp::In: return "in";
    case CmpOp::Between: return "between";
    case CmpOp::Is: return "is";
    }
    return "?";
}

const char* set_op_name(SetOp op) {
    switch (op) {
    case SetOp::Union: return "UNION";
    case SetOp::Except: return "EXCEPT";
    case SetOp::Intersect: return "INTERSECT";
    case SetOp::None: break;
    }
    return "";
}

std::string to_sql(const ValueExpr& expr) {
    std::string out = render(expr.lhs);
    if (expr.op != ArithOp::None && expr.rhs) {
        out += " ";
        out += arith_symbol(expr.op);
        out += " ";
        out += render(*expr.rhs);
    }
    return out;
}

std::string to_sql(const Condition& cond) {
    std::string out = to_sql(cond.left);
    switch (cond.op) {
    case CmpOp::Between:
        out += " BETWEEN " + render(cond.operands.at(0)) + " AND " + render(cond.operands.at(1));
        return out;
    case CmpOp::In:
        out += cond.negated ? " NOT IN " : " IN ";
        out += render(cond.operands.at(0));
        return out;
    case CmpOp::Like:
        out += cond.negated ? " NOT LIKE " : " LIKE ";
        out += render(cond.operands.at(0));
        return out;
    case CmpOp::Is:
        out += cond.negated ? " IS NOT " : " IS ";
        out += render(cond.operands.at(0));
        return out;
    default:
        out += " ";
        out += cmp_op_name(cond.op);
        out += " ";
        out += render(cond.operands.at(0));
        return out;
    }
}

std::string to_sql(const ParsedQuery& q) {
    std::string out = "SELECT ";
    if (q.distinct) out += "DISTINCT ";
    for (std::size_t i = 0; i < q.select.size(); ++i) {
        if (i) out += ", ";
        const SelectItem& item = q.select[i];
        if (item.agg != AggFn::None) {
            out += agg_name(item.agg);
            out += "(";
            if (item.distinct) out += "DISTINCT ";
            out += to_sql(item.expr);
            out += ")";
        } else {
            out += to_sql(item.expr);
        }
    }
    if (!q.from.empty()) {
        out += " FROM ";
        // Join conditions are re-attached greedily: the parser flattens them,
        // so emit sources joined by JOIN and put the whole ON chain after the
        // last source it can reference. Spider-style queries keep one chain.
        for (std::size_t i = 0; i < q.from.size(); ++i) {
            if (i) out += " JOIN ";
            const TableSource& src = q.from[i];
            if (src.is_subquery()) {
                out += "(" + to_sql(*src.subquery) + ")";
            } else {
                out += src.table;
            }
            if (!src.alias.empty()) out += " AS " + src.alias;
            if (i + 1 == q.from.size() && !q.join_conditions.empty()) {
                out += " ON " + render(q.join_conditions);
            }
        }
    }
    if (!q.where.empty()) out += " WHERE " + render(q.where);
    if (!q.group_by.empty()) {
        out += " GROUP BY ";
        for (std::size_t i = 0; i < q.group_by.size(); ++i) {
            if (i) out += ", ";
            out += render(q.group_by[i]);
        }
    }
    if (!q.having.empty()) out += " HAVING " + render(q.having);
    if (!q.order_by.empty()) {
        out += " ORDER BY ";
        for (std::size_t i = 0; i < q.order_by.size(); ++i) {
            if (i) out += ", ";
            out += to_sql(q.order_by[i].expr);
            if (q.order_by[i].descending) out += " DESC";
        }
    }
    if (q.limit) out += " LIMIT " + std::to_string(*q.limit);
    if (q.set_op != SetOp::None && q.set_rhs) {
        out += " ";
        out += set_op_name(q.set_op);
        out += " ";
        out += to_sql(*q.set_rhs);
    }
    return out;
}

} // namespace nbsql
