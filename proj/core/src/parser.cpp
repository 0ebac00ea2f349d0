#include "nbsql/parser.hpp"

#include "nbsql/lexer.hpp"

#include <utility>

namespace nbsql {

namespace {

AggFn agg_from_word(std::string_view w) {
    if (w == "count") return AggFn::Count;
    if (w == "sum") return AggFn::Sum;
    if (w == "avg") return AggFn::Avg;
    if (w == "min") return AggFn::Min;
    if (w == "max") return AggFn::Max;
    return AggFn::None;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParsedQuery parse_query() {
        ParsedQuery q = parse_select_stmt();
        if (peek().is_kw("union") || peek().is_kw("except") || peek().is_kw("intersect")) {
            const std::string op = next().lower;
            q.set_op = op == "union" ? SetOp::Union
                     : op == "except" ? SetOp::Except
                                      : SetOp::Intersect;
            q.set_rhs.set(parse_query());
        }
        return q;
    }

    void expect_end() {
        if (!peek().is(TokenKind::End)) fail("expected end of query");
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const bool at_end = t.is(TokenKind::End);
        std::string where = at_end ? "at end of input" : "at '" + t.text + "'";
        throw ParseError(msg + " " + where, t.offset, at_end);
    }

    bool accept_kw(std::string_view kw) {
        if (peek().is_kw(kw)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_kw(std::string_view kw) {
        if (!accept_kw(kw)) fail("expected " + std::string(kw));
    }
    bool accept_punct(std::string_view p) {
        if (peek().is_punct(p)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
    }

    ParsedQuery parse_select_stmt() {
        ParsedQuery q;
        expect_kw("select");
        q.distinct = accept_kw("distinct");
        q.select.push_back(parse_select_item());
        while (accept_punct(",")) q.select.push_back(parse_select_item());

        if (accept_kw("from")) parse_from(q);
        if (accept_kw("where")) q.where = parse_cond_chain();
        if (accept_kw("group")) {
            expect_kw("by");
            q.group_by.push_back(parse_column_name());
            while (accept_punct(",")) q.group_by.push_back(parse_column_name());
        }
        if (accept_kw("having")) q.having = parse_cond_chain();
        if (accept_kw("order")) {
            expect_kw("by");
            q.order_by.push_back(parse_order_item());
            while (accept_punct(",")) q.order_by.push_back(parse_order_item());
        }
        if (accept_kw("limit")) {
            if (!peek().is(TokenKind::Number)) fail("expected row count after LIMIT");
            const Token& t = next();
            if (t.text.find('.') != std::string::npos) fail("LIMIT requires an integer");
            q.limit = std::stoll(t.text);
        }
        return q;
    }

    SelectItem parse_select_item() {
        SelectItem item;
        // aggregator over a full expression: count(*), sum(a - b)
        if (peek().is(TokenKind::Keyword) && agg_from_word(peek().lower) != AggFn::None &&
            peek(1).is_punct("(")) {
            item.agg = agg_from_word(next().lower);
            expect_punct("(");
            item.distinct = accept_kw("distinct");
            item.expr = parse_value_expr();
            expect_punct(")");
            return item;
        }
        item.expr = parse_value_expr();
        return item;
    }

    OrderItem parse_order_item() {
        OrderItem item;
        item.expr = parse_value_expr();
        if (accept_kw("desc")) item.descending = true;
        else if (accept_kw("asc")) item.descending = false;
        return item;
    }

    ValueExpr parse_value_expr() {
        ValueExpr expr;
        expr.lhs = parse_col_unit();
        if (peek().is_op("+") || peek().is_op("-") || peek().is_op("*") || peek().is_op("/")) {
            // '*' only means multiplication when something follows it
            if (peek().is_op("*") && !starts_col_unit(peek(1))) return expr;
            const std::string op = next().lower;
            expr.op = op == "+" ? ArithOp::Add
                    : op == "-" ? ArithOp::Sub
                    : op == "*" ? ArithOp::Mul
                                : ArithOp::Div;
            expr.rhs = parse_col_unit();
        }
        return expr;
    }

    bool starts_col_unit(const Token& t) const {
        if (t.is(TokenKind::Identifier)) return true;
        if (t.is_op("*")) return true;
        if (t.is(TokenKind::Keyword) && agg_from_word(t.lower) != AggFn::None) return true;
        return false;
    }

    ColUnit parse_col_unit() {
        ColUnit unit;
        if (peek().is(TokenKind::Keyword) && agg_from_word(peek().lower) != AggFn::None &&
            peek(1).is_punct("(")) {
            unit.agg = agg_from_word(next().lower);
            expect_punct("(");
            unit.distinct = accept_kw("distinct");
            unit.col = parse_column_name();
            expect_punct(")");
            return unit;
        }
        unit.col = parse_column_name();
        return unit;
    }

    ColumnName parse_column_name() {
        ColumnName col;
        if (peek().is_op("*")) {
            next();
            col.star = true;
            return col;
        }
        col.name = parse_identifier("column name");
        if (accept_punct(".")) {
            col.qualifier = std::move(col.name);
            col.name = parse_identifier("column name after '.'");
        }
        return col;
    }

    // Aggregator keywords double as identifiers when not followed by '(' so
    // schema columns named e.g. "min" stay parseable.
    std::string parse_identifier(const std::string& what) {
        if (peek().is(TokenKind::Identifier)) return next().text;
        if (peek().is(TokenKind::Keyword) && agg_from_word(peek().lower) != AggFn::None &&
            !peek(1).is_punct("(")) {
            return next().text;
        }
        fail("expected " + what);
    }

    void parse_from(ParsedQuery& q) {
        q.from.push_back(parse_table_source());
        while (true) {
            if (accept_kw("join")) {
                q.from.push_back(parse_table_source());
                if (accept_kw("on")) append_join_conds(q);
            } else if (accept_punct(",")) {
                q.from.push_back(parse_table_source());
            } else {
                break;
            }
        }
    }

    void append_join_conds(ParsedQuery& q) {
        CondChain chain = parse_cond_chain();
        for (std::size_t i = 0; i < chain.conditions.size(); ++i) {
            if (!q.join_conditions.conditions.empty()) {
                q.join_conditions.connectors.push_back(i == 0 ? Connector::And
                                                              : chain.connectors[i - 1]);
            }
            q.join_conditions.conditions.push_back(std::move(chain.conditions[i]));
        }
    }

    TableSource parse_table_source() {
        TableSource src;
        if (accept_punct("(")) {
            src.subquery.set(parse_query());
            expect_punct(")");
        } else {
            src.table = parse_identifier("table name");
        }
        if (accept_kw("as")) {
            src.alias = parse_identifier("alias after AS");
        } else if (peek().is(TokenKind::Identifier)) {
            src.alias = next().text;
        }
        return src;
    }

    CondChain parse_cond_chain() {
        CondChain chain;
        chain.conditions.push_back(parse_condition());
        while (true) {
            if (peek().is_kw("and")) {
                next();
                chain.connectors.push_back(Connector::And);
            } else if (peek().is_kw("or")) {
                next();
                chain.connectors.push_back(Connector::Or);
            } else {
                break;
            }
            chain.conditions.push_back(parse_condition());
        }
        return chain;
    }

    Condition parse_condition() {
        Condition cond;
        cond.left = parse_value_expr();

        if (accept_kw("not")) {
            cond.negated = true;
            if (peek().is_kw("in")) {
                next();
                cond.op = CmpOp::In;
                cond.operands.push_back(parse_subquery_operand());
                return cond;
            }
            if (peek().is_kw("like")) {
                next();
                cond.op = CmpOp::Like;
                cond.operands.push_back(parse_value_operand());
                return cond;
            }
            fail("expected IN or LIKE after NOT");
        }
        if (accept_kw("in")) {
            cond.op = CmpOp::In;
            cond.operands.push_back(parse_subquery_operand());
            return cond;
        }
        if (accept_kw("like")) {
            cond.op = CmpOp::Like;
            cond.operands.push_back(parse_value_operand());
            return cond;
        }
        if (accept_kw("between")) {
            cond.op = CmpOp::Between;
            cond.operands.push_back(parse_value_operand());
            expect_kw("and");
            cond.operands.push_back(parse_value_operand());
            return cond;
        }
        if (accept_kw("is")) {
            cond.op = CmpOp::Is;
            cond.negated = accept_kw("not");
            if (!peek().is_kw("null")) fail("expected NULL after IS");
            const Token& t = next();
            CondOperand operand;
            Literal lit;
            lit.kind = Literal::Kind::Null;
            lit.text = "null";
            lit.begin = t.offset;
            lit.end = t.end;
            operand.literal = lit;
            cond.operands.push_back(std::move(operand));
            return cond;
        }

        if (peek().is(TokenKind::Operator)) {
            const std::string op = peek().lower;
            if (op == "=" || op == "!=" || op == "<>" || op == "<" || op == "<=" || op == ">" ||
                op == ">=") {
                next();
                cond.op = op == "=" ? CmpOp::Eq
                        : (op == "!=" || op == "<>") ? CmpOp::Ne
                        : op == "<" ? CmpOp::Lt
                        : op == "<=" ? CmpOp::Le
                        : op == ">" ? CmpOp::Gt
                                    : CmpOp::Ge;
                cond.operands.push_back(parse_value_operand());
                return cond;
            }
        }
        fail("expected comparison operator");
    }

    CondOperand parse_subquery_operand() {
        expect_punct("(");
        CondOperand operand;
        operand.subquery.set(parse_query());
        expect_punct(")");
        return operand;
    }

    CondOperand parse_value_operand() {
        CondOperand operand;
        const Token& t = peek();
        if (t.is(TokenKind::String)) {
            next();
            Literal lit;
            lit.kind = Literal::Kind::Text;
            lit.text = t.text;
            lit.begin = t.offset;
            lit.end = t.end;
            operand.literal = lit;
            return operand;
        }
        if (t.is(TokenKind::Number) || (t.is_op("-") && peek(1).is(TokenKind::Number))) {
            const std::size_t begin = t.offset;
            const bool neg = t.is_op("-");
            if (neg) next();
            const Token& num = next();
            Literal lit;
            lit.kind = Literal::Kind::Number;
            lit.text = (neg ? "-" : "") + num.text;
            lit.number = std::stod(lit.text);
            lit.begin = begin;
            lit.end = num.end;
            operand.literal = lit;
            return operand;
        }
        if (t.is_punct("(")) return parse_subquery_operand();
        operand.column = parse_col_unit();
        return operand;
    }
};

} // namespace

ParsedQuery parse(std::string_view sql) {
    Parser parser(tokenize(sql));
    ParsedQuery q = parser.parse_query();
    parser.expect_end();
    return q;
}

std::optional<ParsedQuery> try_parse(std::string_view sql) {
    try {
        return parse(sql);
    } catch (const Error&) {
        return std::nullopt;
    }
}

ValidationResult validate_full(std::string_view sql) {
    try {
        parse(sql);
        return {Validity::Valid, {}};
    } catch (const ParseError& e) {
        if (e.at_end) return {Validity::IncompletePrefix, e.what()};
        return {Validity::Invalid, e.what()};
    } catch (const LexError& e) {
        return {Validity::Invalid,
                std::string(e.what()) + " at offset " + std::to_string(e.offset)};
    }
}

const char* to_string(Validity v) {
    switch (v) {
    case Validity::Valid: return "valid";
    case Validity::IncompletePrefix: return "incomplete_prefix";
    case Validity::Invalid: return "invalid";
    }
    return "invalid";
}

std::optional<std::string> lint_gold(const ParsedQuery& q) {
    if (!q.having.empty() && q.group_by.empty())
        return "HAVING without GROUP BY";
    if (q.set_op != SetOp::None && q.set_rhs) return lint_gold(*q.set_rhs);
    return std::nullopt;
}

} // namespace nbsql
