#include <cctype>
#include <optional>

#include "mwps/errors.hpp"
#include "mwps/expr.hpp"

namespace mwps::expr {

ExprPtr make_number(Rational value) {
    return std::make_shared<Expr>(Expr{Expr::Number{std::move(value)}});
}

ExprPtr make_quant(int index) {
    return std::make_shared<Expr>(Expr{Expr::QuantRef{index}});
}

ExprPtr make_unknown() {
    return std::make_shared<Expr>(Expr{Expr::Unknown{}});
}

ExprPtr make_binop(BinaryOp op, ExprPtr left, ExprPtr right) {
    return std::make_shared<Expr>(Expr{Expr::BinOp{op, std::move(left), std::move(right)}});
}

namespace {

struct Token {
    enum class Kind { number, quant, unknown, op, lparen, rparen, equals, end };
    Kind kind;
    Rational value;    // number
    int index = 0;     // quant
    BinaryOp op = BinaryOp::add;
    std::size_t column = 0;  // 1-based byte column
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        std::size_t col = pos_ + 1;
        if (pos_ >= text_.size()) {
            return {Token::Kind::end, {}, 0, BinaryOp::add, col};
        }
        unsigned char c = text_[pos_];
        if (std::isdigit(c) || c == '.') {
            return lex_number(col);
        }
        switch (c) {
            case '+':
                ++pos_;
                return {Token::Kind::op, {}, 0, BinaryOp::add, col};
            case '-':
                ++pos_;
                return {Token::Kind::op, {}, 0, BinaryOp::sub, col};
            case '*':
                ++pos_;
                return {Token::Kind::op, {}, 0, BinaryOp::mul, col};
            case '/':
                ++pos_;
                return {Token::Kind::op, {}, 0, BinaryOp::divide, col};
            case '(':
                ++pos_;
                return {Token::Kind::lparen, {}, 0, BinaryOp::add, col};
            case ')':
                ++pos_;
                return {Token::Kind::rparen, {}, 0, BinaryOp::add, col};
            case '=':
                ++pos_;
                return {Token::Kind::equals, {}, 0, BinaryOp::add, col};
            case 'x':
            case 'X':
                ++pos_;
                return {Token::Kind::unknown, {}, 0, BinaryOp::add, col};
            case '[':
                return lex_quant(col);
            default:
                break;
        }
        // UTF-8 operator synonyms: '×' C397, '÷' C3B7, '−' E28892.
        if (match_bytes("\xC3\x97")) return {Token::Kind::op, {}, 0, BinaryOp::mul, col};
        if (match_bytes("\xC3\xB7")) return {Token::Kind::op, {}, 0, BinaryOp::divide, col};
        if (match_bytes("\xE2\x88\x92")) return {Token::Kind::op, {}, 0, BinaryOp::sub, col};
        throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", 0, col);
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool match_bytes(std::string_view bytes) {
        if (text_.substr(pos_, bytes.size()) == bytes) {
            pos_ += bytes.size();
            return true;
        }
        return false;
    }

    Token lex_number(std::size_t col) {
        std::size_t start = pos_;
        bool dot = false;
        bool digit = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digit = true;
                ++pos_;
            } else if (c == '.' && !dot) {
                dot = true;
                ++pos_;
            } else {
                break;
            }
        }
        if (!digit) {
            throw ParseError("malformed number", 0, col);
        }
        return {Token::Kind::number, Rational::from_decimal(text_.substr(start, pos_ - start)), 0,
                BinaryOp::add, col};
    }

    Token lex_quant(std::size_t col) {
        // [Q<digits>], no leading zeros.
        std::size_t p = pos_ + 1;
        if (p >= text_.size() || text_[p] != 'Q') {
            throw ParseError("expected quantity tag [Q<i>]", 0, col);
        }
        ++p;
        std::size_t digits_start = p;
        long long index = 0;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
            index = index * 10 + (text_[p] - '0');
            if (index > 1'000'000) throw ParseError("quantity tag index too large", 0, col);
            ++p;
        }
        if (p == digits_start || text_[digits_start] == '0' || p >= text_.size() || text_[p] != ']') {
            throw ParseError("expected quantity tag [Q<i>]", 0, col);
        }
        pos_ = p + 1;
        return {Token::Kind::quant, {}, static_cast<int>(index), BinaryOp::add, col};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Equation parse_equation() {
        ExprPtr first = parse_sum();
        if (current_.kind == Token::Kind::equals) {
            advance();
            ExprPtr second = parse_sum();
            expect_end();
            return {first, second};
        }
        expect_end();
        // Bare expression: read as x = <expr>.
        return {make_unknown(), first};
    }

    ExprPtr parse_expression_only() {
        ExprPtr e = parse_sum();
        expect_end();
        return e;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void expect_end() {
        if (current_.kind != Token::Kind::end) {
            throw ParseError("trailing input after expression", 0, current_.column);
        }
    }

    ExprPtr parse_sum() {
        ExprPtr left = parse_term();
        while (current_.kind == Token::Kind::op &&
               (current_.op == BinaryOp::add || current_.op == BinaryOp::sub)) {
            BinaryOp op = current_.op;
            advance();
            left = make_binop(op, left, parse_term());
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (current_.kind == Token::Kind::op &&
               (current_.op == BinaryOp::mul || current_.op == BinaryOp::divide)) {
            BinaryOp op = current_.op;
            std::size_t col = current_.column;
            advance();
            ExprPtr right = parse_factor();
            if (op == BinaryOp::divide) {
                if (const auto* num = std::get_if<Expr::Number>(&right->node); num && num->value.is_zero()) {
                    throw ParseError("division by literal zero", 0, col);
                }
            }
            left = make_binop(op, left, right);
        }
        return left;
    }

    ExprPtr parse_factor() {
        if (current_.kind == Token::Kind::op && current_.op == BinaryOp::sub) {
            std::size_t col = current_.column;
            advance();
            ExprPtr inner = parse_factor();
            if (const auto* num = std::get_if<Expr::Number>(&inner->node)) {
                return make_number(-num->value);
            }
            // General unary minus: 0 - e.
            (void)col;
            return make_binop(BinaryOp::sub, make_number(Rational(0)), inner);
        }
        if (current_.kind == Token::Kind::op && current_.op == BinaryOp::add) {
            advance();
            return parse_factor();
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        switch (current_.kind) {
            case Token::Kind::number: {
                ExprPtr e = make_number(current_.value);
                advance();
                return e;
            }
            case Token::Kind::quant: {
                ExprPtr e = make_quant(current_.index);
                advance();
                return e;
            }
            case Token::Kind::unknown: {
                advance();
                return make_unknown();
            }
            case Token::Kind::lparen: {
                std::size_t col = current_.column;
                advance();
                ExprPtr e = parse_sum();
                if (current_.kind != Token::Kind::rparen) {
                    throw ParseError("unbalanced parentheses", 0, col);
                }
                advance();
                return e;
            }
            case Token::Kind::rparen:
                throw ParseError("unbalanced parentheses", 0, current_.column);
            default:
                throw ParseError("expected a value", 0, current_.column);
        }
    }

    Lexer lexer_;
    Token current_{Token::Kind::end, {}, 0, BinaryOp::add, 0};
};

int precedence(const ExprPtr& e) {
    if (const auto* bin = std::get_if<Expr::BinOp>(&e->node)) {
        return (bin->op == BinaryOp::add || bin->op == BinaryOp::sub) ? 1 : 2;
    }
    return 3;
}

void print_rec(const ExprPtr& e, std::string& out);

void print_child(const ExprPtr& child, int parent_prec, bool is_right, BinaryOp parent_op,
                 std::string& out) {
    int child_prec = precedence(child);
    bool parens = child_prec < parent_prec;
    // Right operand of - or / needs parens at equal precedence: a-(b+c), a/(b*c).
    if (!parens && is_right && child_prec == parent_prec &&
        (parent_op == BinaryOp::sub || parent_op == BinaryOp::divide)) {
        parens = true;
    }
    // Negative literals inside a tighter context keep their own parens: a*(-3).
    if (!parens) {
        if (const auto* num = std::get_if<Expr::Number>(&child->node);
            num && num->value.is_negative() && (parent_prec == 2 || is_right)) {
            parens = true;
        }
    }
    if (parens) out += '(';
    print_rec(child, out);
    if (parens) out += ')';
}

void print_rec(const ExprPtr& e, std::string& out) {
    if (const auto* num = std::get_if<Expr::Number>(&e->node)) {
        out += num->value.to_string();
    } else if (const auto* q = std::get_if<Expr::QuantRef>(&e->node)) {
        out += "[Q" + std::to_string(q->index) + "]";
    } else if (std::get_if<Expr::Unknown>(&e->node)) {
        out += 'x';
    } else {
        const auto& bin = std::get<Expr::BinOp>(e->node);
        int prec = precedence(e);
        print_child(bin.left, prec, false, bin.op, out);
        switch (bin.op) {
            case BinaryOp::add: out += '+'; break;
            case BinaryOp::sub: out += '-'; break;
            case BinaryOp::mul: out += '*'; break;
            case BinaryOp::divide: out += '/'; break;
        }
        print_child(bin.right, prec, true, bin.op, out);
    }
}

}  // namespace

Equation parse_equation(std::string_view text) {
    return Parser(text).parse_equation();
}

ExprPtr parse_expression(std::string_view text) {
    return Parser(text).parse_expression_only();
}

std::string print_expr(const ExprPtr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

std::string print_equation(const Equation& eq) {
    return print_expr(eq.lhs) + "=" + print_expr(eq.rhs);
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* num = std::get_if<Expr::Number>(&a->node)) {
        return num->value == std::get<Expr::Number>(b->node).value;
    }
    if (const auto* q = std::get_if<Expr::QuantRef>(&a->node)) {
        return q->index == std::get<Expr::QuantRef>(b->node).index;
    }
    if (std::get_if<Expr::Unknown>(&a->node)) {
        return true;
    }
    const auto& ba = std::get<Expr::BinOp>(a->node);
    const auto& bb = std::get<Expr::BinOp>(b->node);
    return ba.op == bb.op && structurally_equal(ba.left, bb.left) &&
           structurally_equal(ba.right, bb.right);
}

Rational evaluate(const ExprPtr& e, const Bindings& bindings) {
    if (const auto* num = std::get_if<Expr::Number>(&e->node)) {
        return num->value;
    }
    if (const auto* q = std::get_if<Expr::QuantRef>(&e->node)) {
        auto it = bindings.find(q->index);
        if (it == bindings.end()) {
            throw EvalError("unbound quantity tag [Q" + std::to_string(q->index) + "]");
        }
        return it->second;
    }
    if (std::get_if<Expr::Unknown>(&e->node)) {
        throw EvalError("cannot evaluate an expression containing the unknown x");
    }
    const auto& bin = std::get<Expr::BinOp>(e->node);
    Rational left = evaluate(bin.left, bindings);
    Rational right = evaluate(bin.right, bindings);
    switch (bin.op) {
        case BinaryOp::add: return left + right;
        case BinaryOp::sub: return left - right;
        case BinaryOp::mul: return left * right;
        case BinaryOp::divide: return left / right;
    }
    throw EvalError("corrupt operator node");
}

bool contains_unknown(const ExprPtr& e) {
    if (std::get_if<Expr::Unknown>(&e->node)) return true;
    if (const auto* bin = std::get_if<Expr::BinOp>(&e->node)) {
        return contains_unknown(bin->left) || contains_unknown(bin->right);
    }
    return false;
}

namespace {

int count_ops(const ExprPtr& e) {
    if (const auto* bin = std::get_if<Expr::BinOp>(&e->node)) {
        return 1 + count_ops(bin->left) + count_ops(bin->right);
    }
    return 0;
}

int count_numeric_leaves(const ExprPtr& e) {
    if (std::get_if<Expr::Number>(&e->node) || std::get_if<Expr::QuantRef>(&e->node)) {
        return 1;
    }
    if (const auto* bin = std::get_if<Expr::BinOp>(&e->node)) {
        return count_numeric_leaves(bin->left) + count_numeric_leaves(bin->right);
    }
    return 0;
}

void visit_numbers(const ExprPtr& e, const std::function<void(const Rational&)>& fn) {
    if (const auto* num = std::get_if<Expr::Number>(&e->node)) {
        fn(num->value);
    } else if (const auto* bin = std::get_if<Expr::BinOp>(&e->node)) {
        visit_numbers(bin->left, fn);
        visit_numbers(bin->right, fn);
    }
}

}  // namespace

int operator_count(const Equation& eq) {
    return count_ops(eq.lhs) + count_ops(eq.rhs);
}

int numeric_leaf_count(const Equation& eq) {
    return count_numeric_leaves(eq.lhs) + count_numeric_leaves(eq.rhs);
}

void for_each_number(const Equation& eq, const std::function<void(const Rational&)>& fn) {
    visit_numbers(eq.lhs, fn);
    visit_numbers(eq.rhs, fn);
}

}  // namespace mwps::expr
