#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mwps/rational.hpp"

namespace mwps::expr {

enum class BinaryOp { add, sub, mul, divide };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable arithmetic AST. Leaves are numeric literals, quantity tags
// [Qi], or the unknown x; inner nodes are the four basic operators.
struct Expr {
    struct Number {
        Rational value;
    };
    struct QuantRef {
        int index;  // 1-based
    };
    struct Unknown {};
    struct BinOp {
        BinaryOp op;
        ExprPtr left;
        ExprPtr right;
    };

    std::variant<Number, QuantRef, Unknown, BinOp> node;
};

ExprPtr make_number(Rational value);
ExprPtr make_quant(int index);
ExprPtr make_unknown();
ExprPtr make_binop(BinaryOp op, ExprPtr left, ExprPtr right);

struct Equation {
    ExprPtr lhs;
    ExprPtr rhs;
};

// Infix parser. '*'/'×' and '/'/'÷' are synonyms, '−' (U+2212) is accepted
// for '-'. A bare expression with no '=' is read as "x = <expr>".
// Throws ParseError with a 1-based column on malformed input.
Equation parse_equation(std::string_view text);
ExprPtr parse_expression(std::string_view text);

// Minimal-parenthesis ASCII printing; parse(print(e)) == e structurally.
std::string print_expr(const ExprPtr& e);
std::string print_equation(const Equation& eq);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

using Bindings = std::map<int, Rational>;

// Exact rational evaluation. Throws EvalError on division by zero, an
// unbound [Qi], or an Unknown in the tree.
Rational evaluate(const ExprPtr& e, const Bindings& bindings = {});

bool contains_unknown(const ExprPtr& e);
int operator_count(const Equation& eq);
int numeric_leaf_count(const Equation& eq);  // Number + QuantRef leaves

// Visits Number leaves left-to-right (lhs then rhs), i.e. textual order.
void for_each_number(const Equation& eq, const std::function<void(const Rational&)>& fn);

// Vote-bucket identity for an equation.
//
// structural_key: deterministic printing of the n-ary flattened,
// commutatively sorted, constant-folded normal form of lhs - rhs,
// suffixed with "=0" so the key itself reparses as an equation.
//
// fingerprint: per seeded evaluation point, every quantity symbol is
// specialized to a pseudorandom residue mod 2^61 - 1 while x stays
// symbolic; lhs - rhs is reduced to a monic univariate numerator (gcd
// against its denominator removed) whose coefficients are hashed. Two
// equations with the same solution set for x agree on all four
// components with overwhelming probability; the monic reduction makes
// scaled and denominator-cleared forms coincide. Points where a
// denominator vanishes are redrawn deterministically.
struct CanonicalForm {
    std::string structural_key;
    std::array<std::uint64_t, 4> fingerprint;

    bool operator==(const CanonicalForm& other) const {
        return structural_key == other.structural_key && fingerprint == other.fingerprint;
    }
};

CanonicalForm canonicalize(const Equation& eq);

// Fingerprint equality (structural_key equality implies it).
bool equivalent(const Equation& a, const Equation& b);

// Canonical key with every Number/QuantRef leaf replaced by `n`.
std::string extract_template(const Equation& eq);

struct Root {
    double value;       // always populated
    Rational exact;     // meaningful only when is_exact
    bool is_exact;
};

// Substitutes bindings, clears denominators, and solves the resulting
// polynomial in x (degree <= 2). Roots are verified by back-substitution;
// roots introduced by denominator clearing are dropped. Throws EvalError
// for degree > 2, an identically-zero equation, or an unbound tag.
std::vector<Root> solve_for_x(const Equation& eq, const Bindings& bindings = {});

}  // namespace mwps::expr
