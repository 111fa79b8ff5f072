#pragma once

// Scalar expressions in x and y.
//
// Grammar (whitespace is insignificant):
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)?
//   exponent := ['-'] number | '(' ['-'] number ')'
//   primary  := number | 'x' | 'y' | 'pi' | 'e'
//             | func '(' expr ')' | '(' expr ')'
//   func     := sin | cos | tan | exp | log | sqrt
//
// so '^' binds tighter than unary minus, which binds tighter than '*' '/'.
// Exponents are numeric literals; chained powers need parentheses.

#include <memory>
#include <string>
#include <string_view>

#include "surf4/taylor.hpp"

namespace surf4 {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt };

class Expr
{
public:
    enum class Kind { Number, Constant, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Call };

    struct Node
    {
        Kind kind = Kind::Number;
        double value = 0.0;  // Number, Constant, and the exponent of Pow
        std::string name;    // Constant: "pi" or "e"
        Func func = Func::Sin;
        std::shared_ptr<const Node> lhs;  // operand of unary nodes
        std::shared_ptr<const Node> rhs;
    };

    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    static Expr number(double v);
    static Expr constant(std::string_view name);
    static Expr var_x();
    static Expr var_y();
    static Expr neg(const Expr& a);
    static Expr binary(Kind op, const Expr& a, const Expr& b);
    static Expr power(const Expr& base, double exponent);
    static Expr call(Func f, const Expr& arg);

    bool empty() const noexcept { return !root_; }
    const Node& root() const { return *root_; }

    /// Structural equality.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    std::shared_ptr<const Node> root_;
};

/// Parse `text` against the grammar above. Throws ParseError.
Expr parse_expression(std::string_view text);

/// Text that parses back to a structurally identical tree.
std::string to_string(const Expr& expr);

std::string_view function_name(Func f);

/// Plain double evaluation. Throws EvalError.
double evaluate(const Expr& expr, double x, double y);

/// Order-N jet of `expr` at (x0,y0). Throws EvalError.
template <int N>
Taylor2<N> eval_jet(const Expr& expr, double x0, double y0);

extern template Taylor2<1> eval_jet<1>(const Expr&, double, double);
extern template Taylor2<2> eval_jet<2>(const Expr&, double, double);
extern template Taylor2<3> eval_jet<3>(const Expr&, double, double);

inline Jet3 eval_jet3(const Expr& expr, double x0, double y0)
{
    return eval_jet<3>(expr, x0, y0);
}

} // namespace surf4
