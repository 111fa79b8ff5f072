#include "surf4/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include "surf4/format.hpp"

namespace surf4 {

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool same(const Node* a, const Node* b)
{
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Expr::Kind::Number:
        return a->value == b->value;
    case Expr::Kind::Constant:
        return a->name == b->name;
    case Expr::Kind::VarX:
    case Expr::Kind::VarY:
        return true;
    case Expr::Kind::Neg:
        return same(a->lhs.get(), b->lhs.get());
    case Expr::Kind::Pow:
        return a->value == b->value && same(a->lhs.get(), b->lhs.get());
    case Expr::Kind::Call:
        return a->func == b->func && same(a->lhs.get(), b->lhs.get());
    default:
        return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
    }
}

bool lookup_function(std::string_view name, Func& out)
{
    static constexpr std::pair<std::string_view, Func> table[] = {
        {"sin", Func::Sin}, {"cos", Func::Cos}, {"tan", Func::Tan},
        {"exp", Func::Exp}, {"log", Func::Log}, {"sqrt", Func::Sqrt},
    };
    for (const auto& [n, f] : table)
        if (n == name) {
            out = f;
            return true;
        }
    return false;
}

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse()
    {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "empty expression");
        Expr e = expr();
        skip_ws();
        if (!at_end())
            throw ParseError(pos_, std::string("expected operator or end of input, found '") + text_[pos_] + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    Expr expr()
    {
        Expr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = Expr::binary(Expr::Kind::Add, lhs, term());
            else if (accept('-'))
                lhs = Expr::binary(Expr::Kind::Sub, lhs, term());
            else
                return lhs;
        }
    }

    Expr term()
    {
        Expr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = Expr::binary(Expr::Kind::Mul, lhs, unary());
            else if (accept('/'))
                lhs = Expr::binary(Expr::Kind::Div, lhs, unary());
            else
                return lhs;
        }
    }

    Expr unary()
    {
        if (accept('-'))
            return Expr::neg(unary());
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (!accept('^'))
            return base;
        return Expr::power(base, exponent());
    }

    double exponent()
    {
        const bool paren = accept('(');
        const bool negative = accept('-');
        skip_ws();
        if (!starts_number())
            throw ParseError(pos_, "expected numeric exponent");
        double v = number();
        if (paren)
            expect(')');
        return negative ? -v : v;
    }

    bool starts_number() const
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return true;
        return c == '.' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    double number()
    {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        };
        digits();
        if (peek() == '.') {
            ++pos_;
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-'))
                ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        double v = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw ParseError(start, "malformed or out-of-range number");
        return v;
    }

    Expr primary()
    {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "expected expression");
        if (starts_number())
            return Expr::number(number());
        if (accept('(')) {
            Expr inner = expr();
            expect(')');
            return inner;
        }
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view id = text_.substr(start, pos_ - start);
            if (id == "x")
                return Expr::var_x();
            if (id == "y")
                return Expr::var_y();
            if (id == "pi" || id == "e")
                return Expr::constant(id);
            Func f;
            if (lookup_function(id, f)) {
                if (!accept('('))
                    throw ParseError(pos_, "expected '(' after function name");
                Expr arg = expr();
                expect(')');
                return Expr::call(f, arg);
            }
            throw ParseError(start, "unknown identifier '" + std::string(id) + "'");
        }
        throw ParseError(pos_, std::string("expected expression, found '") + c + "'");
    }
};

int precedence(const Node& n)
{
    switch (n.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        return 2;
    case Expr::Kind::Neg:
        return 3;
    case Expr::Kind::Pow:
        return 4;
    case Expr::Kind::Number:
        return n.value < 0.0 || std::signbit(n.value) ? 0 : 5;
    default:
        return 5;
    }
}

void print(const Node& n, std::string& out);

void print_at(const Node& n, int required, std::string& out)
{
    if (precedence(n) < required) {
        out += '(';
        print(n, out);
        out += ')';
    } else {
        print(n, out);
    }
}

void print(const Node& n, std::string& out)
{
    switch (n.kind) {
    case Expr::Kind::Number:
        out += format_real(n.value);
        return;
    case Expr::Kind::Constant:
        out += n.name;
        return;
    case Expr::Kind::VarX:
        out += 'x';
        return;
    case Expr::Kind::VarY:
        out += 'y';
        return;
    case Expr::Kind::Neg:
        out += '-';
        print_at(*n.lhs, 3, out);
        return;
    case Expr::Kind::Pow:
        print_at(*n.lhs, 5, out);
        out += '^';
        if (std::signbit(n.value))
            out += "(-" + format_real(-n.value) + ")";
        else
            out += format_real(n.value);
        return;
    case Expr::Kind::Call:
        out += function_name(n.func);
        out += '(';
        print(*n.lhs, out);
        out += ')';
        return;
    default: {
        const int p = precedence(n);
        print_at(*n.lhs, p, out);
        switch (n.kind) {
        case Expr::Kind::Add: out += " + "; break;
        case Expr::Kind::Sub: out += " - "; break;
        case Expr::Kind::Mul: out += " * "; break;
        default: out += " / "; break;
        }
        print_at(*n.rhs, p + 1, out);
        return;
    }
    }
}

double constant_value(const std::string& name)
{
    return name == "pi" ? std::numbers::pi : std::numbers::e;
}

double eval_double(const Node& n, double x, double y)
{
    switch (n.kind) {
    case Expr::Kind::Number:
        return n.value;
    case Expr::Kind::Constant:
        return constant_value(n.name);
    case Expr::Kind::VarX:
        return x;
    case Expr::Kind::VarY:
        return y;
    case Expr::Kind::Neg:
        return -eval_double(*n.lhs, x, y);
    case Expr::Kind::Add:
        return eval_double(*n.lhs, x, y) + eval_double(*n.rhs, x, y);
    case Expr::Kind::Sub:
        return eval_double(*n.lhs, x, y) - eval_double(*n.rhs, x, y);
    case Expr::Kind::Mul:
        return eval_double(*n.lhs, x, y) * eval_double(*n.rhs, x, y);
    case Expr::Kind::Div: {
        const double d = eval_double(*n.rhs, x, y);
        if (d == 0.0)
            throw EvalError("division by zero");
        return eval_double(*n.lhs, x, y) / d;
    }
    case Expr::Kind::Pow: {
        const double b = eval_double(*n.lhs, x, y);
        if (n.value != std::trunc(n.value) && b < 0.0)
            throw EvalError("non-integer power of negative base");
        if (b == 0.0 && n.value < 0.0)
            throw EvalError("division by zero");
        return std::pow(b, n.value);
    }
    case Expr::Kind::Call: {
        const double a = eval_double(*n.lhs, x, y);
        switch (n.func) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Tan:
            if (std::abs(std::cos(a)) < 1e-15)
                throw EvalError("tan at a pole");
            return std::tan(a);
        case Func::Exp: return std::exp(a);
        case Func::Log:
            if (!(a > 0.0))
                throw EvalError("log of non-positive argument");
            return std::log(a);
        case Func::Sqrt:
            if (!(a >= 0.0))
                throw EvalError("sqrt of negative argument");
            return std::sqrt(a);
        }
    }
    }
    return 0.0;
}

template <int N>
Taylor2<N> eval_taylor(const Node& n, const Taylor2<N>& x, const Taylor2<N>& y)
{
    using T = Taylor2<N>;
    switch (n.kind) {
    case Expr::Kind::Number:
        return T{n.value};
    case Expr::Kind::Constant:
        return T{constant_value(n.name)};
    case Expr::Kind::VarX:
        return x;
    case Expr::Kind::VarY:
        return y;
    case Expr::Kind::Neg:
        return -eval_taylor(*n.lhs, x, y);
    case Expr::Kind::Add:
        return eval_taylor(*n.lhs, x, y) + eval_taylor(*n.rhs, x, y);
    case Expr::Kind::Sub:
        return eval_taylor(*n.lhs, x, y) - eval_taylor(*n.rhs, x, y);
    case Expr::Kind::Mul:
        return eval_taylor(*n.lhs, x, y) * eval_taylor(*n.rhs, x, y);
    case Expr::Kind::Div:
        return eval_taylor(*n.lhs, x, y) / eval_taylor(*n.rhs, x, y);
    case Expr::Kind::Pow:
        return pow(eval_taylor(*n.lhs, x, y), n.value);
    case Expr::Kind::Call: {
        const T a = eval_taylor(*n.lhs, x, y);
        switch (n.func) {
        case Func::Sin: return sin(a);
        case Func::Cos: return cos(a);
        case Func::Tan: return tan(a);
        case Func::Exp: return exp(a);
        case Func::Log: return log(a);
        case Func::Sqrt: return sqrt(a);
        }
    }
    }
    return T{};
}

} // namespace

Expr Expr::number(double v)
{
    Node n;
    n.kind = Kind::Number;
    n.value = v;
    return Expr(make_node(std::move(n)));
}

Expr Expr::constant(std::string_view name)
{
    Node n;
    n.kind = Kind::Constant;
    n.name = std::string(name);
    return Expr(make_node(std::move(n)));
}

Expr Expr::var_x()
{
    Node n;
    n.kind = Kind::VarX;
    return Expr(make_node(std::move(n)));
}

Expr Expr::var_y()
{
    Node n;
    n.kind = Kind::VarY;
    return Expr(make_node(std::move(n)));
}

Expr Expr::neg(const Expr& a)
{
    Node n;
    n.kind = Kind::Neg;
    n.lhs = a.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::binary(Kind op, const Expr& a, const Expr& b)
{
    Node n;
    n.kind = op;
    n.lhs = a.root_;
    n.rhs = b.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::power(const Expr& base, double exponent)
{
    Node n;
    n.kind = Kind::Pow;
    n.value = exponent;
    n.lhs = base.root_;
    return Expr(make_node(std::move(n)));
}

Expr Expr::call(Func f, const Expr& arg)
{
    Node n;
    n.kind = Kind::Call;
    n.func = f;
    n.lhs = arg.root_;
    return Expr(make_node(std::move(n)));
}

bool operator==(const Expr& a, const Expr& b) { return same(a.root_.get(), b.root_.get()); }

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& expr)
{
    std::string out;
    if (!expr.empty())
        print(expr.root(), out);
    return out;
}

std::string_view function_name(Func f)
{
    switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
    }
    return "?";
}

namespace {

[[noreturn]] void fail_at(const EvalError& err, double x, double y)
{
    throw EvalError(std::string(err.what()) + " at (" + format_real(x) + ", " + format_real(y) + ")");
}

} // namespace

double evaluate(const Expr& expr, double x, double y)
{
    try {
        const double v = eval_double(expr.root(), x, y);
        if (!std::isfinite(v))
            throw EvalError("non-finite result");
        return v;
    } catch (const EvalError& err) {
        fail_at(err, x, y);
    }
}

template <int N>
Taylor2<N> eval_jet(const Expr& expr, double x0, double y0)
{
    try {
        Taylor2<N> jet = eval_taylor<N>(expr.root(), Taylor2<N>::variable_x(x0), Taylor2<N>::variable_y(y0));
        if (!jet.all_finite())
            throw EvalError("non-finite result");
        return jet;
    } catch (const EvalError& err) {
        fail_at(err, x0, y0);
    }
}

template Taylor2<1> eval_jet<1>(const Expr&, double, double);
template Taylor2<2> eval_jet<2>(const Expr&, double, double);
template Taylor2<3> eval_jet<3>(const Expr&, double, double);

} // namespace surf4
