#pragma once

#include "calcforge/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace calcforge {

/// Canonical ids of the closed function lexicon.
enum class Func {
    Sin, Cos, Tan, Cot,
    Arcsin, Arccos, Arctan, Arccot,
    Sinh, Cosh, Tanh, Coth,
    Arcsinh, Arccosh, Arctanh, Arccoth,
    Exp, Ln, Log2, Sqrt, Cbrt, Abs,
};

inline constexpr int kFunctionCount = 22;

/// Canonical spelling, e.g. "sinh".
std::string_view function_name(Func f);
/// Resolves canonical names and the tg/ctg/sh/ch/... aliases.
std::optional<Func> lookup_function(std::string_view name);
/// Every (alias, canonical id) pair of the lexicon.
const std::map<std::string, Func, std::less<>>& function_lexicon();
/// Applies f to a real argument.
double apply_function(Func f, double x);

enum class NamedConstant { Pi, E };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

class Expr;

namespace node {
struct Number {
    Rational value;
    double approx;  // value.to_double(), cached for evaluation
};
struct Constant { NamedConstant which; };
struct Variable { std::string name; };
struct Negate { std::shared_ptr<const Expr> arg; };
struct Binary { BinaryOp op; std::shared_ptr<const Expr> lhs, rhs; };
struct Call { Func func; std::shared_ptr<const Expr> arg; };
}  // namespace node

/// Immutable expression tree in one or more real variables. Copies share structure.
class Expr {
public:
    using Node = std::variant<node::Number, node::Constant, node::Variable, node::Negate, node::Binary, node::Call>;

    Expr();  // the number 0
    Expr(Rational value);  // NOLINT(google-explicit-constructor)
    Expr(std::int64_t value) : Expr(Rational(value)) {}  // NOLINT(google-explicit-constructor)
    Expr(int value) : Expr(Rational(value)) {}  // NOLINT(google-explicit-constructor)

    static Expr number(Rational value) { return Expr(std::move(value)); }
    static Expr pi();
    static Expr e();
    static Expr var(std::string name);
    static Expr neg(Expr arg);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
    static Expr call(Func f, Expr arg);

    const Node& node() const noexcept { return ptr_->node; }

    template <class T>
    const T* as() const noexcept { return std::get_if<T>(&ptr_->node); }

    /// Exact rational value when the node is a number literal.
    const Rational* number_value() const noexcept;
    bool is_number(const Rational& v) const noexcept;
    bool depends_on(std::string_view var) const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Holder { Node node; };
    explicit Expr(Node n);
    std::shared_ptr<const Holder> ptr_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr pow(Expr base, Expr exponent);
Expr call(Func f, Expr arg);

/// Parses the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-'? power
///   power  := atom ('^' factor)?
///   atom   := number | 'pi' | 'e' | ident '(' expr ')' | ident | '(' expr ')'
/// Throws ParseError carrying the byte offset of the problem.
Expr parse(std::string_view text);

/// Fully parenthesized canonical text; parse(to_text(e)) == e for parser-producible trees.
std::string to_text(const Expr& e);

using Binding = std::map<std::string, double, std::less<>>;

/// Real evaluation. Domain violations give NaN or infinities; only unbound variables throw.
double eval(const Expr& e, const Binding& binding);
double eval(const Expr& e, std::string_view var, double value);

/// Callable of one variable. Throws UnboundVariable up front if e mentions any other variable.
std::function<double(double)> bind(const Expr& e, std::string var);

/// Largest magnitude among the variable-dependent subterms of e at var = value (+inf if any is not finite).
double max_subterm_magnitude(const Expr& e, std::string_view var, double value);

/// Symbolic derivative by structural recursion and the chain rule (unsimplified).
Expr differentiate(const Expr& e, std::string_view var);

/// Exact constant folding plus the neutral-element rules x+0, x*1, x*0, x^1, x^0, --x.
Expr simplify(const Expr& e);

}  // namespace calcforge
