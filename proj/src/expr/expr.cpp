#include "calcforge/expr.hpp"

#include "calcforge/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace calcforge {

namespace {

constexpr std::array<std::string_view, kFunctionCount> kCanonicalNames = {
    "sin", "cos", "tan", "cot",
    "arcsin", "arccos", "arctan", "arccot",
    "sinh", "cosh", "tanh", "coth",
    "arcsinh", "arccosh", "arctanh", "arccoth",
    "exp", "ln", "log2", "sqrt", "cbrt", "abs",
};

std::map<std::string, Func, std::less<>> build_lexicon() {
    std::map<std::string, Func, std::less<>> m;
    for (int i = 0; i < kFunctionCount; ++i) m.emplace(std::string(kCanonicalNames[static_cast<std::size_t>(i)]), static_cast<Func>(i));
    const std::pair<const char*, Func> aliases[] = {
        {"tg", Func::Tan},       {"ctg", Func::Cot},       {"arctg", Func::Arctan},  {"arcctg", Func::Arccot},
        {"sh", Func::Sinh},      {"ch", Func::Cosh},       {"th", Func::Tanh},       {"cth", Func::Coth},
        {"arcsh", Func::Arcsinh}, {"arcch", Func::Arccosh}, {"arcth", Func::Arctanh}, {"arccth", Func::Arccoth},
    };
    for (const auto& [name, f] : aliases) m.emplace(name, f);
    return m;
}

}  // namespace

std::string_view function_name(Func f) { return kCanonicalNames[static_cast<std::size_t>(f)]; }

const std::map<std::string, Func, std::less<>>& function_lexicon() {
    static const auto lexicon = build_lexicon();
    return lexicon;
}

std::optional<Func> lookup_function(std::string_view name) {
    const auto& lex = function_lexicon();
    auto it = lex.find(name);
    if (it == lex.end()) return std::nullopt;
    return it->second;
}

double apply_function(Func f, double x) {
    switch (f) {
        case Func::Sin: return std::sin(x);
        case Func::Cos: return std::cos(x);
        case Func::Tan: return std::tan(x);
        case Func::Cot: return std::cos(x) / std::sin(x);
        case Func::Arcsin: return std::asin(x);
        case Func::Arccos: return std::acos(x);
        case Func::Arctan: return std::atan(x);
        case Func::Arccot: return std::numbers::pi / 2 - std::atan(x);
        case Func::Sinh: return std::sinh(x);
        case Func::Cosh: return std::cosh(x);
        case Func::Tanh: return std::tanh(x);
        case Func::Coth: return std::cosh(x) / std::sinh(x);
        case Func::Arcsinh: return std::asinh(x);
        case Func::Arccosh: return std::acosh(x);
        case Func::Arctanh: return std::atanh(x);
        // arccth x = arcth(1/x); NaN for |x| < 1 as the log form requires
        case Func::Arccoth: return std::atanh(1.0 / x);
        case Func::Exp: return std::exp(x);
        case Func::Ln: return std::log(x);
        case Func::Log2: return std::log2(x);
        case Func::Sqrt: return std::sqrt(x);
        case Func::Cbrt: return std::cbrt(x);
        case Func::Abs: return std::fabs(x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

Expr::Expr() : Expr(Node{node::Number{Rational(0), 0.0}}) {}
Expr::Expr(Rational value) : Expr(Node{node::Number{value, value.to_double()}}) {}
Expr::Expr(Node n) : ptr_(std::make_shared<const Holder>(Holder{std::move(n)})) {}

Expr Expr::pi() { return Expr(Node{node::Constant{NamedConstant::Pi}}); }
Expr Expr::e() { return Expr(Node{node::Constant{NamedConstant::E}}); }
Expr Expr::var(std::string name) { return Expr(Node{node::Variable{std::move(name)}}); }

Expr Expr::neg(Expr arg) {
    return Expr(Node{node::Negate{std::make_shared<const Expr>(std::move(arg))}});
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    return Expr(Node{node::Binary{op, std::make_shared<const Expr>(std::move(lhs)),
                                  std::make_shared<const Expr>(std::move(rhs))}});
}

Expr Expr::call(Func f, Expr arg) {
    return Expr(Node{node::Call{f, std::make_shared<const Expr>(std::move(arg))}});
}

const Rational* Expr::number_value() const noexcept {
    const auto* n = as<node::Number>();
    return n ? &n->value : nullptr;
}

bool Expr::is_number(const Rational& v) const noexcept {
    const auto* n = number_value();
    return n && *n == v;
}

bool Expr::depends_on(std::string_view var) const {
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Variable>) return n.name == var;
            else if constexpr (std::is_same_v<T, node::Negate> || std::is_same_v<T, node::Call>)
                return n.arg->depends_on(var);
            else if constexpr (std::is_same_v<T, node::Binary>)
                return n.lhs->depends_on(var) || n.rhs->depends_on(var);
            else return false;
        },
        node());
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.ptr_ == b.ptr_) return true;
    if (a.node().index() != b.node().index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node());
            if constexpr (std::is_same_v<T, node::Number>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, node::Constant>) return x.which == y.which;
            else if constexpr (std::is_same_v<T, node::Variable>) return x.name == y.name;
            else if constexpr (std::is_same_v<T, node::Negate>) return *x.arg == *y.arg;
            else if constexpr (std::is_same_v<T, node::Binary>)
                return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            else return x.func == y.func && *x.arg == *y.arg;
        },
        a.node());
}

Expr operator+(Expr a, Expr b) { return Expr::binary(BinaryOp::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(BinaryOp::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::neg(std::move(a)); }
Expr pow(Expr base, Expr exponent) { return Expr::binary(BinaryOp::Pow, std::move(base), std::move(exponent)); }
Expr call(Func f, Expr arg) { return Expr::call(f, std::move(arg)); }

}  // namespace calcforge
