#include "calcforge/expr.hpp"

namespace calcforge {

namespace {

Expr sq(Expr u) { return pow(std::move(u), Expr(2)); }

// f'(u), the outer derivative of a lexicon function.
Expr outer_derivative(Func f, const Expr& u) {
    switch (f) {
        case Func::Sin: return call(Func::Cos, u);
        case Func::Cos: return -call(Func::Sin, u);
        case Func::Tan: return Expr(1) / sq(call(Func::Cos, u));
        case Func::Cot: return -(Expr(1) / sq(call(Func::Sin, u)));
        case Func::Arcsin: return Expr(1) / call(Func::Sqrt, Expr(1) - sq(u));
        case Func::Arccos: return -(Expr(1) / call(Func::Sqrt, Expr(1) - sq(u)));
        case Func::Arctan: return Expr(1) / (Expr(1) + sq(u));
        case Func::Arccot: return -(Expr(1) / (Expr(1) + sq(u)));
        case Func::Sinh: return call(Func::Cosh, u);
        case Func::Cosh: return call(Func::Sinh, u);
        case Func::Tanh: return Expr(1) / sq(call(Func::Cosh, u));
        case Func::Coth: return -(Expr(1) / sq(call(Func::Sinh, u)));
        case Func::Arcsinh: return Expr(1) / call(Func::Sqrt, sq(u) + Expr(1));
        case Func::Arccosh: return Expr(1) / call(Func::Sqrt, sq(u) - Expr(1));
        case Func::Arctanh:
        case Func::Arccoth: return Expr(1) / (Expr(1) - sq(u));
        case Func::Exp: return call(Func::Exp, u);
        case Func::Ln: return Expr(1) / u;
        case Func::Log2: return Expr(1) / (u * call(Func::Ln, Expr(2)));
        case Func::Sqrt: return Expr(1) / (Expr(2) * call(Func::Sqrt, u));
        case Func::Cbrt: return Expr(1) / (Expr(3) * sq(call(Func::Cbrt, u)));
        // sign(u); 0/0 = NaN at u = 0
        case Func::Abs: return u / call(Func::Abs, u);
    }
    return Expr(0);
}

Expr minus_one(const Expr& c) {
    if (const Rational* v = c.number_value()) return Expr(*v - Rational(1));
    return c - Expr(1);
}

}  // namespace

Expr differentiate(const Expr& e, std::string_view var) {
    return std::visit(
        [&](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number> || std::is_same_v<T, node::Constant>) {
                return Expr(0);
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                return Expr(n.name == var ? 1 : 0);
            } else if constexpr (std::is_same_v<T, node::Negate>) {
                return -differentiate(*n.arg, var);
            } else if constexpr (std::is_same_v<T, node::Call>) {
                return outer_derivative(n.func, *n.arg) * differentiate(*n.arg, var);
            } else {
                const Expr& u = *n.lhs;
                const Expr& v = *n.rhs;
                switch (n.op) {
                    case BinaryOp::Add: return differentiate(u, var) + differentiate(v, var);
                    case BinaryOp::Sub: return differentiate(u, var) - differentiate(v, var);
                    case BinaryOp::Mul: return differentiate(u, var) * v + u * differentiate(v, var);
                    case BinaryOp::Div:
                        return (differentiate(u, var) * v - u * differentiate(v, var)) / sq(v);
                    case BinaryOp::Pow: {
                        const bool base_varies = u.depends_on(var);
                        const bool exp_varies = v.depends_on(var);
                        if (!exp_varies) {
                            if (!base_varies) return Expr(0);
                            return v * pow(u, minus_one(v)) * differentiate(u, var);
                        }
                        if (!base_varies) return e * call(Func::Ln, u) * differentiate(v, var);
                        return e * (differentiate(v, var) * call(Func::Ln, u) + v * differentiate(u, var) / u);
                    }
                }
                return Expr(0);
            }
        },
        e.node());
}

}  // namespace calcforge
