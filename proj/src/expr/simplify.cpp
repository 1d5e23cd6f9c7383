#include "calcforge/expr.hpp"

#include <cstdlib>

namespace calcforge {

namespace {

// Integer powers are folded only while the result stays small.
constexpr int kMaxFoldedExponent = 64;

std::optional<Rational> fold(BinaryOp op, const Rational& a, const Rational& b) {
    switch (op) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
            if (b.is_zero()) return std::nullopt;
            return a / b;
        case BinaryOp::Pow: {
            if (!b.is_integer() || boost::multiprecision::abs(b.num()) > kMaxFoldedExponent) return std::nullopt;
            const int k = b.num().convert_to<int>();
            if (a.is_zero() && k <= 0) return std::nullopt;
            return a.pow(k);
        }
    }
    return std::nullopt;
}

Expr negated(const Expr& s) {
    if (const Rational* v = s.number_value()) return Expr(-*v);
    if (const auto* n = s.as<node::Negate>()) return *n->arg;
    return -s;
}

}  // namespace

Expr simplify(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> Expr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Negate>) {
                return negated(simplify(*n.arg));
            } else if constexpr (std::is_same_v<T, node::Call>) {
                return call(n.func, simplify(*n.arg));
            } else if constexpr (std::is_same_v<T, node::Binary>) {
                Expr l = simplify(*n.lhs);
                Expr r = simplify(*n.rhs);
                const Rational* lv = l.number_value();
                const Rational* rv = r.number_value();
                if (lv && rv)
                    if (auto folded = fold(n.op, *lv, *rv)) return Expr(*folded);
                const Rational zero(0);
                const Rational one(1);
                switch (n.op) {
                    case BinaryOp::Add:
                        if (l.is_number(zero)) return r;
                        if (r.is_number(zero)) return l;
                        break;
                    case BinaryOp::Sub:
                        if (r.is_number(zero)) return l;
                        if (l.is_number(zero)) return negated(r);
                        break;
                    case BinaryOp::Mul:
                        if (l.is_number(zero) || r.is_number(zero)) return Expr(0);
                        if (l.is_number(one)) return r;
                        if (r.is_number(one)) return l;
                        break;
                    case BinaryOp::Div:
                        if (r.is_number(one)) return l;
                        break;
                    case BinaryOp::Pow:
                        if (r.is_number(one)) return l;
                        if (r.is_number(zero)) return Expr(1);
                        break;
                }
                return Expr::binary(n.op, std::move(l), std::move(r));
            } else {
                return e;
            }
        },
        e.node());
}

}  // namespace calcforge
