#include "calcforge/error.hpp"
#include "calcforge/partial_fractions.hpp"

#include <cmath>
#include <limits>

namespace calcforge::pfrac {

namespace {

constexpr int kMaxPolyExponent = 256;

bool terminates(BigInt den) {
    while (den % 2 == 0) den /= 2;
    while (den % 5 == 0) den /= 5;
    return den == 1;
}

// Literal in a form the parser reproduces: -(a), or n/d for non-terminating decimals.
Expr literal(const Rational& r) {
    if (r.sign() < 0) return -literal(r.abs());
    if (terminates(r.den())) return Expr(r);
    return Expr(Rational(r.num())) / Expr(Rational(r.den()));
}

// acc + coef * e, folding the sign and unit coefficients.
Expr add_scaled(std::optional<Expr> acc, const Rational& coef, const Expr& e) {
    const Rational mag = coef.abs();
    Expr term = mag == Rational(1) ? e : literal(mag) * e;
    if (!acc) return coef.sign() < 0 ? -term : term;
    return coef.sign() < 0 ? std::move(*acc) - std::move(term) : std::move(*acc) + std::move(term);
}

Expr x_minus(const Expr& x, const Rational& r) {
    if (r.is_zero()) return x;
    return r.sign() > 0 ? x - literal(r) : x + literal(r.abs());
}

Expr poly_expr(const Poly& p, const Expr& x) {
    std::optional<Expr> acc;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (i == 0) acc = acc ? (c.sign() < 0 ? *acc - literal(c.abs()) : *acc + literal(c)) : literal(c);
        else acc = add_scaled(acc, c, i == 1 ? x : pow(x, Expr(i)));
    }
    return acc ? *acc : Expr(0);
}

Expr quadratic_expr(const Rational& b, const Rational& c, const Expr& x) {
    return poly_expr(Poly({c, b, Rational(1)}), x);
}

// sqrt of a positive rational, exact when it is a perfect square.
Expr sqrt_expr(const Rational& r) {
    if (auto s = r.exact_sqrt()) return literal(*s);
    return call(Func::Sqrt, literal(r));
}

Expr summand_expr(const Summand& s, const Expr& x) {
    return std::visit(
        [&](const auto& t) -> Expr {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, PolyTerm>) {
                return poly_expr(t.poly, x);
            } else if constexpr (std::is_same_v<T, LogAbs>) {
                return add_scaled(std::nullopt, t.coef, call(Func::Ln, call(Func::Abs, x_minus(x, t.root))));
            } else if constexpr (std::is_same_v<T, PowerTerm>) {
                const Rational k(t.power);
                return add_scaled(std::nullopt, t.coef / (Rational(1) - k),
                                  pow(x_minus(x, t.root), literal(Rational(1) - k)));
            } else if constexpr (std::is_same_v<T, QuadLogTerm>) {
                return add_scaled(std::nullopt, t.coef, call(Func::Ln, quadratic_expr(t.b, t.c, x)));
            } else {
                const Expr s = sqrt_expr(t.radicand);
                const Expr shifted = x_minus(x, -t.b / Rational(2));
                const Expr atan = call(Func::Arctan, shifted / s);
                if (auto exact = t.radicand.exact_sqrt()) return add_scaled(std::nullopt, t.coef / *exact, atan);
                return add_scaled(std::nullopt, t.coef, atan / s);
            }
        },
        s);
}

Expr term_expr(const PFTerm& term, const Expr& x) {
    return std::visit(
        [&](const auto& t) -> Expr {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, LinearPower>) {
                const Expr base = x_minus(x, t.root);
                return add_scaled(std::nullopt, t.coef, Expr(1) / (t.power == 1 ? base : pow(base, Expr(t.power))));
            } else if constexpr (std::is_same_v<T, QuadLog>) {
                return add_scaled(std::nullopt, t.coef, poly_expr(Poly({t.b, Rational(2)}), x) / quadratic_expr(t.b, t.c, x));
            } else {
                return add_scaled(std::nullopt, t.coef, Expr(1) / quadratic_expr(t.b, t.c, x));
            }
        },
        term);
}

Expr sum(const std::vector<Expr>& parts) {
    if (parts.empty()) return Expr(0);
    Expr acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        // a + (-b) reads better as a - b
        if (const auto* n = parts[i].as<node::Negate>()) acc = acc - *n->arg;
        else acc = acc + parts[i];
    }
    return acc;
}

}  // namespace

double eval_antiderivative(const AntiderivativeForm& f, double x) {
    long double total = 0.0L;
    for (const Summand& s : f.summands) {
        total += std::visit(
            [&](const auto& t) -> double {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, PolyTerm>) {
                    return t.poly(x);
                } else if constexpr (std::is_same_v<T, LogAbs>) {
                    const double d = x - t.root.to_double();
                    if (d == 0.0) return std::numeric_limits<double>::quiet_NaN();
                    return t.coef.to_double() * std::log(std::fabs(d));
                } else if constexpr (std::is_same_v<T, PowerTerm>) {
                    const double d = x - t.root.to_double();
                    if (d == 0.0) return std::numeric_limits<double>::quiet_NaN();
                    return t.coef.to_double() * std::pow(d, 1 - t.power) / (1 - t.power);
                } else if constexpr (std::is_same_v<T, QuadLogTerm>) {
                    return t.coef.to_double() * std::log(x * x + t.b.to_double() * x + t.c.to_double());
                } else {
                    const double s = std::sqrt(t.radicand.to_double());
                    return t.coef.to_double() / s * std::atan((x + t.b.to_double() / 2.0) / s);
                }
            },
            s);
    }
    return static_cast<double>(total);
}

Expr to_expr(const AntiderivativeForm& f, const std::string& var) {
    const Expr x = Expr::var(var);
    std::vector<Expr> parts;
    for (const Summand& s : f.summands) parts.push_back(summand_expr(s, x));
    return sum(parts);
}

Expr to_expr(const PFDecomposition& d, const std::string& var) {
    const Expr x = Expr::var(var);
    std::vector<Expr> parts;
    if (!d.polynomial_part.is_zero()) parts.push_back(poly_expr(d.polynomial_part, x));
    for (const PFTerm& t : d.terms) parts.push_back(term_expr(t, x));
    return sum(parts);
}

Poly to_poly(const Expr& e, std::string_view var) {
    return std::visit(
        [&](const auto& n) -> Poly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return Poly::constant(n.value);
            } else if constexpr (std::is_same_v<T, node::Constant>) {
                throw NotPolynomial("constant " + to_text(e) + " is not rational");
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                if (n.name != var) throw NotPolynomial("unexpected variable '" + n.name + "'");
                return Poly({Rational(0), Rational(1)});
            } else if constexpr (std::is_same_v<T, node::Negate>) {
                return -to_poly(*n.arg, var);
            } else if constexpr (std::is_same_v<T, node::Call>) {
                throw NotPolynomial("function call " + to_text(e) + " is not polynomial");
            } else {
                const Poly l = to_poly(*n.lhs, var);
                const Poly r = to_poly(*n.rhs, var);
                switch (n.op) {
                    case BinaryOp::Add: return l + r;
                    case BinaryOp::Sub: return l - r;
                    case BinaryOp::Mul: return l * r;
                    case BinaryOp::Div:
                        if (r.degree() != 0) throw NotPolynomial("division by a non-constant in " + to_text(e));
                        return l * r.leading().reciprocal();
                    case BinaryOp::Pow: {
                        if (r.degree() > 0 || (r.degree() == 0 && !r.leading().is_integer()))
                            throw NotPolynomial("non-integer exponent in " + to_text(e));
                        const BigInt k = r.is_zero() ? BigInt(0) : r.leading().num();
                        if (k < 0 || k > kMaxPolyExponent) throw NotPolynomial("exponent out of range in " + to_text(e));
                        return l.pow(k.convert_to<int>());
                    }
                }
                throw NotPolynomial(to_text(e));
            }
        },
        e.node());
}

std::pair<Poly, Poly> to_rational_function(const Expr& e, std::string_view var) {
    if (const auto* b = e.as<node::Binary>(); b && b->op == BinaryOp::Div) {
        Poly den = to_poly(*b->rhs, var);
        if (den.is_zero()) throw DivisionByZeroPoly();
        return {to_poly(*b->lhs, var), std::move(den)};
    }
    return {to_poly(e, var), Poly::constant(Rational(1))};
}

}  // namespace calcforge::pfrac
