#include "calcforge/error.hpp"
#include "calcforge/exact_algebra.hpp"
#include "calcforge/partial_fractions.hpp"

namespace calcforge::pfrac {

namespace {

Poly exact_div(const Poly& n, const Poly& d) {
    auto [q, r] = poly_divmod(n, d);
    if (!r.is_zero()) throw InvalidArgument("term denominator does not divide the denominator");
    return q;
}

Poly quadratic(const Rational& b, const Rational& c) { return Poly({c, b, Rational(1)}); }

// Numerator of a term after scaling it to the common denominator den.
Poly scaled_numerator(const PFTerm& term, const Poly& den) {
    return std::visit(
        [&](const auto& t) -> Poly {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, LinearPower>) {
                return t.coef * exact_div(den, Poly::linear(t.root).pow(t.power));
            } else if constexpr (std::is_same_v<T, QuadLog>) {
                return t.coef * Poly({t.b, Rational(2)}) * exact_div(den, quadratic(t.b, t.c));
            } else {
                return t.coef * exact_div(den, quadratic(t.b, t.c));
            }
        },
        term);
}

}  // namespace

PFDecomposition decompose(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly();
    PFDecomposition out;
    // Step 1: split off the polynomial part of an improper fraction.
    auto [quot, rem] = poly_divmod(num, den);
    out.polynomial_part = std::move(quot);
    if (rem.is_zero()) return out;

    // Step 2: factor the denominator.
    const Factorization f = factorize(den);
    for (const QuadraticFactor& q : f.quadratics)
        if (q.multiplicity > 1) throw RepeatedQuadratic();

    // Step 3: rem/den = target/monic, matched against one unknown per ansatz numerator.
    const Poly monic = den.monic();
    const Poly target = rem * den.leading().reciprocal();
    std::vector<Poly> basis;
    for (const RootMultiplicity& lin : f.linear)
        for (int j = 1; j <= lin.multiplicity; ++j) basis.push_back(exact_div(monic, Poly::linear(lin.root).pow(j)));
    for (const QuadraticFactor& q : f.quadratics) {
        const Poly rest = exact_div(monic, q.poly());
        basis.push_back(Poly({Rational(0), Rational(1)}) * rest);  // A x
        basis.push_back(rest);                                     // B
    }
    const int n = monic.degree();
    RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(basis.size()));
    std::vector<Rational> rhs(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < basis.size(); ++col) a[row][col] = basis[col].coeff(row);
        rhs[row] = target.coeff(row);
    }
    const std::vector<Rational> x = solve_linear_exact(std::move(a), std::move(rhs));

    std::size_t k = 0;
    for (const RootMultiplicity& lin : f.linear) {
        for (int j = 1; j <= lin.multiplicity; ++j, ++k)
            if (!x[k].is_zero()) out.terms.push_back(LinearPower{x[k], lin.root, j});
    }
    for (const QuadraticFactor& q : f.quadratics) {
        const Rational& big_a = x[k++];
        const Rational& big_b = x[k++];
        // (Ax + B) = A/2 (2x + b) + (B - A b / 2)
        const Rational log_part = big_a / Rational(2);
        const Rational atan_part = big_b - big_a * q.b / Rational(2);
        if (!log_part.is_zero()) out.terms.push_back(QuadLog{log_part, q.b, q.c});
        if (!atan_part.is_zero()) out.terms.push_back(QuadAtan{atan_part, q.b, q.c});
    }
    return out;
}

Poly recompose_numerator(const PFDecomposition& d, const Poly& den) {
    Poly total = d.polynomial_part * den;
    for (const PFTerm& t : d.terms) total += scaled_numerator(t, den);
    return total;
}

AntiderivativeForm antiderivative(const PFDecomposition& d) {
    AntiderivativeForm out;
    if (!d.polynomial_part.is_zero()) out.summands.push_back(PolyTerm{d.polynomial_part.antiderivative()});
    for (const PFTerm& term : d.terms) {
        std::visit(
            [&](const auto& t) {
                using T = std::decay_t<decltype(t)>;
                if (t.coef.is_zero()) return;
                if constexpr (std::is_same_v<T, LinearPower>) {
                    if (t.power == 1) out.summands.push_back(LogAbs{t.coef, t.root});
                    else out.summands.push_back(PowerTerm{t.coef, t.root, t.power});
                } else if constexpr (std::is_same_v<T, QuadLog>) {
                    out.summands.push_back(QuadLogTerm{t.coef, t.b, t.c});
                } else {
                    out.summands.push_back(AtanTerm{t.coef, t.b, t.c - t.b * t.b / Rational(4)});
                }
            },
            term);
    }
    return out;
}

}  // namespace calcforge::pfrac
