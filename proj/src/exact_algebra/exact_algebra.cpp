#include "calcforge/exact_algebra.hpp"

#include "calcforge/error.hpp"

#include <algorithm>
#include <optional>

namespace calcforge {

namespace {

namespace mp = boost::multiprecision;

std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt m = mp::abs(n);
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    if (m.is_zero()) return {};
    BigInt root = isqrt(m);
    for (BigInt d = 1; d <= root; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        BigInt other = m / d;
        if (other != d) large.push_back(other);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Divides p by (x - r) assuming r is a root; returns nullopt when the remainder is nonzero.
std::optional<Poly> deflate(const Poly& p, const Rational& r) {
    auto [q, rem] = poly_divmod(p, Poly::linear(r));
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

std::optional<Poly> exact_quotient(const Poly& p, const Poly& d) {
    auto [q, rem] = poly_divmod(p, d);
    if (!rem.is_zero()) return std::nullopt;
    return q;
}

bool has_integer_coefficients(const Poly& p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c.is_integer(); });
}

// Monic integer quadratic factor with negative discriminant, if one exists.
std::optional<QuadraticFactor> find_quadratic_factor(const Poly& monic_int) {
    const BigInt a0 = monic_int.coeff(0).num();
    const BigInt at_one = monic_int(Rational(1)).num();
    const BigInt at_minus_one = monic_int(Rational(-1)).num();
    if (a0.is_zero() || at_one.is_zero() || at_minus_one.is_zero()) return std::nullopt;

    for (const BigInt& dc : positive_divisors(a0)) {
        for (int sc : {1, -1}) {
            BigInt c = dc * sc;
            // q(1) = 1 + b + c must divide p(1)
            for (const BigInt& d1 : positive_divisors(at_one)) {
                for (int s1 : {1, -1}) {
                    BigInt b = d1 * s1 - 1 - c;
                    BigInt q_minus_one = 1 - b + c;
                    if (q_minus_one.is_zero() || at_minus_one % q_minus_one != 0) continue;
                    if (b * b - 4 * c >= 0) continue;
                    QuadraticFactor f{Rational(b), Rational(c), 1};
                    if (exact_quotient(monic_int, f.poly())) return f;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Poly clear_denominators(const Poly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    return p * Rational(l);
}

Poly Factorization::expand() const {
    Poly out = Poly::constant(constant);
    for (const auto& [root, mult] : linear) out *= Poly::linear(root).pow(mult);
    for (const auto& q : quadratics) out *= q.poly().pow(q.multiplicity);
    return out;
}

std::vector<RootMultiplicity> rational_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidArgument("rational_roots of the zero polynomial");
    std::vector<RootMultiplicity> roots;

    Poly q = clear_denominators(p);
    int zero_mult = 0;
    while (q.degree() > 0 && q.coeff(0).is_zero()) {
        q = *deflate(q, Rational(0));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
    if (q.degree() < 1) return roots;

    const auto num_divs = positive_divisors(q.coeff(0).num());
    const auto den_divs = positive_divisors(q.leading().num());
    std::vector<Rational> candidates;
    for (const auto& n : num_divs)
        for (const auto& d : den_divs) {
            candidates.emplace_back(n, d);
            candidates.emplace_back(-n, d);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        if (q.degree() < 1) break;
        if (!q(r).is_zero()) continue;
        int mult = 0;
        while (q.degree() >= 1) {
            auto next = deflate(q, r);
            if (!next) break;
            q = std::move(*next);
            ++mult;
        }
        roots.push_back({r, mult});
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    return roots;
}

Factorization factorize(const Poly& p) {
    if (p.is_zero()) throw InvalidArgument("factorize of the zero polynomial");
    Factorization f;
    f.constant = p.leading();
    Poly rest = p.monic();

    f.linear = rational_roots(rest);
    for (const auto& [root, mult] : f.linear)
        for (int i = 0; i < mult; ++i) rest = *deflate(rest, root);

    while (rest.degree() > 0) {
        std::optional<QuadraticFactor> quad;
        if (rest.degree() == 2) {
            QuadraticFactor cand{rest.coeff(1), rest.coeff(0), 1};
            Rational disc = cand.discriminant();
            if (disc.sign() < 0) {
                quad = cand;
            } else if (auto s = disc.exact_sqrt()) {
                // Unreachable after rational-root extraction, kept for completeness.
                Rational half(1, 2);
                f.linear.push_back({(-cand.b + *s) * half, 1});
                f.linear.push_back({(-cand.b - *s) * half, 1});
                rest = Poly::constant(1);
                break;
            } else {
                throw IrreducibleRemainder(2);
            }
        } else if (rest.degree() % 2 == 0 && has_integer_coefficients(rest)) {
            quad = find_quadratic_factor(rest);
        }
        if (!quad) throw IrreducibleRemainder(rest.degree());

        quad->multiplicity = 0;
        while (rest.degree() >= 2) {
            auto next = exact_quotient(rest, quad->poly());
            if (!next) break;
            rest = std::move(*next);
            ++quad->multiplicity;
        }
        f.quadratics.push_back(*quad);
    }
    std::sort(f.linear.begin(), f.linear.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    std::sort(f.quadratics.begin(), f.quadratics.end(), [](const auto& a, const auto& b) {
        return a.b != b.b ? a.b < b.b : a.c < b.c;
    });
    return f;
}

std::vector<Rational> solve_linear_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidArgument("solve_linear_exact: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidArgument("solve_linear_exact: matrix is not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (a[r][col].abs() > a[pivot][col].abs()) pivot = r;
        if (a[pivot][col].is_zero()) throw SingularSystem();
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace calcforge
