#pragma once

#include "calcforge/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace calcforge {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(Rational c);
    /// x - root
    static Poly linear(const Rational& root);
    static Poly monomial(Rational c, int power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Poly derivative() const;
    /// Termwise antiderivative with zero constant.
    Poly antiderivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly pow(int exponent) const;

    /// Human-readable form in the given variable, e.g. "3*x^2-x+1/2".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Polynomial long division: n = q*d + r with deg r < deg d. Throws DivisionByZeroPoly.
std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d);

}  // namespace calcforge
