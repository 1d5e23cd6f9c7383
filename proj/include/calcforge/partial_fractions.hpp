#pragma once

#include "calcforge/expr.hpp"
#include "calcforge/poly.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace calcforge::pfrac {

/// coef / (x - root)^power
struct LinearPower {
    Rational coef;
    Rational root;
    int power = 1;
    friend bool operator==(const LinearPower&, const LinearPower&) = default;
};

/// coef * (2x + b) / (x^2 + bx + c)
struct QuadLog {
    Rational coef;
    Rational b;
    Rational c;
    friend bool operator==(const QuadLog&, const QuadLog&) = default;
};

/// coef / (x^2 + bx + c)
struct QuadAtan {
    Rational coef;
    Rational b;
    Rational c;
    friend bool operator==(const QuadAtan&, const QuadAtan&) = default;
};

using PFTerm = std::variant<LinearPower, QuadLog, QuadAtan>;

struct PFDecomposition {
    Poly polynomial_part;
    std::vector<PFTerm> terms;
};

/// Polynomial part, already integrated.
struct PolyTerm {
    Poly poly;
};
/// coef * ln|x - root|
struct LogAbs {
    Rational coef;
    Rational root;
};
/// coef * (x - root)^(1 - power) / (1 - power), power >= 2
struct PowerTerm {
    Rational coef;
    Rational root;
    int power = 2;
};
/// coef * ln(x^2 + bx + c)
struct QuadLogTerm {
    Rational coef;
    Rational b;
    Rational c;
};
/// coef / sqrt(radicand) * arctan((x + b/2) / sqrt(radicand)), radicand = c - b^2/4 > 0
struct AtanTerm {
    Rational coef;
    Rational b;
    Rational radicand;
};

using Summand = std::variant<PolyTerm, LogAbs, PowerTerm, QuadLogTerm, AtanTerm>;

struct AntiderivativeForm {
    std::vector<Summand> summands;
};

/// Partial fraction decomposition of num/den with exact coefficients.
/// Throws DivisionByZeroPoly, IrreducibleRemainder or RepeatedQuadratic.
PFDecomposition decompose(const Poly& num, const Poly& den);

/// Numerator obtained by recombining d over den; equals the source numerator when d came from decompose.
Poly recompose_numerator(const PFDecomposition& d, const Poly& den);

AntiderivativeForm antiderivative(const PFDecomposition& d);

/// NaN at poles of the logarithmic and power summands.
double eval_antiderivative(const AntiderivativeForm& f, double x);

Expr to_expr(const AntiderivativeForm& f, const std::string& var = "x");
Expr to_expr(const PFDecomposition& d, const std::string& var = "x");

/// Exact polynomial in var with rational coefficients; throws NotPolynomial.
Poly to_poly(const Expr& e, std::string_view var);

/// Splits a top-level quotient into numerator and denominator polynomials.
std::pair<Poly, Poly> to_rational_function(const Expr& e, std::string_view var);

}  // namespace calcforge::pfrac
