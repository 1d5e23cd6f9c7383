#pragma once

#include "calcforge/poly.hpp"
#include "calcforge/rational.hpp"

#include <vector>

namespace calcforge {

struct RootMultiplicity {
    Rational root;
    int multiplicity = 1;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Monic quadratic x^2 + b*x + c with b^2 - 4c < 0.
struct QuadraticFactor {
    Rational b;
    Rational c;
    int multiplicity = 1;

    Poly poly() const { return Poly({c, b, Rational(1)}); }
    Rational discriminant() const { return b * b - Rational(4) * c; }
    friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

/// p = constant * prod (x - root)^m * prod (x^2 + bx + c)^m
struct Factorization {
    Rational constant;
    std::vector<RootMultiplicity> linear;
    std::vector<QuadraticFactor> quadratics;

    Poly expand() const;
};

/// All rational roots of p with multiplicities, ascending by root.
std::vector<RootMultiplicity> rational_roots(const Poly& p);

/// Splits p into rational linear factors and irreducible quadratics.
/// Throws IrreducibleRemainder when a cofactor falls outside that class.
Factorization factorize(const Poly& p);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination; throws SingularSystem.
std::vector<Rational> solve_linear_exact(RationalMatrix a, std::vector<Rational> b);

/// p scaled by the lcm of its denominators, so every coefficient is an integer.
Poly clear_denominators(const Poly& p);

}  // namespace calcforge
