#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace calcforge {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Lexical, UnknownFunction, UnbalancedParens, TrailingTokens, UnexpectedToken };

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
        : Error(what + " at byte " + std::to_string(offset)), kind_(kind), offset_(offset) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DivisionByZeroPoly : public Error {
public:
    DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

class IrreducibleRemainder : public Error {
public:
    explicit IrreducibleRemainder(int degree)
        : Error("cofactor of degree " + std::to_string(degree) +
                " has no rational roots and does not split into irreducible quadratics"),
          degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class SingularSystem : public Error {
public:
    SingularSystem() : Error("linear system is singular") {}
};

class RepeatedQuadratic : public Error {
public:
    RepeatedQuadratic() : Error("repeated irreducible quadratic factors are not supported") {}
};

class NotPolynomial : public Error {
public:
    using Error::Error;
};

/// The integrand was NaN or infinite at an interior quadrature node.
class NonFiniteSample : public Error {
public:
    explicit NonFiniteSample(double x)
        : Error("integrand is not finite at x = " + std::to_string(x)), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

class TooManyRoots : public Error {
public:
    explicit TooManyRoots(std::size_t found)
        : Error("found " + std::to_string(found) + " sign changes, more than allowed") {}
};

class NegativeRadius : public Error {
public:
    using Error::Error;
};

class ProfileOrderViolated : public Error {
public:
    using Error::Error;
};

/// Inputs violate an operation's documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An improper integral needed for a geometric quantity did not converge.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

}  // namespace calcforge
