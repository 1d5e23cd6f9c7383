#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace calcforge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d);

    /// Parses "123", "-4", "7/3", "2.25".
    static Rational from_string(const std::string& text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    double to_double() const;
    std::string to_string() const;

    /// Exact square root when both numerator and denominator are perfect squares.
    std::optional<Rational> exact_sqrt() const;

    Rational abs() const { return Rational(boost::multiprecision::abs(num_), den_, Reduced{}); }
    Rational reciprocal() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(int exponent) const;

    Rational operator-() const { return Rational(-num_, den_, Reduced{}); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Reduced {};
    Rational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace calcforge
