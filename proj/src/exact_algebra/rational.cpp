#include "calcforge/rational.hpp"

#include "calcforge/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string_view>

namespace calcforge {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw InvalidArgument("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
}

namespace {

// Base-10 integer with optional sign. Leading zeros must not switch the parser to octal.
BigInt decimal_integer(std::string_view text, const std::string& whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw InvalidArgument("bad rational literal '" + whole + "'");
    BigInt v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw InvalidArgument("bad rational literal '" + whole + "'");
        v = v * 10 + (c - '0');
    }
    return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty rational literal");
    const std::string_view view(text);
    auto slash = view.find('/');
    if (slash != std::string::npos)
        return Rational(decimal_integer(view.substr(0, slash), text), decimal_integer(view.substr(slash + 1), text));
    auto dot = view.find('.');
    if (dot == std::string::npos) return Rational(decimal_integer(view, text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    const BigInt den = mp::pow(BigInt(10), static_cast<unsigned>(frac_len));
    return Rational(decimal_integer(digits, text), den);
}

double Rational::to_double() const {
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (num_.sign() < 0) return std::nullopt;
    BigInt rn = isqrt(num_);
    BigInt rd = isqrt(den_);
    if (rn * rn != num_ || rd * rd != den_) return std::nullopt;
    return Rational(rn, rd, Reduced{});
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw InvalidArgument("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    auto e = static_cast<unsigned>(exponent);
    return Rational(mp::pow(num_, e), mp::pow(den_, e), Reduced{});
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw InvalidArgument("rational division by zero");
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt isqrt(const BigInt& n) {
    if (n.sign() < 0) throw InvalidArgument("isqrt of negative integer");
    return mp::sqrt(n);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    return mp::abs(a / mp::gcd(a, b) * b);
}

}  // namespace calcforge
