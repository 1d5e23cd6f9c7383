#include "calcforge/poly.hpp"

#include "calcforge/error.hpp"

#include <algorithm>

namespace calcforge {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::linear(const Rational& root) { return Poly({-root, Rational(1)}); }

Poly Poly::monomial(Rational c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + 1] = coeffs_[i] / Rational(static_cast<std::int64_t>(i + 1));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (coeffs_.empty()) return {};
    return *this * leading().reciprocal();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Poly Poly::pow(int exponent) const {
    if (exponent < 0) throw InvalidArgument("negative polynomial power");
    Poly result = Poly::constant(1);
    for (int i = 0; i < exponent; ++i) result *= *this;
    return result;
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            out += mag.to_string();
            if (i > 0) out += "*";
        }
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw DivisionByZeroPoly();
    if (n.degree() < d.degree()) return {Poly{}, n};
    std::vector<Rational> rem = n.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(n.degree() - d.degree() + 1));
    const Rational& lead = d.leading();
    const auto dd = static_cast<std::size_t>(d.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dd] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs()[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

}  // namespace calcforge
