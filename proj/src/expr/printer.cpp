#include "calcforge/expr.hpp"

#include <optional>

namespace calcforge {

namespace {

// Terminating decimal text of a nonnegative rational, if one exists.
std::optional<std::string> decimal_text(const Rational& r) {
    BigInt den = r.den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return std::nullopt;
    const unsigned places = std::max(twos, fives);
    BigInt scaled = r.num() * boost::multiprecision::pow(BigInt(10), places) / r.den();
    std::string digits = scaled.str();
    if (places == 0) return digits;
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return digits;
}

std::string number_text(const Rational& r) {
    if (r.sign() >= 0) {
        if (auto d = decimal_text(r)) return *d;
        return "(" + r.num().str() + "/" + r.den().str() + ")";
    }
    Rational mag = r.abs();
    if (auto d = decimal_text(mag)) return "(-" + *d + ")";
    return "(-" + mag.num().str() + "/" + mag.den().str() + ")";
}

char op_char(BinaryOp op) {
    switch (op) {
        case BinaryOp::Add: return '+';
        case BinaryOp::Sub: return '-';
        case BinaryOp::Mul: return '*';
        case BinaryOp::Div: return '/';
        case BinaryOp::Pow: return '^';
    }
    return '?';
}

void emit(const Expr& e, std::string& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                out += number_text(n.value);
            } else if constexpr (std::is_same_v<T, node::Constant>) {
                out += n.which == NamedConstant::Pi ? "pi" : "e";
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                out += n.name;
            } else if constexpr (std::is_same_v<T, node::Negate>) {
                out += "(-";
                emit(*n.arg, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, node::Binary>) {
                out += '(';
                emit(*n.lhs, out);
                out += op_char(n.op);
                emit(*n.rhs, out);
                out += ')';
            } else {
                out += '(';
                out += function_name(n.func);
                out += '(';
                emit(*n.arg, out);
                out += "))";
            }
        },
        e.node());
}

}  // namespace

std::string to_text(const Expr& e) {
    std::string out;
    emit(e, out);
    return out;
}

}  // namespace calcforge
