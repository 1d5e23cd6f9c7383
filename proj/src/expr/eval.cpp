#include "calcforge/error.hpp"
#include "calcforge/expr.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace calcforge {

namespace {

double binary(BinaryOp op, double a, double b) {
    switch (op) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div: return a / b;
        case BinaryOp::Pow: return std::pow(a, b);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

template <class Lookup>
double eval_with(const Expr& e, const Lookup& lookup) {
    return std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) return n.approx;
            else if constexpr (std::is_same_v<T, node::Constant>)
                return n.which == NamedConstant::Pi ? std::numbers::pi : std::numbers::e;
            else if constexpr (std::is_same_v<T, node::Variable>) return lookup(n.name);
            else if constexpr (std::is_same_v<T, node::Negate>) return -eval_with(*n.arg, lookup);
            else if constexpr (std::is_same_v<T, node::Binary>)
                return binary(n.op, eval_with(*n.lhs, lookup), eval_with(*n.rhs, lookup));
            else return apply_function(n.func, eval_with(*n.arg, lookup));
        },
        e.node());
}

void check_only_var(const Expr& e, const std::string& var) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Variable>) {
                if (n.name != var) throw UnboundVariable(n.name);
            } else if constexpr (std::is_same_v<T, node::Negate> || std::is_same_v<T, node::Call>) {
                check_only_var(*n.arg, var);
            } else if constexpr (std::is_same_v<T, node::Binary>) {
                check_only_var(*n.lhs, var);
                check_only_var(*n.rhs, var);
            }
        },
        e.node());
}

// Returns the value of e and folds the magnitude of every var-dependent subterm into max_mag.
double probe(const Expr& e, std::string_view var, double x, double& max_mag) {
    const double v = std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) return n.approx;
            else if constexpr (std::is_same_v<T, node::Constant>)
                return n.which == NamedConstant::Pi ? std::numbers::pi : std::numbers::e;
            else if constexpr (std::is_same_v<T, node::Variable>) {
                if (n.name != var) throw UnboundVariable(n.name);
                return x;
            } else if constexpr (std::is_same_v<T, node::Negate>) return -probe(*n.arg, var, x, max_mag);
            else if constexpr (std::is_same_v<T, node::Binary>) {
                double a = probe(*n.lhs, var, x, max_mag);
                double b = probe(*n.rhs, var, x, max_mag);
                return binary(n.op, a, b);
            } else return apply_function(n.func, probe(*n.arg, var, x, max_mag));
        },
        e.node());
    if (e.depends_on(var)) {
        const double mag = std::isfinite(v) ? std::fabs(v) : std::numeric_limits<double>::infinity();
        if (mag > max_mag || std::isnan(max_mag)) max_mag = mag;
    }
    return v;
}

}  // namespace

double eval(const Expr& e, const Binding& binding) {
    return eval_with(e, [&](const std::string& name) {
        auto it = binding.find(name);
        if (it == binding.end()) throw UnboundVariable(name);
        return it->second;
    });
}

double eval(const Expr& e, std::string_view var, double value) {
    return eval_with(e, [&](const std::string& name) {
        if (name != var) throw UnboundVariable(name);
        return value;
    });
}

std::function<double(double)> bind(const Expr& e, std::string var) {
    check_only_var(e, var);
    return [e, var = std::move(var)](double x) {
        return eval_with(e, [&](const std::string&) { return x; });
    };
}

double max_subterm_magnitude(const Expr& e, std::string_view var, double value) {
    double max_mag = 0.0;
    probe(e, var, value, max_mag);
    return max_mag;
}

}  // namespace calcforge
