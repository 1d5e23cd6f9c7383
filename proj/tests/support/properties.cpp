#include "support/properties.hpp"

#include "calcforge/error.hpp"
#include "calcforge/poly.hpp"
#include "calcforge/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace calcforge::testing {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Expr random_leaf(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: return Expr::var("x");
        case 1: return Expr::var("y");
        case 2: return Expr::pi();
        case 3: return Expr::e();
        case 4: return Expr(Rational(BigInt(std::uniform_int_distribution<int>(0, 999)(rng)), BigInt(4)));
        default: return Expr(std::uniform_int_distribution<int>(0, 99)(rng));
    }
}

struct DerivativeCase {
    const char* text;
    double lo;
    double hi;
};

// Every probe lies strictly inside [lo, hi], where the expression is smooth.
constexpr DerivativeCase kDerivativeCases[] = {
    {"x^3 - 2*x + 1", -2, 2},
    {"sin(x)*cos(x)", -3, 3},
    {"tan(x)", -1.2, 1.2},
    {"cot(x)", 0.2, 3},
    {"arcsin(x/2)", -1.8, 1.8},
    {"arccos(x^2)", -0.9, 0.9},
    {"arctan(3*x)", -2, 2},
    {"arccot(x)", -2, 2},
    {"sh(x)*ch(2*x)", -1.5, 1.5},
    {"th(x)", -2, 2},
    {"cth(x)", 0.3, 3},
    {"arcsh(x^2)", -2, 2},
    {"arcch(x + 2)", 0, 3},
    {"arcth(x/3)", -2, 2},
    {"arccth(x + 3)", 0, 2},
    {"exp(-x^2)", -2, 2},
    {"ln(1 + x^2)", -3, 3},
    {"log2(x)", 0.5, 4},
    {"sqrt(4 - x^2)", -1.8, 1.8},
    {"cbrt(x^2 + 1)", -2, 2},
    {"abs(x - 5)*x", 0, 4},
    {"x^x", 0.5, 3},
    {"2^x", -2, 2},
    {"(x^2 + 1)/(x - 3)", -2, 2},
    {"e^(sin(x))", -3, 3},
    {"x*ln(x) - x", 0.5, 4},
    {"(x^2 + 1)^1.5", -2, 2},
    {"tg(x)^2/ctg(x)", 0.2, 1.2},
    {"sqrt(x)*arctan(sqrt(x))", 0.1, 4},
    {"cos(x^2)/(1 + sh(x)^2)", -2, 2},
};

}  // namespace

Expr random_tree(std::mt19937_64& rng, int max_depth) {
    if (max_depth <= 1 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) return random_leaf(rng);
    switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
        case 0: return Expr::neg(random_tree(rng, max_depth - 1));
        case 1: {
            const auto f = static_cast<Func>(std::uniform_int_distribution<int>(0, kFunctionCount - 1)(rng));
            return Expr::call(f, random_tree(rng, max_depth - 1));
        }
        default: {
            const auto op = static_cast<BinaryOp>(std::uniform_int_distribution<int>(0, 4)(rng));
            return Expr::binary(op, random_tree(rng, max_depth - 1), random_tree(rng, max_depth - 1));
        }
    }
}

Outcome parse_print_round_trip(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Expr t = random_tree(rng, 8);
        const std::string text = to_text(t);
        try {
            if (!(parse(text) == t)) return {false, "tree " + std::to_string(i) + " differs after parse: " + text};
        } catch (const Error& err) {
            return {false, "tree " + std::to_string(i) + " failed to parse: " + err.what()};
        }
    }
    return {true, std::to_string(count) + " trees"};
}

Outcome derivative_vs_finite_difference() {
    double worst = 0.0;
    std::string worst_case;
    int checked = 0;
    for (const auto& c : kDerivativeCases) {
        const Expr f = parse(c.text);
        const Expr df = differentiate(f, "x");
        for (int i = 0; i < 10; ++i) {
            const double x = c.lo + (c.hi - c.lo) * (i + 0.5) / 10.0;
            const double h = 1e-3 * std::max(1.0, std::fabs(x));
            auto g = [&](double t) { return eval(f, "x", t); };
            const double fd = (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12 * h);
            const double exact = eval(df, "x", x);
            const double err = std::fabs(exact - fd) / std::max(1.0, std::fabs(exact));
            if (!std::isfinite(err)) return {false, std::string(c.text) + " not finite at x=" + fmt(x)};
            if (err > worst) {
                worst = err;
                worst_case = std::string(c.text) + " at x=" + fmt(x);
            }
            ++checked;
        }
    }
    const std::string detail = std::to_string(checked) + " points, worst rel err " + fmt(worst) + " (" + worst_case + ")";
    return {worst <= 1e-5 && checked == 300, detail};
}

Outcome quadrature_polynomial_exactness() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_real_distribution<double> lim(-2.0, 2.0);
    double worst = 0.0;
    int trials = 0;
    for (int degree = 0; degree <= 10; ++degree) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> c;
            Expr e(0);
            for (int k = 0; k <= degree; ++k) {
                c.push_back(Rational(BigInt(num(rng)), BigInt(den(rng)) * boost::multiprecision::pow(BigInt(3), k)));
                e = e + Expr(c.back()) * pow(Expr::var("x"), Expr(k));
            }
            // Limits are dyadic so the exact antiderivative uses the same values as the quadrature.
            const double a = std::ldexp(std::round(std::ldexp(lim(rng), 10)), -10);
            const double b = std::ldexp(std::round(std::ldexp(lim(rng), 10)), -10);
            const Poly anti = Poly(c).antiderivative();
            const auto exact_limit = [](double v) {
                return Rational(BigInt(static_cast<long long>(std::ldexp(v, 10))), BigInt(1024));
            };
            const double exact = (anti(exact_limit(b)) - anti(exact_limit(a))).to_double();
            const auto r = quad::integrate_finite(bind(e, "x"), a, b, 1e-10, 1e-12, 50);
            worst = std::max(worst, std::fabs(r.value - exact));
            ++trials;
        }
    }
    return {worst <= 1e-12, std::to_string(trials) + " polynomials of degree 0..10, worst abs err " + fmt(worst)};
}

Outcome quadrature_additivity_orientation() {
    struct Case {
        const char* text;
        double a, b, c;
    };
    const Case cases[] = {
        {"exp(-x^2)", -1, 0.3, 2},
        {"sin(x)^2*ln(1 + x)", 0, 1.7, 4},
        {"1/(1 + x^4)", -3, -0.5, 5},
        {"sqrt(x)*cos(3*x)", 0.1, 2.2, 6},
        {"abs(x - 1)", -1, 0.25, 3},
    };
    for (const auto& c : cases) {
        const auto f = bind(parse(c.text), "x");
        const auto ac = quad::integrate_finite(f, c.a, c.c, 1e-10, 1e-12, 50);
        const auto ab = quad::integrate_finite(f, c.a, c.b, 1e-10, 1e-12, 50);
        const auto bc = quad::integrate_finite(f, c.b, c.c, 1e-10, 1e-12, 50);
        const double gap = std::fabs(ac.value - (ab.value + bc.value));
        const double allowed = 2.0 * (ac.err_estimate + ab.err_estimate + bc.err_estimate) + 1e-12;
        if (gap > allowed)
            return {false, std::string("additivity ") + c.text + ": gap " + fmt(gap) + " > " + fmt(allowed)};
        const auto ca = quad::integrate_finite(f, c.c, c.a, 1e-10, 1e-12, 50);
        if (ca.value != -ac.value) return {false, std::string("orientation ") + c.text};
    }
    return {true, "5 integrands"};
}

Outcome improper_p_family() {
    const double ps[] = {0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0};
    std::ostringstream detail;
    bool ok = true;
    for (double p : ps) {
        std::ostringstream text;
        text.precision(17);
        text << "1/x^" << p;
        quad::IntegralSpec spec;
        spec.integrand = parse(text.str());

        // [1, inf): convergent exactly when p > 1, to 1/(p - 1).
        spec.lower = quad::Bound::finite(1.0);
        spec.upper = quad::Bound::pos_inf();
        const auto first = quad::integrate_improper(spec);
        bool good = p > 1.0 ? first.convergent() &&
                                  std::fabs(std::get<quad::Convergent>(first.status).value - 1.0 / (p - 1.0)) <=
                                      1e-6 / (p - 1.0)
                            : first.divergent() &&
                                  std::get<quad::Divergent>(first.status).direction == quad::Direction::PosInf;

        // (0, 1]: convergent exactly when p < 1, to 1/(1 - p).
        spec.lower = quad::Bound::finite(0.0);
        spec.upper = quad::Bound::finite(1.0);
        const auto second = quad::integrate_improper(spec);
        good = good && (p < 1.0 ? second.convergent() &&
                                      std::fabs(std::get<quad::Convergent>(second.status).value - 1.0 / (1.0 - p)) <=
                                          1e-6 / (1.0 - p)
                                : second.divergent() &&
                                      std::get<quad::Divergent>(second.status).direction == quad::Direction::PosInf);
        if (!good) {
            ok = false;
            detail << "p=" << p << " misclassified; ";
        }
    }
    if (ok) detail << "7 exponents on [1,inf) and (0,1]";
    return {ok, detail.str()};
}

}  // namespace calcforge::testing
