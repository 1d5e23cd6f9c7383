#include "calcforge/corpus.hpp"
#include "calcforge/geometry.hpp"
#include "calcforge/partial_fractions.hpp"

#include <cmath>
#include <algorithm>

namespace calcforge::corpus {

namespace {

constexpr int kProbes = 10;
constexpr int kMinValidProbes = 5;

std::string var_or(const Problem& p, const char* fallback) { return p.has("var") ? p.text("var") : fallback; }

geom::SymmetryFactor factor_of(const Problem& p) {
    return p.has("factor") ? geom::SymmetryFactor(static_cast<int>(p.number("factor"))) : geom::SymmetryFactor{};
}

geom::Axis axis_of(const Problem& p, geom::Axis fallback) {
    if (!p.has("axis")) return fallback;
    const std::string& a = p.text("axis");
    if (a == "oy") return geom::Axis::OY;
    if (a == "polar") return geom::Axis::PolarAxis;
    return geom::Axis::OX;
}

geom::Settings settings_of(const EngineConfig& cfg) {
    return geom::Settings{cfg.rel_tol, cfg.abs_tol, cfg.max_depth, cfg.improper};
}

geom::Curve curve_of(const Problem& p) {
    if (p.has("rho")) return geom::Polar{p.expr("rho"), p.number("phi_from"), p.number("phi_to"), var_or(p, "phi")};
    if (p.has("t_from"))
        return geom::Parametric{p.expr("x"), p.expr("y"), p.number("t_from"), p.number("t_to"), var_or(p, "t")};
    if (p.has("y")) return geom::CartesianY{p.expr("y"), p.number("a"), p.number("b"), var_or(p, "x")};
    return geom::CartesianX{p.expr("x"), p.number("a"), p.number("b"), var_or(p, "y")};
}

Computation value(double v, double err = 0.0) {
    Computation c;
    c.value = v;
    c.err_estimate = err;
    return c;
}

Computation integral(const Problem& p, const EngineConfig& cfg) {
    quad::IntegralSpec spec;
    spec.integrand = p.expr("integrand");
    spec.var = var_or(p, "x");
    const double lo = p.number("lower");
    const double hi = p.number("upper");
    spec.lower = std::isinf(lo) ? quad::Bound::neg_inf() : quad::Bound::finite(lo);
    spec.upper = std::isinf(hi) ? quad::Bound::pos_inf() : quad::Bound::finite(hi);
    spec.rel_tol = cfg.rel_tol;
    spec.abs_tol = cfg.abs_tol;
    spec.max_depth = cfg.max_depth;

    const quad::Integration r = p.kind == Kind::Improper ? quad::Integration{quad::integrate_improper(spec, cfg.improper)}
                                                         : quad::integrate(spec, cfg.improper);
    if (const auto* q = std::get_if<quad::QuadResult>(&r)) {
        Computation c = value(q->value, q->err_estimate);
        if (q->depth_hit) c.text = "depth limit reached";
        return c;
    }
    const auto& imp = std::get<quad::ImproperResult>(r);
    if (const auto* conv = std::get_if<quad::Convergent>(&imp.status)) return value(conv->value, conv->err);
    Computation c;
    if (const auto* div = std::get_if<quad::Divergent>(&imp.status)) {
        c.shape = Computation::Shape::Divergent;
        c.direction = div->direction;
    } else {
        c.shape = Computation::Shape::Inconclusive;
    }
    c.value = imp.partials.empty() ? std::nan("") : imp.partials.back().value;
    return c;
}

constexpr double kAbsFloor = 1e-12;

// Distance of one probe from the pass boundary "rel <= tol or abs <= 1e-12"; above 1 fails.
double probe_error(double derivative, double integrand, double tol) {
    const double abs = std::fabs(derivative - integrand);
    const double rel = integrand == 0.0 ? (abs == 0.0 ? 0.0 : HUGE_VAL) : abs / std::fabs(integrand);
    return std::min(rel / tol, abs / kAbsFloor);
}

// Compares d/dx candidate against the integrand at kProbes points of [lo, hi], keeping the worst probe.
void derivative_check(Computation& c, const Expr& candidate, const Expr& integrand, const std::string& var, double lo,
                      double hi, double tol) {
    const auto f = calcforge::bind(integrand, var);
    const auto df = calcforge::bind(simplify(differentiate(candidate, var)), var);
    int valid = 0;
    for (int i = 0; i < kProbes; ++i) {
        const double x = lo + (hi - lo) * (i + 0.41421356) / kProbes;
        const double want = f(x);
        const double got = df(x);
        if (!std::isfinite(want) || !std::isfinite(got)) continue;
        ++valid;
        if (valid == 1 || probe_error(got, want, tol) > probe_error(c.derivative, c.integrand, tol)) {
            c.derivative = got;
            c.integrand = want;
        }
    }
    c.valid_probes = c.valid_probes == 0 ? valid : std::min(c.valid_probes, valid);
    if (valid < kMinValidProbes)
        throw InvalidArgument("only " + std::to_string(valid) + " of " + std::to_string(kProbes) +
                              " probe points are in the domain");
}

Computation indefinite(const Problem& p) {
    Computation c;
    c.shape = Computation::Shape::DerivativeCheck;
    const std::string var = var_or(p, "x");
    derivative_check(c, p.expr("expected"), p.expr("integrand"), var, p.number("probe_lo"), p.number("probe_hi"), p.tol_rel);
    return c;
}

Computation partial_fractions(const Problem& p) {
    const std::string var = var_or(p, "x");
    const Expr num_e = p.expr("num");
    const Expr den_e = p.expr("den");
    const Poly num = pfrac::to_poly(num_e, var);
    const Poly den = pfrac::to_poly(den_e, var);
    const pfrac::PFDecomposition d = pfrac::decompose(num, den);
    const Expr anti = pfrac::to_expr(pfrac::antiderivative(d), var);

    Computation c;
    c.shape = Computation::Shape::DerivativeCheck;
    c.recomposed = pfrac::recompose_numerator(d, den) == num;
    c.text = to_text(anti);
    const double lo = p.has("probe_lo") ? p.number("probe_lo") : -10.0;
    const double hi = p.has("probe_hi") ? p.number("probe_hi") : 10.0;
    const Expr integrand = num_e / den_e;

    // The stated answer and the engine's own antiderivative must both differentiate back.
    Computation own = c;
    derivative_check(c, p.expr("expected"), integrand, var, lo, hi, p.tol_rel);
    derivative_check(own, anti, integrand, var, lo, hi, p.tol_rel);
    if (probe_error(own.derivative, own.integrand, p.tol_rel) > probe_error(c.derivative, c.integrand, p.tol_rel)) {
        c.derivative = own.derivative;
        c.integrand = own.integrand;
    }
    c.valid_probes = std::min(c.valid_probes, own.valid_probes);
    return c;
}

Computation area_between(const Problem& p, const EngineConfig& cfg) {
    const std::string var = var_or(p, "x");
    const Expr lower = p.expr("lower_fn");
    const Expr upper = p.expr("upper_fn");
    double a = 0.0;
    double b = 0.0;
    if (p.has("a")) {
        a = p.number("a");
        b = p.number("b");
    } else {
        const auto roots = geom::find_intersections(lower, upper, var, p.number("bracket_lo"), p.number("bracket_hi"));
        if (roots.size() < 2)
            throw InvalidArgument("the curves meet " + std::to_string(roots.size()) +
                                  " times inside the bracket; two are needed");
        a = roots.front();
        b = roots.back();
    }
    return value(geom::area(geom::BetweenCartesian{lower, upper, a, b, var}, factor_of(p), settings_of(cfg)));
}

Computation intersections(const Problem& p) {
    Computation c;
    c.shape = Computation::Shape::Roots;
    const std::size_t max_roots = p.has("max_roots") ? static_cast<std::size_t>(p.number("max_roots")) : 64;
    c.roots = geom::find_intersections(p.expr("f"), p.expr("g"), var_or(p, "x"), p.number("lo"), p.number("hi"),
                                       max_roots);
    return c;
}

}  // namespace

Computation compute(const Problem& p, const EngineConfig& cfg) {
    const geom::Settings s = settings_of(cfg);
    switch (p.kind) {
        case Kind::Definite:
        case Kind::Improper: return integral(p, cfg);
        case Kind::IndefiniteCheck: return indefinite(p);
        case Kind::Pfrac: return partial_fractions(p);
        case Kind::AreaBetween: return area_between(p, cfg);
        case Kind::AreaParametric:
            return value(geom::area_parametric(
                geom::Parametric{p.expr("x"), p.expr("y"), p.number("t_from"), p.number("t_to"), var_or(p, "t")},
                factor_of(p), s));
        case Kind::AreaPolar:
            return value(geom::area(
                geom::PolarSector{p.expr("rho"), p.number("phi_from"), p.number("phi_to"), var_or(p, "phi")},
                factor_of(p), s));
        case Kind::Arclen: return value(geom::arc_length(curve_of(p), s));
        case Kind::Surface:
            return value(geom::surface_of_revolution(curve_of(p), axis_of(p, geom::Axis::OX), factor_of(p), s));
        case Kind::VolumeWasher: {
            const geom::Axis axis = axis_of(p, geom::Axis::OX);
            const Expr outer = p.expr("outer");
            const Expr inner = p.has("inner") ? p.expr("inner") : parse("0");
            const double a = p.number("a");
            const double b = p.number("b");
            const geom::Region region =
                axis == geom::Axis::OY
                    ? geom::Region{geom::BetweenCartesianX{inner, outer, a, b, var_or(p, "y")}}
                    : geom::Region{geom::BetweenCartesian{inner, outer, a, b, var_or(p, "x")}};
            return value(geom::volume_of_revolution(region, axis, factor_of(p), s));
        }
        case Kind::VolumePolar:
            return value(geom::volume_of_revolution(
                geom::Region{geom::PolarSector{p.expr("rho"), p.number("phi_from"), p.number("phi_to"),
                                               var_or(p, "phi")}},
                axis_of(p, geom::Axis::PolarAxis), factor_of(p), s));
        case Kind::Intersections: return intersections(p);
    }
    throw InvalidArgument("unhandled problem kind");
}

}  // namespace calcforge::corpus
