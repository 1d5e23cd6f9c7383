#include "calcforge/geometry.hpp"

#include "calcforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace calcforge::geom {

namespace {

constexpr int kProbeCount = 256;
constexpr double kProbeSlack = 1e-9;
constexpr int kScanCells = 4096;

using std::numbers::pi;

void check_domain(double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw InvalidArgument(std::string(what) + " domain must be a finite interval with lower < upper");
}

Expr d(const Expr& e, const std::string& var) { return simplify(differentiate(e, var)); }
Expr sq(const Expr& e) { return pow(e, Expr(2)); }
Expr root(const Expr& e) { return call(Func::Sqrt, e); }

// Smallest finite value of e at interior probe points; +inf if none is finite.
double probe_min(const Expr& e, const std::string& var, double lo, double hi) {
    double worst = INFINITY;
    for (int i = 0; i < kProbeCount; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / kProbeCount;
        const double v = eval(e, var, x);
        if (std::isfinite(v)) worst = std::min(worst, v);
    }
    return worst;
}

double integrate(const Expr& integrand, const std::string& var, double lo, double hi, const Settings& s) {
    quad::IntegralSpec spec;
    spec.integrand = integrand;
    spec.var = var;
    spec.lower = quad::Bound::finite(lo);
    spec.upper = quad::Bound::finite(hi);
    spec.rel_tol = s.rel_tol;
    spec.abs_tol = s.abs_tol;
    spec.max_depth = s.max_depth;
    const quad::Integration r = quad::integrate(spec, s.improper);
    if (const auto* q = std::get_if<quad::QuadResult>(&r)) return q->value;
    const auto& imp = std::get<quad::ImproperResult>(r);
    if (const auto* c = std::get_if<quad::Convergent>(&imp.status)) return c->value;
    throw QuadratureFailure("integral of " + to_text(integrand) + " over an endpoint singularity did not converge");
}

void require_nonnegative(const Expr& radius, const std::string& var, double lo, double hi, const char* name) {
    const double m = probe_min(radius, var, lo, hi);
    if (m < -kProbeSlack)
        throw NegativeRadius(std::string(name) + " becomes negative (" + std::to_string(m) + ") on the domain");
}

}  // namespace

SymmetryFactor::SymmetryFactor(int k) : k_(k) {
    if (k < 1) throw InvalidArgument("symmetry factor must be >= 1");
}

std::vector<double> find_intersections(const Expr& f, const Expr& g, const std::string& var, double lo, double hi,
                                       std::size_t max_roots) {
    check_domain(lo, hi, "intersection");
    const Expr h = f - g;
    const auto fh = bind(h, var);
    const auto ff = bind(f, var);

    bool identical = true;
    for (int i = 0; i < 16 && identical; ++i) {
        const double x = lo + (hi - lo) * (i + 0.37) / 16.0;
        const double v = fh(x);
        if (!(std::fabs(v) <= 1e-14 * (1.0 + std::fabs(ff(x))))) identical = false;
    }
    if (identical) throw InvalidArgument("the two curves coincide on the probes; intersections are not isolated");

    std::vector<double> xs(kScanCells + 1);
    std::vector<double> hs(kScanCells + 1);
    for (int i = 0; i <= kScanCells; ++i) {
        xs[i] = i == kScanCells ? hi : lo + (hi - lo) * i / kScanCells;
        hs[i] = fh(xs[i]);
    }
    std::vector<double> candidates;
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i <= kScanCells; ++i) {
        if (hs[i] == 0.0) candidates.push_back(xs[i]);
        if (i < kScanCells && std::isfinite(hs[i]) && std::isfinite(hs[i + 1]) && hs[i] * hs[i + 1] < 0.0)
            brackets.emplace_back(xs[i], xs[i + 1]);
    }
    if (candidates.size() + brackets.size() > max_roots) throw TooManyRoots(candidates.size() + brackets.size());

    for (auto [a, b] : brackets) {
        double ha = fh(a);
        for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b) break;
            const double hm = fh(m);
            if (hm == 0.0) {
                a = b = m;
                break;
            }
            if ((hm < 0.0) == (ha < 0.0)) {
                a = m;
                ha = hm;
            } else {
                b = m;
            }
        }
        candidates.push_back(0.5 * (a + b));
    }

    std::vector<double> roots;
    for (double r : candidates) {
        // A sign change across a pole is not a root.
        if (std::fabs(fh(r)) <= 1e-8 * (1.0 + std::fabs(ff(r)))) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
    return out;
}

double area(const Region& region, SymmetryFactor factor, const Settings& s) {
    const double k = factor.value();
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, BetweenCartesian>) {
                check_domain(r.a, r.b, "region");
                const Expr width = r.upper - r.lower;
                if (probe_min(width, r.var, r.a, r.b) < -kProbeSlack)
                    throw InvalidArgument("upper boundary lies below the lower boundary");
                return k * integrate(width, r.var, r.a, r.b, s);
            } else if constexpr (std::is_same_v<T, BetweenCartesianX>) {
                check_domain(r.c, r.d, "region");
                const Expr width = r.right - r.left;
                if (probe_min(width, r.var, r.c, r.d) < -kProbeSlack)
                    throw InvalidArgument("right boundary lies left of the left boundary");
                return k * integrate(width, r.var, r.c, r.d, s);
            } else {
                check_domain(r.phi0, r.phi1, "sector");
                return k * 0.5 * integrate(sq(r.rho), r.var, r.phi0, r.phi1, s);
            }
        },
        region);
}

double area_parametric(const Parametric& c, SymmetryFactor factor, const Settings& s) {
    check_domain(c.t0, c.t1, "parameter");
    return factor.value() * integrate(c.x * d(c.y, c.var), c.var, c.t0, c.t1, s);
}

double arc_length(const Curve& curve, const Settings& s) {
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CartesianY>) {
                check_domain(c.a, c.b, "curve");
                return integrate(root(Expr(1) + sq(d(c.y, c.var))), c.var, c.a, c.b, s);
            } else if constexpr (std::is_same_v<T, CartesianX>) {
                check_domain(c.c, c.d, "curve");
                return integrate(root(Expr(1) + sq(d(c.x, c.var))), c.var, c.c, c.d, s);
            } else if constexpr (std::is_same_v<T, Parametric>) {
                check_domain(c.t0, c.t1, "curve");
                return integrate(root(sq(d(c.x, c.var)) + sq(d(c.y, c.var))), c.var, c.t0, c.t1, s);
            } else {
                check_domain(c.phi0, c.phi1, "curve");
                require_nonnegative(c.rho, c.var, c.phi0, c.phi1, "rho");
                return integrate(root(sq(c.rho) + sq(d(c.rho, c.var))), c.var, c.phi0, c.phi1, s);
            }
        },
        curve);
}

double surface_of_revolution(const Curve& curve, Axis axis, SymmetryFactor factor, const Settings& s) {
    const double k = factor.value() * 2.0 * pi;
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CartesianY>) {
                check_domain(c.a, c.b, "curve");
                if (axis == Axis::PolarAxis) throw InvalidArgument("the polar axis applies to polar curves only");
                const Expr radius = axis == Axis::OX ? c.y : Expr::var(c.var);
                require_nonnegative(radius, c.var, c.a, c.b, axis == Axis::OX ? "y" : "x");
                return k * integrate(radius * root(Expr(1) + sq(d(c.y, c.var))), c.var, c.a, c.b, s);
            } else if constexpr (std::is_same_v<T, CartesianX>) {
                check_domain(c.c, c.d, "curve");
                if (axis == Axis::PolarAxis) throw InvalidArgument("the polar axis applies to polar curves only");
                const Expr radius = axis == Axis::OY ? c.x : Expr::var(c.var);
                require_nonnegative(radius, c.var, c.c, c.d, axis == Axis::OY ? "x" : "y");
                return k * integrate(radius * root(Expr(1) + sq(d(c.x, c.var))), c.var, c.c, c.d, s);
            } else if constexpr (std::is_same_v<T, Parametric>) {
                check_domain(c.t0, c.t1, "curve");
                if (axis == Axis::PolarAxis) throw InvalidArgument("the polar axis applies to polar curves only");
                const Expr radius = axis == Axis::OX ? c.y : c.x;
                require_nonnegative(radius, c.var, c.t0, c.t1, axis == Axis::OX ? "y" : "x");
                return k * integrate(radius * root(sq(d(c.x, c.var)) + sq(d(c.y, c.var))), c.var, c.t0, c.t1, s);
            } else {
                check_domain(c.phi0, c.phi1, "curve");
                require_nonnegative(c.rho, c.var, c.phi0, c.phi1, "rho");
                const Expr phi = Expr::var(c.var);
                // The polar axis is the OX axis of the underlying plane.
                const Expr radius = axis == Axis::OY ? c.rho * call(Func::Cos, phi) : c.rho * call(Func::Sin, phi);
                require_nonnegative(radius, c.var, c.phi0, c.phi1, "distance to the axis");
                return k * integrate(radius * root(sq(c.rho) + sq(d(c.rho, c.var))), c.var, c.phi0, c.phi1, s);
            }
        },
        curve);
}

double volume_of_revolution(const Region& region, Axis axis, SymmetryFactor factor, const Settings& s) {
    const double k = factor.value();
    auto washer = [&](const Expr& outer, const Expr& inner, const std::string& var, double lo, double hi) {
        check_domain(lo, hi, "profile");
        if (probe_min(sq(outer) - sq(inner), var, lo, hi) < -kProbeSlack)
            throw ProfileOrderViolated("inner profile exceeds the outer profile on the interval");
        return k * pi * integrate(sq(outer) - sq(inner), var, lo, hi, s);
    };
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, BetweenCartesian>) {
                if (axis != Axis::OX) throw InvalidArgument("a y-between region revolves about OX");
                return washer(r.upper, r.lower, r.var, r.a, r.b);
            } else if constexpr (std::is_same_v<T, BetweenCartesianX>) {
                if (axis != Axis::OY) throw InvalidArgument("an x-between region revolves about OY");
                return washer(r.right, r.left, r.var, r.c, r.d);
            } else {
                if (axis == Axis::OY) throw InvalidArgument("a polar sector revolves about the polar axis");
                check_domain(r.phi0, r.phi1, "sector");
                if (r.phi0 < 0.0 || r.phi1 > pi + 1e-12)
                    throw InvalidArgument("the polar angle domain must lie within [0, pi]");
                return k * 2.0 * pi / 3.0 *
                       integrate(pow(r.rho, Expr(3)) * call(Func::Sin, Expr::var(r.var)), r.var, r.phi0, r.phi1, s);
            }
        },
        region);
}

double volume_of_revolution(const Curve& curve, Axis axis, SymmetryFactor factor, const Settings& s) {
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CartesianY>) {
                return volume_of_revolution(Region{BetweenCartesian{Expr(0), c.y, c.a, c.b, c.var}}, axis, factor, s);
            } else if constexpr (std::is_same_v<T, CartesianX>) {
                return volume_of_revolution(Region{BetweenCartesianX{Expr(0), c.x, c.c, c.d, c.var}}, axis, factor, s);
            } else if constexpr (std::is_same_v<T, Polar>) {
                return volume_of_revolution(Region{PolarSector{c.rho, c.phi0, c.phi1, c.var}}, axis, factor, s);
            } else {
                throw InvalidArgument("volumes of parametric curves are not supported");
                return 0.0;
            }
        },
        curve);
}

}  // namespace calcforge::geom
