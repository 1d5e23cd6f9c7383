#pragma once

#include "calcforge/expr.hpp"
#include "calcforge/quadrature.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace calcforge::geom {

/// y = y(x), a <= x <= b
struct CartesianY {
    Expr y;
    double a = 0.0;
    double b = 0.0;
    std::string var = "x";
};

/// x = x(y), c <= y <= d
struct CartesianX {
    Expr x;
    double c = 0.0;
    double d = 0.0;
    std::string var = "y";
};

struct Parametric {
    Expr x;
    Expr y;
    double t0 = 0.0;
    double t1 = 0.0;
    std::string var = "t";
};

/// rho = rho(phi) >= 0
struct Polar {
    Expr rho;
    double phi0 = 0.0;
    double phi1 = 0.0;
    std::string var = "phi";
};

using Curve = std::variant<CartesianY, CartesianX, Parametric, Polar>;

/// lower(x) <= y <= upper(x), a <= x <= b
struct BetweenCartesian {
    Expr lower;
    Expr upper;
    double a = 0.0;
    double b = 0.0;
    std::string var = "x";
};

/// left(y) <= x <= right(y), c <= y <= d
struct BetweenCartesianX {
    Expr left;
    Expr right;
    double c = 0.0;
    double d = 0.0;
    std::string var = "y";
};

/// 0 <= r <= rho(phi), phi0 <= phi <= phi1
struct PolarSector {
    Expr rho;
    double phi0 = 0.0;
    double phi1 = 0.0;
    std::string var = "phi";
};

using Region = std::variant<BetweenCartesian, BetweenCartesianX, PolarSector>;

enum class Axis { OX, OY, PolarAxis };

/// Number of congruent copies of the computed piece; at least 1.
class SymmetryFactor {
public:
    SymmetryFactor() = default;
    explicit SymmetryFactor(int k);
    int value() const noexcept { return k_; }

private:
    int k_ = 1;
};

struct Settings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
    quad::ImproperConfig improper;
};

/// Roots of f - g on [lo, hi] from sign changes on a 4096-cell scan, refined by bisection.
/// Throws TooManyRoots above max_roots and InvalidArgument when f and g coincide at every probe.
std::vector<double> find_intersections(const Expr& f, const Expr& g, const std::string& var, double lo, double hi,
                                       std::size_t max_roots = 64);

double area(const Region& region, SymmetryFactor factor = {}, const Settings& s = {});

/// factor * integral of x(t) y'(t) dt; signed, the caller orients t.
double area_parametric(const Parametric& c, SymmetryFactor factor = {}, const Settings& s = {});

double arc_length(const Curve& c, const Settings& s = {});

/// Throws NegativeRadius when the revolved coordinate is negative somewhere on the domain.
double surface_of_revolution(const Curve& c, Axis axis, SymmetryFactor factor = {}, const Settings& s = {});

/// Washer method for BetweenCartesian about OX and BetweenCartesianX about OY;
/// (2 pi / 3) * integral of rho^3 sin(phi) for a PolarSector inside [0, pi].
/// Throws ProfileOrderViolated when the inner profile exceeds the outer one.
double volume_of_revolution(const Region& region, Axis axis, SymmetryFactor factor = {}, const Settings& s = {});

/// Solid swept by the area under a single curve.
double volume_of_revolution(const Curve& curve, Axis axis, SymmetryFactor factor = {}, const Settings& s = {});

}  // namespace calcforge::geom
