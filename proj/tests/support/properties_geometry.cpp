#include "support/properties.hpp"

#include "calcforge/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace calcforge::testing {

namespace {

using std::numbers::pi;

bool close(double got, double want, double rel) { return std::fabs(got - want) <= rel * std::fabs(want); }

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Outcome geometry_closures() {
    using namespace geom;
    std::ostringstream fails;
    auto expect = [&](const std::string& what, double got, double want, double rel) {
        if (!close(got, want, rel)) fails << what << ": got " << num(got) << " want " << num(want) << "; ";
    };

    for (double r : {1.0, 2.5, 7.0}) {
        const std::string rs = num(r);
        const std::string tag = " R=" + rs;
        expect("disk area" + tag, area(PolarSector{parse(rs), 0, 2 * pi}), pi * r * r, 1e-10);
        expect("circumference" + tag, arc_length(Polar{parse(rs), 0, 2 * pi}), 2 * pi * r, 1e-10);
        const Parametric semicircle{parse(rs + "*cos(t)"), parse(rs + "*sin(t)"), 0, pi};
        expect("sphere surface" + tag, surface_of_revolution(semicircle, Axis::OX), 4 * pi * r * r, 1e-10);
        const CartesianY cap{parse("sqrt(" + rs + "^2 - x^2)"), -r, r};
        expect("sphere surface (cartesian)" + tag, surface_of_revolution(cap, Axis::OX), 4 * pi * r * r, 1e-9);
        expect("ball volume" + tag, volume_of_revolution(cap, Axis::OX), 4.0 / 3.0 * pi * r * r * r, 1e-10);
    }

    // Pappus: circle of radius 1 centred 3 away from OY.
    const Parametric circle{parse("3 + cos(t)"), parse("2 + sin(t)"), 0, 2 * pi};
    expect("Pappus surface", surface_of_revolution(circle, Axis::OY), 2 * pi * 3 * (2 * pi * 1), 1e-9);

    // One disk of radius 2 in three coordinate systems.
    const double cart = area(BetweenCartesian{parse("-sqrt(4 - x^2)"), parse("sqrt(4 - x^2)"), -2, 2});
    const double para = area_parametric(Parametric{parse("2*cos(t)"), parse("2*sin(t)"), 0, 2 * pi});
    const double polar = area(PolarSector{parse("2"), 0, 2 * pi});
    expect("cartesian vs parametric disk", cart, para, 1e-9);
    expect("parametric vs polar disk", para, polar, 1e-9);
    expect("cartesian vs polar disk", cart, polar, 1e-9);

    const std::string f = fails.str();
    return {f.empty(), f.empty() ? "disk, sphere, ball for R in {1, 2.5, 7}; Pappus; three-way disk agreement" : f};
}

}  // namespace calcforge::testing
