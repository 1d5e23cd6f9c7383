#include "calcforge/error.hpp"
#include "calcforge/geometry.hpp"
#include "support/properties.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace calcforge;
using namespace calcforge::geom;
using std::numbers::pi;

namespace {

void check_rel(double got, double want, double rel = 1e-6) {
    CHECK(std::fabs(got - want) <= rel * std::fabs(want));
}

}  // namespace

TEST_CASE("intersections") {
    const auto a = find_intersections(parse("2*x^2 - 10*x + 6"), parse("x^2 - 3*x"), "x", -10, 10);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(a[1] == doctest::Approx(6.0).epsilon(1e-11));

    const auto b = find_intersections(parse("x^2 + 2*x + 5"), parse("5 - x"), "x", -10, 10);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == doctest::Approx(-3.0).epsilon(1e-11));
    CHECK(std::fabs(b[1]) < 1e-11);

    CHECK_THROWS_AS(find_intersections(parse("x"), parse("x"), "x", 0, 1), InvalidArgument);
    CHECK_THROWS_AS(find_intersections(parse("sin(50*x)"), parse("0"), "x", 0.1, 10, 8), TooManyRoots);
    // A sign change across a pole is not an intersection.
    CHECK(find_intersections(parse("1/(x - 0.3)"), parse("0"), "x", 0.05, 1).empty());
}

TEST_CASE("intersection soundness") {
    const std::pair<const char*, const char*> pairs[] = {
        {"sin(x)", "cos(x)"}, {"x^3", "x + 0.25"}, {"exp(x)", "3 - x^2"}, {"ln(x + 2)", "x/3"}, {"tg(x)", "x + 0.5"},
    };
    for (const auto& [f, g] : pairs) {
        const Expr fe = parse(f);
        const Expr ge = parse(g);
        for (double r : find_intersections(fe, ge, "x", -1.4, 1.4)) {
            const double fr = eval(fe, "x", r);
            CHECK(std::fabs(fr - eval(ge, "x", r)) <= 1e-8 * (1 + std::fabs(fr)));
        }
    }
}

TEST_CASE("areas") {
    check_rel(area(BetweenCartesian{parse("2*x^2 - 10*x + 6"), parse("x^2 - 3*x"), 1, 6}), 125.0 / 6.0);
    check_rel(area_parametric(Parametric{parse("4*cos(t)^3"), parse("4*sin(t)^3"), pi / 6, pi / 2}, SymmetryFactor(2)),
              2 * pi);
    check_rel(area(PolarSector{parse("4*sin(3*phi)"), 0, pi / 3}, SymmetryFactor(3)), 4 * pi);
    CHECK(area_parametric(Parametric{parse("t"), parse("0"), 0, 1}) == 0.0);
    check_rel(area_parametric(Parametric{parse("cos(t)"), parse("sin(t)"), 0, pi}, SymmetryFactor(2)), pi);
    CHECK_THROWS_AS(area(BetweenCartesian{parse("x"), parse("0"), 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(SymmetryFactor(0), InvalidArgument);
}

TEST_CASE("arc lengths") {
    check_rel(arc_length(CartesianY{parse("1/3*ln(cos(3*x))"), 0, pi / 18}), std::log(3.0) / 6.0);
    check_rel(arc_length(Parametric{parse("4*(t - sin(t))"), parse("4*(1 - cos(t))"), 0, 2 * pi}), 32.0);
    check_rel(arc_length(CartesianY{parse("2*x"), 0, 1}), std::sqrt(5.0), 1e-12);
    check_rel(arc_length(Polar{parse("10/sqrt(101)*e^(phi/10)"), 0, 2 * pi}), 10 * (std::exp(pi / 5) - 1));
    // Astroid arc in cartesian form has an infinite slope at x = 2.
    check_rel(arc_length(CartesianY{parse("(2^(2/3) - x^(2/3))^1.5"), 0, 2}), 3.0, 1e-6);
}

TEST_CASE("surfaces") {
    check_rel(surface_of_revolution(CartesianY{parse("1/2*ch(2*x)"), -1, 1}, Axis::OX), pi * (1 + std::sinh(4.0) / 4));
    check_rel(surface_of_revolution(Parametric{parse("3 + cos(t)"), parse("2 + sin(t)"), 0, 2 * pi}, Axis::OY),
              12 * pi * pi);
    check_rel(surface_of_revolution(Polar{parse("sqrt(cos(2*phi))"), 0, pi / 4}, Axis::PolarAxis, SymmetryFactor(2)),
              2 * pi * (2 - std::sqrt(2.0)));
    check_rel(surface_of_revolution(CartesianY{parse("1"), 0, 1}, Axis::OX), 2 * pi, 1e-12);
    CHECK_THROWS_AS(surface_of_revolution(CartesianY{parse("x - 1"), 0, 2}, Axis::OX), NegativeRadius);
}

TEST_CASE("volumes") {
    check_rel(volume_of_revolution(Region{BetweenCartesian{parse("x^2 + 2*x + 5"), parse("5 - x"), -3, 0}}, Axis::OX),
              50.4 * pi);
    check_rel(volume_of_revolution(Region{BetweenCartesianX{parse("5"), parse("5 + 4*y - y^2"), 0, 4}}, Axis::OY),
              140.8 * pi);
    check_rel(volume_of_revolution(Region{PolarSector{parse("6*(1 + cos(phi))"), 0, pi}}, Axis::PolarAxis),
              576 * pi);
    CHECK_THROWS_AS(
        volume_of_revolution(Region{BetweenCartesian{parse("5 - x"), parse("x^2 + 2*x + 5"), -3, 0}}, Axis::OX),
        ProfileOrderViolated);
    CHECK_THROWS_AS(volume_of_revolution(Region{PolarSector{parse("1"), 0, 2 * pi}}, Axis::PolarAxis), InvalidArgument);
}

TEST_CASE("disk, sphere, Pappus and coordinate agreement") {
    const auto r = testing::geometry_closures();
    INFO(r.detail);
    CHECK(r.ok);
}
