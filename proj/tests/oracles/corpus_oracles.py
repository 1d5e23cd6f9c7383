"""Independent closed forms and numeric checks for the shipped corpora (sympy + mpmath)."""
import sympy as sp
from mpmath import mp, quad, sqrt as msqrt, inf, mpf

mp.dps = 30
x, t, phi, y = sp.symbols("x t phi y", real=True)


def check_antiderivative(name, integrand, anti, var, lo, hi):
    d = sp.diff(anti, var) - integrand
    worst = 0
    for i in range(10):
        v = lo + (hi - lo) * (i + 0.41421356) / 10
        val = complex(d.evalf(40, subs={var: sp.Float(repr(v), 40)}))
        worst = max(worst, abs(val))
    print(f"{name:14s} derivative residual {worst:.2e}")
    assert worst < 1e-20, name


def check_value(name, numeric, closed):
    c = sp.N(closed, 30)
    err = abs(mpf(str(numeric)) - mpf(str(c)))
    print(f"{name:14s} {float(c):.17g} |quad - closed| = {float(err):.2e}")
    assert err < 1e-15 * max(1, abs(float(c))), name


def f(expr, var):
    return sp.lambdify(var, expr, "mpmath")


# indefinite answers: (name, integrand, antiderivative, lo, hi)
indefinite = [
    ("sample.1a", x**3 * (1 - x**2) ** 2, x**4 / 4 - x**6 / 3 + x**8 / 8, -2, 2),
    ("sample.1b", 3 + sp.tan(x) ** 2, 2 * x + sp.tan(x), -1.2, 1.2),
    ("sample.1c", x**4 * sp.exp(2 * x**5 - 1), sp.exp(2 * x**5 - 1) / 10, -1, 1),
    ("sample.1d", sp.sin(1 + 3 * x) ** 2, x / 2 - sp.sin(2 + 6 * x) / 12, -3, 3),
    ("sample.2a", (-4 * x + 5) / (x**2 - 4), -sp.Rational(3, 4) * sp.log(sp.Abs(x - 2)) - sp.Rational(13, 4) * sp.log(sp.Abs(x + 2)), -5, 5),
    ("sample.2b", 1 / sp.sqrt(6 * x - 9 * x**2), sp.asin(3 * x - 1) / 3, 0.01, 0.65),
    ("sample.2c", (-2 * x - 7) / (x**2 + 6 * x + 10), -sp.log(x**2 + 6 * x + 10) - sp.atan(x + 3), -10, 5),
    ("sample.2d", (8 * x - 5) / sp.sqrt(x**2 + 4 * x - 5), 8 * sp.sqrt(x**2 + 4 * x - 5) - 21 * sp.log(sp.Abs(x + 2 + sp.sqrt(x**2 + 4 * x - 5))), 1.5, 10),
    ("sample.3a", (3 * x + 2) / sp.sqrt(x + 4), 2 * (x + 4) ** sp.Rational(3, 2) - 20 * sp.sqrt(x + 4), -3.5, 10),
    ("sample.3b", 1 / (x * sp.sqrt(3 * x**2 - 4 * x + 1)), -sp.log(sp.Abs(1 / x - 2 + sp.sqrt(3 * x**2 - 4 * x + 1) / x)), 1.5, 10),
    ("sample.3c", (4 * x**2 - 3) / sp.exp(2 * x), (-2 * x**2 - 2 * x + sp.Rational(1, 2)) * sp.exp(-2 * x), -2, 3),
    ("sample.3d", x**2 * sp.log(x), x**3 * (3 * sp.log(x) - 1) / 9, 0.1, 5),
    ("sample.3e", sp.sin(sp.sqrt(x + 1)), -2 * sp.sqrt(x + 1) * sp.cos(sp.sqrt(x + 1)) + 2 * sp.sin(sp.sqrt(x + 1)), 0, 10),
    ("sample.3f", x * sp.sin(x) / sp.cos(x) ** 3, (x / sp.cos(x) ** 2 - sp.tan(x)) / 2, -1.2, 1.2),
    ("sample.5a", sp.sin(10 * x) * sp.sin(3 * x), sp.sin(7 * x) / 14 - sp.sin(13 * x) / 26, -3, 3),
    ("sample.5b", sp.cbrt(sp.sin(x) / sp.cos(x) ** 13), sp.Rational(3, 4) * sp.tan(x) ** sp.Rational(4, 3) + sp.Rational(3, 10) * sp.tan(x) ** sp.Rational(10, 3), 0.05, 1.5),
    ("sample.5c", 1 / (4 * sp.cos(x) + 3 * sp.sin(x) + 6), 2 / sp.sqrt(11) * sp.atan((2 * sp.tan(x / 2) + 3) / sp.sqrt(11)), -3, 3),
    ("sample.6a", 1 / (x**2 * sp.sqrt(4 - x**2)), -sp.sqrt(4 / x**2 - 1) / 4, 0.1, 1.9),
    ("sample.6b", sp.cbrt((x + 1) / (x - 1)) / (x - 1) ** 3, -sp.Rational(3, 28) * ((x + 1) / (x - 1)) ** sp.Rational(7, 3) + sp.Rational(3, 16) * ((x + 1) / (x - 1)) ** sp.Rational(4, 3), 1.5, 6),
    ("sample.4a", (-3 * x**2 + 2 * x + 13) / (x**3 + 2 * x**2 - x - 2), 2 * sp.log(sp.Abs(x - 1)) - 4 * sp.log(sp.Abs(x + 1)) - sp.log(sp.Abs(x + 2)), -10, 10),
    ("sample.4b", (3 * x**3 - 32 * x + 56) / (x**3 - 2 * x**2 - 4 * x + 8), 3 * x - 4 / (x - 2) + 6 * sp.log(sp.Abs(x + 2)), -10, 10),
    ("sample.4c", (x**2 - 2 * x - 9) / ((x**2 + 4 * x + 5) * (x - 1)), sp.log(x**2 + 4 * x + 5) - sp.log(sp.Abs(x - 1)), -10, 10),
    # personal tasks 1-3
    ("p1.1b", sp.tan(x) ** 2, sp.tan(x) - x, -1.2, 1.2),
    ("p2.1d", sp.sin(1 - 2 * x) ** 2, x / 2 + sp.sin(2 - 4 * x) / 8, -3, 3),
    ("p3.1c", sp.log(2 * x - 5) ** 3 / (2 * x - 5), sp.log(2 * x - 5) ** 4 / 8, 3, 10),
    ("p1.2a", (2 - 3 * x) / (x**2 - 4), -sp.log(sp.Abs(x - 2)) - 2 * sp.log(sp.Abs(x + 2)), -5, 5),
    ("p3.2b", 1 / sp.sqrt(-55 + 16 * x - x**2), sp.asin((x - 8) / 3), 5.1, 10.9),
    ("p1.3c", sp.log(x - 3), (x - 3) * sp.log(x - 3) - x, 3.1, 10),
    ("p2.3e", sp.atan(x), x * sp.atan(x) - sp.log(1 + x**2) / 2, -5, 5),
    ("p3.3f", x / sp.cos(x) ** 2, x * sp.tan(x) + sp.log(sp.cos(x)), -1.4, 1.4),
    ("p1.5a", sp.sin(3 * x) * sp.cos(x), -sp.cos(4 * x) / 8 - sp.cos(2 * x) / 4, -3, 3),
    ("p3.5a", sp.cos(7 * x) * sp.cos(3 * x), sp.sin(10 * x) / 20 + sp.sin(4 * x) / 8, -3, 3),
    ("p1.6a", sp.sqrt(9 - x**2) / x**4, -(9 - x**2) ** sp.Rational(3, 2) / (27 * x**3), 0.1, 2.9),
    ("p3.6a", 1 / (x**2 * sp.sqrt(x**2 - 1)), sp.sqrt(x**2 - 1) / x, 1.1, 10),
]
for name, integrand, anti, lo, hi in indefinite:
    check_antiderivative(name, integrand, anti, x, lo, hi)

# personal pfrac: print sympy antiderivatives for transcription
for name, num, den in [
    ("p1.4a", 3 * x**2 + 14 * x + 19, (x**2 + 4 * x + 3) * (x + 5)),
    ("p2.4b", x**3 - 2 * x**2 - 2 * x + 1, x**3 - x**2),
    ("p3.4c", -3 * x**2 + 24 * x - 63, (x**2 - 4 * x + 13) * (x + 1)),
]:
    print(f"{name:14s} apart {sp.apart(num / den)}   integral {sp.integrate(sp.apart(num / den), x)}")

# definite, geometry and improper values: (name, numeric by mpmath quadrature, closed form)
pi = sp.pi
mpi = mp.pi
values = [
    ("sample.7a", quad(lambda v: mp.log(1 + v * v), [0, 1]), sp.log(2) + pi / 2 - 2),
    ("sample.7b", quad(lambda v: mp.sin(v) ** 3 * mp.cos(v) ** mpf(0.25), [0, mpi / 2]), sp.Rational(32, 65)),
    ("sample.7c", quad(lambda v: 4 * v**3 / msqrt(4 - v**8), [1, mpf(2) ** (mpf(1) / 8)]), pi / 12),
    ("sample.7d", quad(lambda v: (1 + msqrt(v)) / (v ** mpf(0.25) + msqrt(v)), [1, 16]), sp.Rational(29, 3) + 8 * sp.log(sp.Rational(3, 2))),
    ("sample.8a", quad(lambda v: (v * v - 3 * v) - (2 * v * v - 10 * v + 6), [1, 6]), sp.Rational(125, 6)),
    ("sample.8b", 2 * quad(lambda s: 4 * mp.cos(s) ** 3 * 12 * mp.sin(s) ** 2 * mp.cos(s), [mpi / 6, mpi / 2]), 2 * pi),
    ("sample.8c", 3 * quad(lambda p: 8 * mp.sin(3 * p) ** 2, [0, mpi / 3]), 4 * pi),
    ("sample.9a", quad(lambda v: 1 / mp.cos(3 * v), [0, mpi / 18]), sp.log(3) / 6),
    ("sample.9b", quad(lambda s: 4 * msqrt(2 - 2 * mp.cos(s)), [0, mpi, 2 * mpi]), sp.Integer(32)),
    ("sample.9c", quad(lambda p: msqrt(1 + mpf(1) / 100) * 10 / msqrt(101) * mp.e ** (p / 10), [0, 2 * mpi]), 10 * (sp.exp(pi / 5) - 1)),
    ("sample.10a", 2 * mpi * quad(lambda v: mp.cosh(2 * v) / 2 * mp.cosh(2 * v), [-1, 1]), pi * (1 + sp.sinh(4) / 4)),
    ("sample.10b", 2 * mpi * quad(lambda s: 3 + mp.cos(s), [0, 2 * mpi]), 12 * pi**2),
    ("sample.10c", 2 * 2 * mpi * quad(lambda p: mp.sin(p) / msqrt(mp.cos(2 * p)) * msqrt(mp.cos(2 * p)) * 1, [0, mpi / 4]), 2 * pi * (2 - sp.sqrt(2))),
    ("sample.11a", mpi * quad(lambda v: (5 - v) ** 2 - (v * v + 2 * v + 5) ** 2, [-3, 0]), sp.Rational(252, 5) * pi),
    ("sample.11b", mpi * quad(lambda w: (5 + 4 * w - w * w) ** 2 - 25, [0, 4]), sp.Rational(704, 5) * pi),
    ("sample.11c", 2 * mpi / 3 * quad(lambda p: (6 * (1 + mp.cos(p))) ** 3 * mp.sin(p), [0, mpi]), 576 * pi),
    ("sample.12b", quad(lambda v: mp.e ** (-mp.tan(v)) / mp.cos(v) ** 2, [0, mpi / 2]), sp.Integer(1)),
    # personal tasks 1-3
    ("p1.7a", quad(lambda v: v * mp.log(v - 1), [2, mp.e + 1]), sp.integrate(x * sp.log(x - 1), (x, 2, sp.E + 1))),
    ("p1.7c", quad(lambda v: v * msqrt(1 + v * v), [0, msqrt(3)]), sp.Rational(7, 3)),
    ("p3.7b", quad(lambda v: mp.sin(v) ** 8, [0, mpi]), sp.Rational(35, 128) * pi),
    ("p1.8a", quad(lambda v: (v * v - 3 * v) - (2 * v * v - 8 * v + 6), [2, 3]), sp.Rational(1, 6)),
    ("p2.8b", 2 * quad(lambda s: 3 * mp.cos(s) * 4 * mp.cos(s), [mpi / 6, mpi / 2]), 4 * pi - 3 * sp.sqrt(3)),
    ("p1.8c", 6 * quad(lambda p: 18 * mp.cos(3 * p) ** 2, [0, mpi / 6]), 9 * pi),
    ("p3.8a", quad(lambda v: 7 - v - 6 / v, [1, 6]), sp.Rational(35, 2) - 6 * sp.log(6)),
    ("p1.9a", quad(lambda v: msqrt(1 + 1 / v**2), [msqrt(3), msqrt(8)]), 1 + sp.log(sp.Rational(3, 2)) / 2),
    ("p1.9c", quad(lambda p: msqrt(2) * mp.e ** (-p), [0, mpi]), sp.sqrt(2) * (1 - sp.exp(-pi))),
    ("p3.9b", quad(lambda s: 4 * msqrt(2 - 2 * mp.cos(s)), [0, mpi]), sp.Integer(16)),
    ("p1.10a", 2 * 2 * mpi * quad(lambda v: v**3 / 3 * msqrt(1 + v**4), [0, 1]), 2 * pi / 9 * (2 * sp.sqrt(2) - 1)),
    ("p3.10b", 2 * mpi * quad(lambda s: 2 + mp.cos(s), [0, 2 * mpi]), 8 * pi**2),
    ("p3.10c", 2 * mpi * quad(lambda p: 6 * mp.cos(p) * mp.sin(p) * 6, [0, mpi / 2]), 36 * pi),
    ("p1.11a", mpi * quad(lambda v: (v + 1) ** 2 - (v - 1) ** 4, [0, 3]), sp.Rational(72, 5) * pi),
    ("p3.11b", mpi * quad(lambda w: mp.e ** (2 * w), [0, mp.log(4)]), sp.Rational(15, 2) * pi),
    ("p1.11c", 2 * mpi / 3 * quad(lambda p: (2 * (1 + mp.cos(p))) ** 3 * mp.sin(p), [0, mpi]), sp.Rational(64, 3) * pi),
    ("p1.12a", quad(lambda v: v / (v**4 + 16), [0, inf]), pi / 16),
    ("p1.12b", quad(lambda v: (2 - 4 * v) ** (-mpf(1) / 3), [0, mpf(1) / 2]), sp.Rational(3, 8) * 2 ** sp.Rational(2, 3)),
    ("p2.12a", quad(lambda v: 16 * v / (16 * v**4 - 1), [1, inf]), sp.integrate(16 * x / (16 * x**4 - 1), (x, 1, sp.oo))),
]
for name, numeric, closed in values:
    check_value(name, numeric, closed)

print("p2.12a closed form:", sp.simplify(sp.integrate(16 * x / (16 * x**4 - 1), (x, 1, sp.oo))))
print("p1.7a closed form:", sp.simplify(sp.integrate(x * sp.log(x - 1), (x, 2, sp.E + 1))))
# divergent improper integrals
for name, integrand, a, b in [
    ("sample.12a", (2 * x - 1) / (x**2 + 4), -2, sp.oo),
    ("p2.12b", sp.sin(x) / sp.cos(x) ** 3, pi / 4, pi / 2),
    ("p3.12a", x**6 / (x**7 + 1) ** sp.Rational(3, 5), 0, sp.oo),
    ("p3.12b", sp.cos(x) ** 2 / sp.sin(x) ** 4, 0, pi / 2),
]:
    print(f"{name:14s} integral = {sp.integrate(integrand, (x, a, b))}")
