#include "calcforge/error.hpp"
#include "calcforge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace calcforge::quad {

namespace {

// 15-point Kronrod abscissae (positive half) with their weights, and the embedded
// 7-point Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7].
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
    int depth = 0;
};

struct ByError {
    bool operator()(const Panel& l, const Panel& r) const { return l.err < r.err; }
};

double sample(const std::function<double(double)>& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) throw NonFiniteSample(x);
    return y;
}

Panel gk15(const std::function<double(double)>& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = sample(f, center);
    long double resk = static_cast<long double>(fc) * wgk[7];
    long double resg = static_cast<long double>(fc) * wg[3];
    long double resabs = std::fabs(resk);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        f1[j] = sample(f, center - dx);
        f2[j] = sample(f, center + dx);
        const long double s = static_cast<long double>(f1[j]) + f2[j];
        resk += wgk[j] * s;
        resabs += wgk[j] * (std::fabs(static_cast<long double>(f1[j])) + std::fabs(static_cast<long double>(f2[j])));
        if (j % 2 == 1) resg += wg[j / 2] * s;
    }
    const long double mean = resk * 0.5L;
    long double resasc = wgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

    const double ahalf = std::fabs(half);
    const double value = static_cast<double>(resk * half);
    const double asc = static_cast<double>(resasc * ahalf);
    const double abs_int = static_cast<double>(resabs * ahalf);
    double err = static_cast<double>(std::fabs((resk - resg) * half));
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (abs_int > tiny / (50.0 * eps)) err = std::max(50.0 * eps * abs_int, err);
    return {a, b, value, err, depth};
}

}  // namespace

double Bound::as_double() const noexcept {
    switch (kind) {
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        case Kind::Finite: break;
    }
    return value;
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b, double rel_tol,
                            double abs_tol, int max_depth, std::size_t max_panels) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integrate_finite needs finite limits");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw InvalidArgument("tolerances must be positive");
    if (max_depth < 0) throw InvalidArgument("max_depth must be non-negative");
    if (a == b) return {};
    if (a > b) {
        QuadResult r = integrate_finite(f, b, a, rel_tol, abs_tol, max_depth, max_panels);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> open;
    std::vector<Panel> frozen;
    QuadResult out;
    open.push(gk15(f, a, b, 0));
    out.evaluations = 15;
    std::size_t panels = 1;

    auto totals = [&](long double& value, long double& err) {
        value = 0.0L;
        err = 0.0L;
        for (const Panel& p : frozen) {
            value += p.value;
            err += p.err;
        }
        auto copy = open;
        while (!copy.empty()) {
            value += copy.top().value;
            err += copy.top().err;
            copy.pop();
        }
    };

    // Running sums are refreshed from scratch periodically to avoid drift.
    long double value = 0.0L;
    long double err = 0.0L;
    totals(value, err);
    long double frozen_err = 0.0L;
    std::size_t since_refresh = 0;
    while (true) {
        const double tol = std::max(abs_tol, rel_tol * std::fabs(static_cast<double>(value)));
        if (err <= tol) break;
        if (frozen_err > tol) {  // the unrefinable panels alone already miss the target
            out.depth_hit = true;
            break;
        }
        if (open.empty()) {
            out.depth_hit = true;
            break;
        }
        if (panels >= max_panels) {
            out.depth_hit = true;
            break;
        }
        Panel worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= max_depth || !(mid > worst.a && mid < worst.b)) {
            frozen_err += worst.err;
            frozen.push_back(worst);
            continue;
        }
        Panel left = gk15(f, worst.a, mid, worst.depth + 1);
        Panel right = gk15(f, mid, worst.b, worst.depth + 1);
        out.evaluations += 30;
        ++panels;
        value += static_cast<long double>(left.value) + right.value - worst.value;
        err += static_cast<long double>(left.err) + right.err - worst.err;
        open.push(left);
        open.push(right);
        if (++since_refresh == 64) {
            since_refresh = 0;
            totals(value, err);
        }
    }
    totals(value, err);
    if (!frozen.empty()) {
        // A frozen panel means some piece could not be refined further while the total was still too coarse.
        const double tol = std::max(abs_tol, rel_tol * std::fabs(static_cast<double>(value)));
        if (err > tol) out.depth_hit = true;
    }
    out.value = static_cast<double>(value);
    out.err_estimate = static_cast<double>(err);
    return out;
}

QuadResult integrate_finite(const IntegralSpec& spec, const ImproperConfig& cfg) {
    if (!spec.lower.is_finite() || !spec.upper.is_finite())
        throw InvalidArgument("integrate_finite needs finite limits");
    return integrate_finite(bind(spec.integrand, spec.var), spec.lower.value, spec.upper.value, spec.rel_tol,
                            spec.abs_tol, spec.max_depth, cfg.max_panels);
}

}  // namespace calcforge::quad
