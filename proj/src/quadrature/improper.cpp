#include "calcforge/error.hpp"
#include "calcforge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

namespace calcforge::quad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Probes end + step * 10^-k for k = 3..12.
bool endpoint_singular(const Expr& f, const std::string& var, double end, double step, const ImproperConfig& cfg) {
    if (!f.depends_on(var)) return false;
    constexpr int first = 3;
    constexpr int last = 12;
    std::array<double, last - first + 1> mag{};
    std::array<double, last - first + 1> sub{};
    for (int k = first; k <= last; ++k) {
        const double x = end + step * std::pow(10.0, -k);
        const double v = eval(f, var, x);
        mag[k - first] = std::isfinite(v) ? std::fabs(v) : kInf;
        sub[k - first] = max_subterm_magnitude(f, var, x);
    }
    const std::size_t n = mag.size();
    bool blown_up = true;
    for (std::size_t i = n - 2; i < n; ++i)
        if (!(mag[i] > cfg.singular_magnitude || sub[i] > cfg.singular_magnitude)) blown_up = false;
    if (blown_up) return true;
    // Unbounded power-law growth that has not yet crossed the magnitude threshold.
    const double m0 = mag[n - 3];
    const double m1 = mag[n - 2];
    const double m2 = mag[n - 1];
    return std::isfinite(m2) && m0 > 0.0 && m1 >= 2.0 * m0 && m2 >= 2.0 * m1;
}

enum class Moving { Upper, Lower };

struct Piece {
    double a = 0.0;
    double b = 0.0;
    bool infinite = false;  // 1st kind: the moving end is infinite
    Moving moving = Moving::Upper;
};

struct PieceResult {
    ImproperStatus status;
    std::vector<PartialProbe> partials;
};

PieceResult run_piece(const std::function<double(double)>& f, const Piece& p, const IntegralSpec& spec,
                      const ImproperConfig& cfg) {
    std::vector<double> cutoffs;
    if (p.infinite) {
        const double anchor = p.moving == Moving::Upper ? p.a : p.b;
        const double dir = p.moving == Moving::Upper ? 1.0 : -1.0;
        for (int k = 0; k <= cfg.max_doublings; ++k) cutoffs.push_back(anchor + dir * std::ldexp(1.0, k));
    } else {
        const double width = p.b - p.a;
        for (int k = 1; k <= cfg.eps_decades; ++k) {
            const double eps = width * std::pow(10.0, -k);
            cutoffs.push_back(p.moving == Moving::Upper ? p.b - eps : p.a + eps);
        }
    }

    PieceResult out;
    std::vector<double> values;
    double prev = p.moving == Moving::Upper ? p.a : p.b;
    long double sum = 0.0L;
    double quad_err = 0.0;
    for (double c : cutoffs) {
        QuadResult inc;
        try {
            inc = p.moving == Moving::Upper
                      ? integrate_finite(f, prev, c, spec.rel_tol, spec.abs_tol, spec.max_depth, cfg.max_panels)
                      : integrate_finite(f, c, prev, spec.rel_tol, spec.abs_tol, spec.max_depth, cfg.max_panels);
        } catch (const NonFiniteSample&) {
            break;  // the probe sequence ends where the integrand stops being finite
        }
        sum += inc.value;
        quad_err += inc.err_estimate;
        prev = c;
        values.push_back(static_cast<double>(sum));
        out.partials.push_back({c, static_cast<double>(sum)});
    }
    out.status = classify_partials(values, spec.rel_tol, spec.abs_tol, cfg);
    if (auto* c = std::get_if<Convergent>(&out.status)) c->err += quad_err;
    return out;
}

ImproperResult negated(ImproperResult r) {
    if (auto* c = std::get_if<Convergent>(&r.status)) c->value = -c->value;
    if (auto* d = std::get_if<Divergent>(&r.status)) {
        if (d->direction == Direction::PosInf) d->direction = Direction::NegInf;
        else if (d->direction == Direction::NegInf) d->direction = Direction::PosInf;
    }
    for (PartialProbe& p : r.partials) p.value = -p.value;
    return r;
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

SingularEndpoints detect_singular_endpoints(const IntegralSpec& spec, const ImproperConfig& cfg) {
    SingularEndpoints s;
    const double lo = spec.lower.as_double();
    const double hi = spec.upper.as_double();
    if (lo == hi) return s;
    const double dir = hi > lo ? 1.0 : -1.0;
    const double width = std::isfinite(hi - lo) ? hi - lo : dir;
    if (spec.lower.is_finite()) s.lower_singular = endpoint_singular(spec.integrand, spec.var, lo, width, cfg);
    if (spec.upper.is_finite()) s.upper_singular = endpoint_singular(spec.integrand, spec.var, hi, -width, cfg);
    return s;
}

ImproperStatus classify_partials(const std::vector<double>& s, double rel_tol, double abs_tol,
                                 const ImproperConfig& cfg) {
    const std::size_t agree = static_cast<std::size_t>(std::max(cfg.agree_count, 2));
    if (s.size() < agree) return Inconclusive{};
    const double last = s.back();
    auto noise = [&](double v) { return std::max(abs_tol, rel_tol * std::fabs(v)); };
    const double tol = noise(last) * cfg.agree_factor;

    std::vector<double> d;
    for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] - s[i - 1]);

    const std::size_t w = static_cast<std::size_t>(std::max(cfg.escape_window, 2));
    if (d.size() >= w) {
        const std::size_t from = d.size() - w;
        bool escape = true;
        for (std::size_t i = from; i < d.size(); ++i) {
            // Each increment is measured against the partial it produced.
            if (std::fabs(d[i]) <= noise(s[i + 1]) || sign(d[i]) != sign(d[from])) escape = false;
            if (i > from && std::fabs(d[i]) < (1.0 - cfg.escape_slack) * std::fabs(d[i - 1])) escape = false;
        }
        if (escape) return Divergent{d[from] > 0.0 ? Direction::PosInf : Direction::NegInf};

        bool alternating = true;
        double max_head = 0.0;
        double max_tail = 0.0;
        for (std::size_t i = from; i < d.size(); ++i) {
            if (std::fabs(d[i]) <= tol) alternating = false;
            if (i > from && sign(d[i]) == sign(d[i - 1])) alternating = false;
            double& m = i < from + w / 2 ? max_head : max_tail;
            m = std::max(m, std::fabs(d[i]));
        }
        if (alternating && max_tail >= 0.9 * max_head) return Divergent{Direction::Oscillating};
    }

    auto spread = [&](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.end() - static_cast<std::ptrdiff_t>(agree), v.end());
        return *hi - *lo;
    };
    if (const double sp = spread(s); sp <= tol) return Convergent{last, sp};

    // Aitken delta-squared acceleration of the same sequence.
    std::vector<double> acc;
    for (std::size_t i = 2; i < s.size(); ++i) {
        const double d1 = s[i] - s[i - 1];
        const double d0 = s[i - 1] - s[i - 2];
        const double den = d1 - d0;
        acc.push_back(den != 0.0 ? s[i] - d1 * d1 / den : s[i]);
    }
    if (acc.size() >= agree && std::all_of(acc.end() - static_cast<std::ptrdiff_t>(agree), acc.end(),
                                           [](double v) { return std::isfinite(v); })) {
        const double a = acc.back();
        if (const double sp = spread(acc); sp <= noise(a) * cfg.agree_factor) return Convergent{a, sp};
    }
    return Inconclusive{};
}

ImproperResult integrate_improper(const IntegralSpec& spec, const ImproperConfig& cfg) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) throw InvalidArgument("tolerances must be positive");
    const double lo = spec.lower.as_double();
    const double hi = spec.upper.as_double();
    if (std::isnan(lo) || std::isnan(hi)) throw InvalidArgument("integration limit is NaN");
    if (lo == hi) {
        if (!spec.lower.is_finite()) throw InvalidArgument("both limits are the same infinity");
        return {Convergent{0.0, 0.0}, {}};
    }
    if (lo > hi) {
        IntegralSpec flipped = spec;
        std::swap(flipped.lower, flipped.upper);
        return negated(integrate_improper(flipped, cfg));
    }

    const auto f = bind(spec.integrand, spec.var);
    const SingularEndpoints sing = detect_singular_endpoints(spec, cfg);
    std::vector<Piece> pieces;
    const bool lo_inf = !spec.lower.is_finite();
    const bool hi_inf = !spec.upper.is_finite();
    if (lo_inf && hi_inf) {
        pieces.push_back({-kInf, 0.0, true, Moving::Lower});
        pieces.push_back({0.0, kInf, true, Moving::Upper});
    } else if (hi_inf) {
        if (sing.lower_singular) {
            pieces.push_back({lo, lo + 1.0, false, Moving::Lower});
            pieces.push_back({lo + 1.0, kInf, true, Moving::Upper});
        } else {
            pieces.push_back({lo, kInf, true, Moving::Upper});
        }
    } else if (lo_inf) {
        if (sing.upper_singular) {
            pieces.push_back({-kInf, hi - 1.0, true, Moving::Lower});
            pieces.push_back({hi - 1.0, hi, false, Moving::Upper});
        } else {
            pieces.push_back({-kInf, hi, true, Moving::Lower});
        }
    } else if (sing.lower_singular && sing.upper_singular) {
        const double mid = 0.5 * (lo + hi);
        pieces.push_back({lo, mid, false, Moving::Lower});
        pieces.push_back({mid, hi, false, Moving::Upper});
    } else if (sing.lower_singular) {
        pieces.push_back({lo, hi, false, Moving::Lower});
    } else if (sing.upper_singular) {
        pieces.push_back({lo, hi, false, Moving::Upper});
    } else {
        const QuadResult r = integrate_finite(f, lo, hi, spec.rel_tol, spec.abs_tol, spec.max_depth, cfg.max_panels);
        return {Convergent{r.value, r.err_estimate}, {{hi, r.value}}};
    }

    ImproperResult out;
    double value = 0.0;
    double err = 0.0;
    bool all_convergent = true;
    std::optional<Direction> direction;
    bool mixed = false;
    for (const Piece& p : pieces) {
        PieceResult r = run_piece(f, p, spec, cfg);
        out.partials.insert(out.partials.end(), r.partials.begin(), r.partials.end());
        if (const auto* c = std::get_if<Convergent>(&r.status)) {
            value += c->value;
            err += c->err;
            continue;
        }
        all_convergent = false;
        if (const auto* d = std::get_if<Divergent>(&r.status)) {
            if (direction && *direction != d->direction) mixed = true;
            direction = d->direction;
        }
    }
    // One divergent piece makes the whole integral divergent; opposite infinities have no sign.
    if (all_convergent) out.status = Convergent{value, err};
    else if (direction) out.status = Divergent{mixed ? Direction::Oscillating : *direction};
    else out.status = Inconclusive{};
    return out;
}

Integration integrate(const IntegralSpec& spec, const ImproperConfig& cfg) {
    if (!spec.lower.is_finite() || !spec.upper.is_finite()) return integrate_improper(spec, cfg);
    const SingularEndpoints s = detect_singular_endpoints(spec, cfg);
    if (s.lower_singular || s.upper_singular) return integrate_improper(spec, cfg);
    return integrate_finite(spec, cfg);
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::PosInf: return "+inf";
        case Direction::NegInf: return "-inf";
        case Direction::Oscillating: return "oscillating";
    }
    return "?";
}

}  // namespace calcforge::quad
