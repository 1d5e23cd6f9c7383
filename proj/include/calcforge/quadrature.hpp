#pragma once

#include "calcforge/expr.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace calcforge::quad {

/// Integration limit: a finite real or a signed infinity.
struct Bound {
    enum class Kind { Finite, PosInf, NegInf };
    Kind kind = Kind::Finite;
    double value = 0.0;

    static Bound finite(double v) { return {Kind::Finite, v}; }
    static Bound pos_inf() { return {Kind::PosInf, 0.0}; }
    static Bound neg_inf() { return {Kind::NegInf, 0.0}; }

    bool is_finite() const noexcept { return kind == Kind::Finite; }
    /// +-infinity as a double for the infinite kinds.
    double as_double() const noexcept;
    friend bool operator==(const Bound&, const Bound&) = default;
};

struct IntegralSpec {
    Expr integrand;
    std::string var = "x";
    Bound lower;
    Bound upper;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  // absolute, >= 0
    std::size_t evaluations = 0;
    bool depth_hit = false;
};

/// Knobs of the improper-integral probes and the singular-endpoint detector.
struct ImproperConfig {
    double singular_magnitude = 1e8;
    int max_doublings = 40;     // 1st kind: cutoffs a + 2^k, k = 0..max_doublings
    int eps_decades = 12;       // 2nd kind: eps_k = (b - a) 10^-k, k = 1..eps_decades
    int agree_count = 3;        // trailing partials that must agree
    double agree_factor = 10.0; // agreement tolerance multiplier on max(abs_tol, rel_tol |I|)
    int escape_window = 5;      // trailing increments inspected for divergence
    double escape_slack = 1e-3; // relative slack of the "non-decreasing" test
    std::size_t max_panels = 20000;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of a callable on a finite interval.
/// Reversed limits negate the result; a == b gives 0.
/// Throws NonFiniteSample if f is NaN or infinite at an interior node.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b, double rel_tol,
                            double abs_tol, int max_depth, std::size_t max_panels = 20000);

/// Same as above for a spec with finite bounds.
QuadResult integrate_finite(const IntegralSpec& spec, const ImproperConfig& cfg = {});

struct SingularEndpoints {
    bool lower_singular = false;
    bool upper_singular = false;
};

/// Probes the integrand at a + 10^-k (b - a), k = 3..12, and mirrored at b.
SingularEndpoints detect_singular_endpoints(const IntegralSpec& spec, const ImproperConfig& cfg = {});

enum class Direction { PosInf, NegInf, Oscillating };

struct Convergent {
    double value = 0.0;
    double err = 0.0;
};
struct Divergent {
    Direction direction = Direction::PosInf;
};
struct Inconclusive {};

using ImproperStatus = std::variant<Convergent, Divergent, Inconclusive>;

struct PartialProbe {
    double cutoff = 0.0;
    double value = 0.0;
};

struct ImproperResult {
    ImproperStatus status = Inconclusive{};
    std::vector<PartialProbe> partials;

    bool convergent() const noexcept { return std::holds_alternative<Convergent>(status); }
    bool divergent() const noexcept { return std::holds_alternative<Divergent>(status); }
};

/// Improper integrals of the 1st kind (infinite limits) and 2nd kind (singular endpoints),
/// classified from the sequence of partial integrals.
ImproperResult integrate_improper(const IntegralSpec& spec, const ImproperConfig& cfg = {});

/// Classifies a sequence of partial integrals; exposed for testing.
ImproperStatus classify_partials(const std::vector<double>& partials, double rel_tol, double abs_tol,
                                 const ImproperConfig& cfg);

/// Routes to integrate_improper when a bound is infinite or an endpoint is singular,
/// and to integrate_finite otherwise.
using Integration = std::variant<QuadResult, ImproperResult>;
Integration integrate(const IntegralSpec& spec, const ImproperConfig& cfg = {});

std::string to_string(Direction d);

}  // namespace calcforge::quad
