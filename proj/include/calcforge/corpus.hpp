#pragma once

#include "calcforge/error.hpp"
#include "calcforge/expr.hpp"
#include "calcforge/quadrature.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace calcforge::corpus {

enum class Kind {
    Definite,
    Improper,
    IndefiniteCheck,
    Pfrac,
    AreaBetween,
    AreaParametric,
    AreaPolar,
    Arclen,
    Surface,
    VolumeWasher,
    VolumePolar,
    Intersections,
};

std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);

/// Malformed corpus text or problem fields. The message names the line, problem id and field.
class LoadError : public Error {
public:
    LoadError(std::size_t line, const std::string& id, const std::string& field, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }
    /// The message without the line and id prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string field_;
    std::string detail_;
};

/// One corpus entry: raw key/value text plus the values parsed from it during validation.
struct Problem {
    std::string id;
    Kind kind = Kind::Definite;
    std::map<std::string, std::string, std::less<>> fields;
    double tol_rel = 1e-6;
    std::optional<std::string> paper_discrepancy;
    std::optional<std::string> skip;
    std::size_t line = 0;

    bool has(std::string_view key) const { return fields.find(key) != fields.end(); }
    const std::string& text(std::string_view key) const;
    /// Parsed expression of a field.
    Expr expr(std::string_view key) const;
    /// Constant field value; "inf" and "-inf" map to infinities.
    double number(std::string_view key) const;
};

/// Validates fields against the kind's schema. Throws LoadError.
/// Without require_expected the problem only describes a computation (the CLI's use).
Problem make_problem(std::string id, Kind kind, std::map<std::string, std::string, std::less<>> fields,
                     std::size_t line = 0, bool require_expected = true);

std::vector<Problem> parse_corpus(std::string_view text);
std::vector<Problem> load(const std::filesystem::path& path);

struct EngineConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
    quad::ImproperConfig improper;
};

/// Raw engine output for one problem, before comparison with the expected value.
struct Computation {
    enum class Shape { Value, Divergent, Inconclusive, Roots, DerivativeCheck };
    Shape shape = Shape::Value;
    double value = 0.0;
    double err_estimate = 0.0;
    quad::Direction direction = quad::Direction::PosInf;
    std::vector<double> roots;
    // DerivativeCheck: derivative of the candidate and the integrand at the worst probe.
    double derivative = 0.0;
    double integrand = 0.0;
    int valid_probes = 0;
    // pfrac: exact recomposition held.
    bool recomposed = true;
    std::string text;  // canonical antiderivative text for pfrac
};

/// Runs the engine for a problem. Throws the engine's errors.
Computation compute(const Problem& p, const EngineConfig& cfg);

enum class Status { Pass, Fail, DiscrepancyDocumented, Skipped };
std::string_view status_name(Status s);
std::optional<Status> parse_status(std::string_view name);

struct Row {
    std::string id;
    double computed = 0.0;
    double expected = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    Status status = Status::Fail;
    std::string note;  // shown in the text table only
};

struct Summary {
    std::size_t total = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t discrepancy_documented = 0;
    std::size_t skipped = 0;
    friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
    std::vector<Row> rows;
    Summary summary;
    double wall_time_s = 0.0;
};

/// Evaluates one problem; engine errors become fail rows.
Row evaluate(const Problem& p, const EngineConfig& cfg);

/// Runs every problem, on `jobs` worker threads when jobs > 1. Rows keep input order.
Report verify(const std::vector<Problem>& problems, const EngineConfig& cfg, unsigned jobs = 1);

Summary summarize(const std::vector<Row>& rows);

std::string to_text_table(const Report& r);
/// Reals use 17 significant digits; non-finite values are the strings "+inf", "-inf" and "nan".
std::string to_json(const Report& r);
Report report_from_json(std::string_view json);

/// 17-significant-digit text of a real, "+inf"/"-inf"/"nan" otherwise.
std::string format_real(double v);
/// A JSON value: a bare number, or a quoted string for non-finite reals.
std::string json_real(double v);
std::string json_string(std::string_view s);

}  // namespace calcforge::corpus
