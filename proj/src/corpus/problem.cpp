#include "calcforge/corpus.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace calcforge::corpus {

namespace {

enum class FieldType { Text, Expression, Constant, Bound, Name, Factor, Axis, Roots, ExpectedStatus };

struct FieldSpec {
    std::string_view key;
    FieldType type;
    bool required;
};

constexpr std::array<std::pair<Kind, std::string_view>, 12> kKindNames = {{
    {Kind::Definite, "definite"},
    {Kind::Improper, "improper"},
    {Kind::IndefiniteCheck, "indefinite_check"},
    {Kind::Pfrac, "pfrac"},
    {Kind::AreaBetween, "area_between"},
    {Kind::AreaParametric, "area_parametric"},
    {Kind::AreaPolar, "area_polar"},
    {Kind::Arclen, "arclen"},
    {Kind::Surface, "surface"},
    {Kind::VolumeWasher, "volume_washer"},
    {Kind::VolumePolar, "volume_polar"},
    {Kind::Intersections, "intersections"},
}};

const std::vector<FieldSpec>& common_fields() {
    static const std::vector<FieldSpec> v = {
        {"id", FieldType::Text, true},
        {"kind", FieldType::Text, true},
        {"tol_rel", FieldType::Constant, false},
        {"paper_discrepancy", FieldType::Text, false},
        {"paper_value", FieldType::Constant, false},
        {"skip", FieldType::Text, false},
        {"note", FieldType::Text, false},
        {"var", FieldType::Name, false},
    };
    return v;
}

std::vector<FieldSpec> schema(Kind k) {
    using F = FieldType;
    switch (k) {
        case Kind::Definite:
            return {{"integrand", F::Expression, true}, {"lower", F::Bound, true}, {"upper", F::Bound, true},
                    {"expected", F::Constant, true}};
        case Kind::Improper:
            return {{"integrand", F::Expression, true}, {"lower", F::Bound, true}, {"upper", F::Bound, true},
                    {"expected", F::Bound, true}, {"expected_status", F::ExpectedStatus, false}};
        case Kind::IndefiniteCheck:
            return {{"integrand", F::Expression, true}, {"expected", F::Expression, true},
                    {"probe_lo", F::Constant, true}, {"probe_hi", F::Constant, true}};
        case Kind::Pfrac:
            return {{"num", F::Expression, true}, {"den", F::Expression, true}, {"expected", F::Expression, true},
                    {"probe_lo", F::Constant, false}, {"probe_hi", F::Constant, false}};
        case Kind::AreaBetween:
            return {{"lower_fn", F::Expression, true}, {"upper_fn", F::Expression, true}, {"a", F::Constant, false},
                    {"b", F::Constant, false}, {"bracket_lo", F::Constant, false}, {"bracket_hi", F::Constant, false},
                    {"factor", F::Factor, false}, {"expected", F::Constant, true}};
        case Kind::AreaParametric:
            return {{"x", F::Expression, true}, {"y", F::Expression, true}, {"t_from", F::Constant, true},
                    {"t_to", F::Constant, true}, {"factor", F::Factor, false}, {"expected", F::Constant, true}};
        case Kind::AreaPolar:
        case Kind::VolumePolar:
            return {{"rho", F::Expression, true}, {"phi_from", F::Constant, true}, {"phi_to", F::Constant, true},
                    {"factor", F::Factor, false}, {"axis", F::Axis, false}, {"expected", F::Constant, true}};
        case Kind::Arclen:
        case Kind::Surface:
            return {{"x", F::Expression, false},        {"y", F::Expression, false},
                    {"rho", F::Expression, false},      {"a", F::Constant, false},
                    {"b", F::Constant, false},          {"t_from", F::Constant, false},
                    {"t_to", F::Constant, false},       {"phi_from", F::Constant, false},
                    {"phi_to", F::Constant, false},     {"factor", F::Factor, false},
                    {"axis", F::Axis, k == Kind::Surface}, {"expected", F::Constant, true}};
        case Kind::VolumeWasher:
            return {{"outer", F::Expression, true}, {"inner", F::Expression, false}, {"a", F::Constant, true},
                    {"b", F::Constant, true}, {"axis", F::Axis, false}, {"factor", F::Factor, false},
                    {"expected", F::Constant, true}};
        case Kind::Intersections:
            return {{"f", F::Expression, true}, {"g", F::Expression, true}, {"lo", F::Constant, true},
                    {"hi", F::Constant, true}, {"expected_roots", F::Roots, true}, {"max_roots", F::Factor, false}};
    }
    return {};
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<double> infinity_literal(const std::string& t) {
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    if (t == "-inf") return -std::numeric_limits<double>::infinity();
    return std::nullopt;
}

double constant_value(const std::string& text) {
    const double v = eval(parse(text), Binding{});
    if (!std::isfinite(v)) throw InvalidArgument("'" + text + "' does not evaluate to a finite real");
    return v;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// The variable the kind's expressions are written in.
std::string problem_var(const Problem& p) {
    if (p.has("var")) return p.text("var");
    switch (p.kind) {
        case Kind::AreaParametric: return "t";
        case Kind::AreaPolar:
        case Kind::VolumePolar: return "phi";
        case Kind::Arclen:
        case Kind::Surface:
            if (p.has("rho")) return "phi";
            if (p.has("t_from")) return "t";
            if (!p.has("y") && p.has("x")) return "y";
            return "x";
        case Kind::VolumeWasher: return p.has("axis") && p.text("axis") == "oy" ? "y" : "x";
        default: return "x";
    }
}

void check_order(const Problem& p, std::string_view lo, std::string_view hi) {
    if (!p.has(lo) || !p.has(hi)) return;
    if (!(p.number(lo) < p.number(hi)))
        throw LoadError(p.line, p.id, std::string(lo), std::string(lo) + " must be below " + std::string(hi));
}

void check_pair(const Problem& p, std::string_view lo, std::string_view hi) {
    if (p.has(lo) != p.has(hi))
        throw LoadError(p.line, p.id, std::string(p.has(lo) ? hi : lo), "must be given together with its partner");
    check_order(p, lo, hi);
}

void validate_coordinates(const Problem& p) {
    const bool polar = p.has("rho");
    const bool param = p.has("t_from") || p.has("t_to");
    if (polar) {
        if (!p.has("phi_from") || !p.has("phi_to"))
            throw LoadError(p.line, p.id, "phi_from", "polar curves need phi_from and phi_to");
    } else if (param) {
        if (!p.has("x") || !p.has("y") || !p.has("t_from") || !p.has("t_to"))
            throw LoadError(p.line, p.id, "t_from", "parametric curves need x, y, t_from and t_to");
    } else {
        if (!p.has("a") || !p.has("b"))
            throw LoadError(p.line, p.id, "a", "cartesian curves need a and b");
        if (p.has("x") == p.has("y"))
            throw LoadError(p.line, p.id, "y", "cartesian curves give exactly one of y (in x) or x (in y)");
    }
}

}  // namespace

std::string_view kind_name(Kind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (const auto& [kind, n] : kKindNames)
        if (n == name) return kind;
    return std::nullopt;
}

LoadError::LoadError(std::size_t line, const std::string& id, const std::string& field, const std::string& what)
    : Error("line " + std::to_string(line) + ": problem '" + (id.empty() ? "?" : id) + "'" +
            (field.empty() ? std::string() : ", field '" + field + "'") + ": " + what),
      line_(line),
      field_(field),
      detail_(what) {}

const std::string& Problem::text(std::string_view key) const {
    auto it = fields.find(key);
    if (it == fields.end()) throw InvalidArgument("problem '" + id + "' has no field '" + std::string(key) + "'");
    return it->second;
}

Expr Problem::expr(std::string_view key) const { return parse(text(key)); }

double Problem::number(std::string_view key) const {
    const std::string& t = text(key);
    if (auto inf = infinity_literal(t)) return *inf;
    return eval(parse(t), Binding{});
}

Problem make_problem(std::string id, Kind kind, std::map<std::string, std::string, std::less<>> fields,
                     std::size_t line, bool require_expected) {
    Problem p;
    p.id = std::move(id);
    p.kind = kind;
    p.fields = std::move(fields);
    p.line = line;
    p.fields["id"] = p.id;
    p.fields["kind"] = std::string(kind_name(kind));
    if (kind == Kind::IndefiniteCheck || kind == Kind::Pfrac) p.tol_rel = 1e-8;

    std::vector<FieldSpec> specs = common_fields();
    for (const FieldSpec& s : schema(kind)) specs.push_back(s);
    for (const auto& [key, value] : p.fields) {
        bool known = false;
        for (const FieldSpec& s : specs) known = known || s.key == key;
        if (!known) throw LoadError(line, p.id, key, "unknown field for kind " + std::string(kind_name(kind)));
    }
    if (p.has("skip")) {  // skipped entries are kept verbatim and not validated further
        p.skip = p.text("skip");
        return p;
    }

    const std::string var = problem_var(p);
    for (const FieldSpec& s : specs) {
        auto it = p.fields.find(s.key);
        if (it == p.fields.end()) {
            const bool optional_expected =
                s.key == "expected" &&
                (!require_expected || (p.has("expected_status") && p.text("expected_status") == "divergent"));
            if (s.required && !optional_expected) throw LoadError(line, p.id, std::string(s.key), "missing required field");
            continue;
        }
        const std::string& value = it->second;
        try {
            switch (s.type) {
                case FieldType::Text: break;
                case FieldType::Expression: calcforge::bind(parse(value), var); break;
                case FieldType::Constant: constant_value(value); break;
                case FieldType::Bound:
                    if (!infinity_literal(value)) constant_value(value);
                    break;
                case FieldType::Name:
                    if (value.empty() || !std::isalpha(static_cast<unsigned char>(value[0])) || value == "e" ||
                        value == "pi" || lookup_function(value))
                        throw InvalidArgument("'" + value + "' is not a usable variable name");
                    break;
                case FieldType::Factor: {
                    const double f = constant_value(value);
                    if (f < 1 || f != std::floor(f) || f > 1e6) throw InvalidArgument("must be a positive integer");
                    break;
                }
                case FieldType::Axis:
                    if (value != "ox" && value != "oy" && value != "polar")
                        throw InvalidArgument("axis must be ox, oy or polar");
                    break;
                case FieldType::Roots:
                    for (const std::string& r : split_list(value)) constant_value(r);
                    break;
                case FieldType::ExpectedStatus:
                    if (value != "convergent" && value != "divergent")
                        throw InvalidArgument("expected_status must be convergent or divergent");
                    break;
            }
        } catch (const LoadError&) {
            throw;
        } catch (const Error& e) {
            throw LoadError(line, p.id, std::string(s.key), e.what());
        }
    }

    if (p.has("tol_rel")) {
        p.tol_rel = p.number("tol_rel");
        if (!(p.tol_rel > 0.0)) throw LoadError(line, p.id, "tol_rel", "must be positive");
    }
    if (p.has("paper_discrepancy")) p.paper_discrepancy = p.text("paper_discrepancy");
    if (p.has("paper_value") && !p.paper_discrepancy)
        throw LoadError(line, p.id, "paper_value", "only meaningful together with paper_discrepancy");

    switch (kind) {
        case Kind::Definite:
        case Kind::Improper: {
            // Finite definite bounds may come in either order; the integral is oriented.
            const double lo = p.number("lower");
            const double hi = p.number("upper");
            if ((kind == Kind::Improper || std::isinf(lo) || std::isinf(hi)) && !(lo < hi))
                throw LoadError(line, p.id, "lower", "lower must be below upper");
            const bool divergent = p.has("expected_status") && p.text("expected_status") == "divergent";
            if (p.has("expected") && divergent != std::isinf(p.number("expected")))
                throw LoadError(line, p.id, "expected",
                                divergent ? "a divergent problem expects inf or -inf" : "must be finite");
            break;
        }
        case Kind::IndefiniteCheck: check_order(p, "probe_lo", "probe_hi"); break;
        case Kind::Pfrac: check_pair(p, "probe_lo", "probe_hi"); break;
        case Kind::AreaBetween:
            check_pair(p, "a", "b");
            check_pair(p, "bracket_lo", "bracket_hi");
            if (p.has("a") == p.has("bracket_lo"))
                throw LoadError(line, p.id, "a", "give either a, b or bracket_lo, bracket_hi");
            break;
        case Kind::AreaParametric: check_order(p, "t_from", "t_to"); break;
        case Kind::AreaPolar:
        case Kind::VolumePolar: check_order(p, "phi_from", "phi_to"); break;
        case Kind::Arclen:
        case Kind::Surface:
            validate_coordinates(p);
            check_pair(p, "a", "b");
            check_pair(p, "t_from", "t_to");
            check_pair(p, "phi_from", "phi_to");
            break;
        case Kind::VolumeWasher:
            check_order(p, "a", "b");
            if (p.has("axis") && p.text("axis") == "polar")
                throw LoadError(line, p.id, "axis", "washers revolve about ox or oy");
            break;
        case Kind::Intersections: check_order(p, "lo", "hi"); break;
    }
    return p;
}

std::vector<Problem> parse_corpus(std::string_view text) {
    std::vector<Problem> out;
    std::set<std::string> ids;
    std::optional<std::map<std::string, std::string, std::less<>>> block;
    std::size_t block_line = 0;
    std::size_t line_no = 0;

    auto finish = [&]() {
        if (!block) return;
        auto& f = *block;
        const std::string id = f.count("id") ? f["id"] : std::string();
        if (id.empty()) throw LoadError(block_line, id, "id", "missing required field");
        if (!f.count("kind")) throw LoadError(block_line, id, "kind", "missing required field");
        const auto kind = parse_kind(f["kind"]);
        if (!kind) throw LoadError(block_line, id, "kind", "unknown kind '" + f["kind"] + "'");
        if (!ids.insert(id).second) throw LoadError(block_line, id, "id", "duplicate id");
        out.push_back(make_problem(id, *kind, std::move(f), block_line));
        block.reset();
    };

    std::istringstream is{std::string(text)};
    std::string raw;
    while (std::getline(is, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line != "[problem]") throw LoadError(line_no, "", "", "unknown section " + line);
            finish();
            block.emplace();
            block_line = line_no;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw LoadError(line_no, "", "", "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!block) throw LoadError(line_no, "", key, "field outside a [problem] block");
        if (key.empty()) throw LoadError(line_no, "", "", "empty key");
        if (block->count(key)) {
            const std::string id = block->count("id") ? (*block)["id"] : std::string();
            throw LoadError(line_no, id, key, "duplicate field");
        }
        (*block)[key] = value;
    }
    finish();
    return out;
}

std::vector<Problem> load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open corpus file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str());
}

}  // namespace calcforge::corpus
