#include "calcforge/cli.hpp"

#include "calcforge/corpus.hpp"
#include "calcforge/partial_fractions.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

namespace calcforge::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Fields = std::map<std::string, std::string, std::less<>>;

std::string flag_name(std::string key) {
    for (char& ch : key)
        if (ch == '_') ch = '-';
    return "--" + key;
}

// String options named after corpus keys; only the ones given on the command line become fields.
class FieldOptions {
public:
    FieldOptions(CLI::App* app, std::initializer_list<const char*> keys) {
        for (const char* key : keys) {
            CLI::Option* opt = app->add_option(flag_name(key), values_[key], std::string("corpus key ") + key);
            options_.emplace_back(key, opt);
        }
    }

    Fields fields() const {
        Fields out;
        for (const auto& [key, opt] : options_)
            if (opt->count() > 0) out[key] = values_.at(key);
        return out;
    }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::pair<std::string, CLI::Option*>> options_;
};

// Flags of the integrate subcommand that carry a different corpus key.
std::string flag_for_field(const std::string& field) {
    if (field == "integrand") return "--expr";
    if (field == "lower") return "--from";
    if (field == "upper") return "--to";
    return flag_name(field);
}

corpus::Problem make(corpus::Kind kind, Fields fields, bool require_expected = false) {
    try {
        return corpus::make_problem("cli", kind, std::move(fields), 0, require_expected);
    } catch (const corpus::LoadError& e) {
        if (e.field().empty()) throw UsageError(e.detail());
        const bool renamed = kind == corpus::Kind::Definite;
        throw UsageError((renamed ? flag_for_field(e.field()) : flag_name(e.field())) + ": " + e.detail());
    }
}

double parse_positive(const std::string& text, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(v > 0.0) || !std::isfinite(v))
        throw UsageError(std::string(what) + " must be a positive real, got '" + text + "'");
    return v;
}

std::string coords_of(const Fields& f) {
    if (f.count("rho")) return "polar";
    if (f.count("t_from") || f.count("t_to")) return "parametric";
    return "cartesian";
}

void require_coords(const Fields& f, const std::string& coords) {
    if (coords_of(f) != coords)
        throw UsageError("--coords " + coords + " does not match the curve flags given (" + coords_of(f) + ")");
}

void print_value(std::ostream& out, Format fmt, double v) {
    if (fmt == Format::Json)
        out << "{\"value\": " << corpus::json_real(v) << "}\n";
    else
        out << "value " << corpus::format_real(v) << "\n";
}

void print_integral(std::ostream& out, Format fmt, const corpus::Computation& c) {
    using Shape = corpus::Computation::Shape;
    std::string status;
    std::string direction;
    switch (c.shape) {
        case Shape::Value: status = c.text.empty() ? "converged" : "depth_limit"; break;
        case Shape::Divergent:
            status = "divergent";
            direction = quad::to_string(c.direction);
            break;
        default: status = "inconclusive"; break;
    }
    if (fmt == Format::Json) {
        out << "{\"value\": " << corpus::json_real(c.shape == Shape::Value ? c.value : std::nan(""))
            << ", \"err_estimate\": " << corpus::json_real(c.shape == Shape::Value ? c.err_estimate : std::nan(""))
            << ", \"status\": " << corpus::json_string(status);
        if (!direction.empty()) out << ", \"direction\": " << corpus::json_string(direction);
        out << "}\n";
        return;
    }
    if (c.shape == Shape::Value) {
        out << "value " << corpus::format_real(c.value) << "\n";
        out << "err_estimate " << corpus::format_real(c.err_estimate) << "\n";
    } else {
        out << "last_partial " << corpus::format_real(c.value) << "\n";
    }
    out << "status " << status << "\n";
    if (!direction.empty()) out << "direction " << direction << "\n";
}

void print_row(std::ostream& out, Format fmt, const corpus::Row& r) {
    if (fmt == Format::Json) {
        out << "{\"computed\": " << corpus::json_real(r.computed) << ", \"expected\": " << corpus::json_real(r.expected)
            << ", \"abs_err\": " << corpus::json_real(r.abs_err) << ", \"rel_err\": " << corpus::json_real(r.rel_err)
            << ", \"status\": " << corpus::json_string(corpus::status_name(r.status)) << "}\n";
        return;
    }
    out << "derivative " << corpus::format_real(r.computed) << "\n";
    out << "integrand " << corpus::format_real(r.expected) << "\n";
    out << "rel_err " << corpus::format_real(r.rel_err) << "\n";
    out << "status " << corpus::status_name(r.status) << "\n";
    if (r.status == corpus::Status::Fail && !r.note.empty()) out << "note " << r.note << "\n";
}

// CSV rows for one curve; '.' decimals and LF endings come from format_real and '\n'.
void write_plot(std::ostream& os, const corpus::Problem& p, std::size_t samples) {
    const auto num = [&](const char* k) { return p.number(k); };
    const auto var = [&](const char* fallback) { return p.has("var") ? p.text("var") : std::string(fallback); };
    const auto row = [&](std::initializer_list<double> vals) {
        bool first = true;
        for (double v : vals) {
            if (!first) os << ',';
            os << corpus::format_real(v);
            first = false;
        }
        os << '\n';
    };
    const auto sample = [&](double lo, double hi, std::size_t i) {
        return i + 1 == samples ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    };

    if (p.has("rho")) {
        const auto rho = calcforge::bind(p.expr("rho"), var("phi"));
        os << "phi,rho,x,y\n";
        for (std::size_t i = 0; i < samples; ++i) {
            const double phi = sample(num("phi_from"), num("phi_to"), i);
            const double r = rho(phi);
            row({phi, r, r * std::cos(phi), r * std::sin(phi)});
        }
    } else if (p.has("t_from")) {
        const auto x = calcforge::bind(p.expr("x"), var("t"));
        const auto y = calcforge::bind(p.expr("y"), var("t"));
        os << "t,x,y\n";
        for (std::size_t i = 0; i < samples; ++i) {
            const double t = sample(num("t_from"), num("t_to"), i);
            row({t, x(t), y(t)});
        }
    } else if (p.has("y")) {
        const auto y = calcforge::bind(p.expr("y"), var("x"));
        os << "x,y\n";
        for (std::size_t i = 0; i < samples; ++i) {
            const double x = sample(num("a"), num("b"), i);
            row({x, y(x)});
        }
    } else {
        const auto x = calcforge::bind(p.expr("x"), var("y"));
        os << "x,y\n";
        for (std::size_t i = 0; i < samples; ++i) {
            const double y = sample(num("a"), num("b"), i);
            row({x(y), y});
        }
    }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"calcforge: integral calculus engine", "calcforge"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand");

    CliConfig cfg;
    std::optional<double> rel_tol_flag;
    std::string format = "text";
    quad::ImproperConfig improper;
    app.add_option("--rel-tol", rel_tol_flag, "Relative tolerance (default 1e-10 or CALCFORGE_REL_TOL)");
    app.add_option("--abs-tol", cfg.abs_tol, "Absolute tolerance")->capture_default_str();
    app.add_option("--max-depth", cfg.max_depth, "Maximum bisection depth")->capture_default_str()->check(
        CLI::Range(1, 200));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--singular-magnitude", improper.singular_magnitude, "Endpoint singularity threshold")
        ->capture_default_str();
    app.add_option("--max-doublings", improper.max_doublings, "Cutoff doublings for infinite limits")
        ->capture_default_str()
        ->check(CLI::Range(5, 1000));
    app.add_option("--eps-decades", improper.eps_decades, "Epsilon decades for singular endpoints")
        ->capture_default_str()
        ->check(CLI::Range(5, 15));

    // integrate
    CLI::App* integrate = app.add_subcommand("integrate", "Definite or improper integral");
    std::string i_expr;
    std::string i_var = "x";
    std::string i_from;
    std::string i_to;
    integrate->add_option("--expr", i_expr, "Integrand")->required();
    integrate->add_option("--var", i_var, "Integration variable")->capture_default_str();
    integrate->add_option("--from", i_from, "Lower limit (expression, inf or -inf)")->required();
    integrate->add_option("--to", i_to, "Upper limit (expression, inf or -inf)")->required();

    // pfrac
    CLI::App* pfrac_cmd = app.add_subcommand("pfrac", "Partial fraction decomposition and antiderivative");
    std::string p_num;
    std::string p_den;
    std::string p_var = "x";
    pfrac_cmd->add_option("--num", p_num, "Numerator polynomial")->required();
    pfrac_cmd->add_option("--den", p_den, "Denominator polynomial")->required();
    pfrac_cmd->add_option("--var", p_var, "Variable")->capture_default_str();

    // geometry
    const auto coords_option = [](CLI::App* sub, std::string& coords) {
        sub->add_option("--coords", coords, "Coordinate system")
            ->check(CLI::IsMember({"cartesian", "parametric", "polar"}))
            ->capture_default_str();
    };
    std::string area_coords = "cartesian";
    CLI::App* area = app.add_subcommand("area", "Plane area");
    coords_option(area, area_coords);
    FieldOptions area_f(area, {"lower_fn", "upper_fn", "a", "b", "bracket_lo", "bracket_hi", "x", "y", "t_from", "t_to",
                               "rho", "phi_from", "phi_to", "factor", "var"});

    std::string arclen_coords = "cartesian";
    CLI::App* arclen = app.add_subcommand("arclen", "Arc length");
    coords_option(arclen, arclen_coords);
    FieldOptions arclen_f(arclen, {"x", "y", "a", "b", "t_from", "t_to", "rho", "phi_from", "phi_to", "var"});

    std::string surface_coords = "cartesian";
    CLI::App* surface = app.add_subcommand("surface", "Surface of revolution");
    coords_option(surface, surface_coords);
    FieldOptions surface_f(surface,
                           {"x", "y", "a", "b", "t_from", "t_to", "rho", "phi_from", "phi_to", "axis", "factor", "var"});

    std::string volume_coords = "cartesian";
    CLI::App* volume = app.add_subcommand("volume", "Volume of revolution");
    coords_option(volume, volume_coords);
    FieldOptions volume_f(volume, {"outer", "inner", "a", "b", "rho", "phi_from", "phi_to", "axis", "factor", "var"});

    CLI::App* intersect = app.add_subcommand("intersect", "Intersections of two curves");
    FieldOptions intersect_f(intersect, {"f", "g", "lo", "hi", "max_roots", "var"});

    CLI::App* check = app.add_subcommand("check", "Check an antiderivative by differentiation");
    FieldOptions check_f(check, {"integrand", "expected", "probe_lo", "probe_hi", "tol_rel", "var"});

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Verify a problem corpus");
    std::string corpus_path;
    std::string json_out;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    verify->add_option("--corpus", corpus_path, "Corpus file")->required();
    verify->add_option("--json", json_out, "Write the JSON report to this file");
    verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));

    // plot
    CLI::App* plot = app.add_subcommand("plot", "Emit curve samples as CSV");
    std::string plot_kind = "curve";
    std::string plot_coords = "cartesian";
    std::string plot_out;
    plot->add_option("--kind", plot_kind, "What to plot")->check(CLI::IsMember({"curve"}))->capture_default_str();
    coords_option(plot, plot_coords);
    plot->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str()->check(
        CLI::Range(std::size_t{2}, std::size_t{10000000}));
    plot->add_option("--out", plot_out, "Output CSV file, - for standard output")->required();
    FieldOptions plot_f(plot, {"x", "y", "a", "b", "t_from", "t_to", "rho", "phi_from", "phi_to", "var"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "calcforge: " << e.what() << "\n";
        return kUsage;
    }

    if (rel_tol_flag) {
        cfg.rel_tol = *rel_tol_flag;
    } else if (const char* env = std::getenv("CALCFORGE_REL_TOL")) {
        cfg.rel_tol = parse_positive(env, "CALCFORGE_REL_TOL");
    }
    if (!(cfg.rel_tol > 0.0)) throw UsageError("--rel-tol must be positive");
    if (!(cfg.abs_tol > 0.0)) throw UsageError("--abs-tol must be positive");
    if (!(improper.singular_magnitude > 1.0)) throw UsageError("--singular-magnitude must exceed 1");
    cfg.format = format == "json" ? Format::Json : Format::Text;
    const corpus::EngineConfig engine{cfg.rel_tol, cfg.abs_tol, cfg.max_depth, improper};

    if (integrate->parsed()) {
        const auto p = make(corpus::Kind::Definite,
                            {{"integrand", i_expr}, {"var", i_var}, {"lower", i_from}, {"upper", i_to}});
        print_integral(out, cfg.format, corpus::compute(p, engine));
        return kOk;
    }
    if (pfrac_cmd->parsed()) {
        Expr num_e;
        Expr den_e;
        try {
            num_e = parse(p_num);
            den_e = parse(p_den);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        pfrac::PFDecomposition d;
        Poly num;
        Poly den;
        try {
            num = pfrac::to_poly(num_e, p_var);
            den = pfrac::to_poly(den_e, p_var);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        d = pfrac::decompose(num, den);
        const std::string decomposition = to_text(pfrac::to_expr(d, p_var));
        const std::string antiderivative = to_text(pfrac::to_expr(pfrac::antiderivative(d), p_var));
        const bool recomposed = pfrac::recompose_numerator(d, den) == num;
        if (cfg.format == Format::Json) {
            out << "{\"decomposition\": " << corpus::json_string(decomposition)
                << ", \"antiderivative\": " << corpus::json_string(antiderivative)
                << ", \"recomposed\": " << (recomposed ? "true" : "false") << "}\n";
        } else {
            out << "decomposition " << decomposition << "\n";
            out << "antiderivative " << antiderivative << " + C\n";
            out << "recomposed " << (recomposed ? "exact" : "MISMATCH") << "\n";
        }
        return recomposed ? kOk : kFailure;
    }
    if (area->parsed()) {
        Fields f = area_f.fields();
        const corpus::Kind kind = area_coords == "polar"        ? corpus::Kind::AreaPolar
                                  : area_coords == "parametric" ? corpus::Kind::AreaParametric
                                                                : corpus::Kind::AreaBetween;
        print_value(out, cfg.format, corpus::compute(make(kind, std::move(f)), engine).value);
        return kOk;
    }
    if (arclen->parsed() || surface->parsed()) {
        const bool is_arclen = arclen->parsed();
        Fields f = is_arclen ? arclen_f.fields() : surface_f.fields();
        require_coords(f, is_arclen ? arclen_coords : surface_coords);
        const auto p = make(is_arclen ? corpus::Kind::Arclen : corpus::Kind::Surface, std::move(f));
        print_value(out, cfg.format, corpus::compute(p, engine).value);
        return kOk;
    }
    if (volume->parsed()) {
        if (volume_coords == "parametric") throw UsageError("volume supports --coords cartesian or polar");
        const corpus::Kind kind = volume_coords == "polar" ? corpus::Kind::VolumePolar : corpus::Kind::VolumeWasher;
        print_value(out, cfg.format, corpus::compute(make(kind, volume_f.fields()), engine).value);
        return kOk;
    }
    if (intersect->parsed()) {
        Fields f = intersect_f.fields();
        f["expected_roots"] = "";
        const auto c = corpus::compute(make(corpus::Kind::Intersections, std::move(f)), engine);
        if (cfg.format == Format::Json) {
            out << "{\"roots\": [";
            for (std::size_t i = 0; i < c.roots.size(); ++i) out << (i ? ", " : "") << corpus::json_real(c.roots[i]);
            out << "]}\n";
        } else {
            for (double r : c.roots) out << "root " << corpus::format_real(r) << "\n";
        }
        return kOk;
    }
    if (check->parsed()) {
        const auto p = make(corpus::Kind::IndefiniteCheck, check_f.fields(), true);
        const corpus::Row r = corpus::evaluate(p, engine);
        print_row(out, cfg.format, r);
        return r.status == corpus::Status::Fail ? kFailure : kOk;
    }
    if (verify->parsed()) {
        std::vector<corpus::Problem> problems;
        try {
            problems = corpus::load(corpus_path);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        const corpus::Report report = corpus::verify(problems, engine, jobs);
        out << (cfg.format == Format::Json ? corpus::to_json(report) : corpus::to_text_table(report));
        if (!json_out.empty()) {
            std::ofstream f(json_out, std::ios::binary);
            f << corpus::to_json(report);
            if (!f) throw UsageError("cannot write " + json_out);
        }
        return report.summary.fail == 0 ? kOk : kFailure;
    }
    if (plot->parsed()) {
        Fields f = plot_f.fields();
        require_coords(f, plot_coords);
        const auto p = make(corpus::Kind::Arclen, std::move(f));
        if (plot_out == "-") {
            write_plot(out, p, cfg.samples);
        } else {
            std::ofstream file(plot_out, std::ios::binary);
            write_plot(file, p, cfg.samples);
            if (!file) throw UsageError("cannot write " + plot_out);
        }
        return kOk;
    }
    return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"calcforge"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    } catch (const UsageError& e) {
        err << "calcforge: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "calcforge: " << e.what() << "\n";
        return kFailure;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace calcforge::cli
