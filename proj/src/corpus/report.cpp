#include "calcforge/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

namespace calcforge::corpus {

namespace {

constexpr double kAbsFloor = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

double relative(double abs, double expected) {
    if (expected != 0.0) return abs / std::fabs(expected);
    return abs == 0.0 ? 0.0 : HUGE_VAL;
}

bool within(const Row& r, double tol) { return r.rel_err <= tol || r.abs_err <= kAbsFloor; }

void compare(Row& r, double computed, double expected) {
    r.computed = computed;
    r.expected = expected;
    r.abs_err = std::fabs(computed - expected);
    r.rel_err = relative(r.abs_err, expected);
}

bool expects_divergence(const Problem& p) {
    return p.has("expected_status") && p.text("expected_status") == "divergent";
}

void judge_value(Row& r, const Problem& p, const Computation& c) {
    if (expects_divergence(p)) {
        r.computed = c.value;
        r.expected = p.has("expected") ? p.number("expected") : kNaN;
        r.abs_err = r.rel_err = HUGE_VAL;
        r.status = Status::Fail;
        r.note = "expected divergence, integral converged";
        return;
    }
    compare(r, c.value, p.number("expected"));
    if (!c.text.empty()) r.note = c.text;
    if (!within(r, p.tol_rel)) {
        r.status = Status::Fail;
        return;
    }
    if (!p.paper_discrepancy) {
        r.status = Status::Pass;
        return;
    }
    r.status = Status::DiscrepancyDocumented;
    r.note = *p.paper_discrepancy;
    if (p.has("paper_value")) {
        Row printed;
        compare(printed, c.value, p.number("paper_value"));
        if (within(printed, p.tol_rel)) {
            r.status = Status::Fail;
            r.note = "computed value also matches the printed value; the discrepancy is not real";
        }
    }
}

void judge_divergent(Row& r, const Problem& p, const Computation& c) {
    const double sign = c.direction == quad::Direction::PosInf ? HUGE_VAL
                        : c.direction == quad::Direction::NegInf ? -HUGE_VAL
                                                                 : kNaN;
    r.computed = sign;
    r.expected = p.has("expected") ? p.number("expected") : kNaN;
    r.note = "divergent (" + quad::to_string(c.direction) + ")";
    const bool direction_ok = !p.has("expected") || r.expected == sign;
    if (expects_divergence(p) && direction_ok) {
        r.abs_err = r.rel_err = 0.0;
        r.status = Status::Pass;
    } else {
        r.abs_err = r.rel_err = HUGE_VAL;
        r.status = Status::Fail;
    }
}

std::vector<double> expected_roots(const Problem& p) {
    std::vector<double> out;
    std::istringstream is(p.text("expected_roots"));
    std::string item;
    while (std::getline(is, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(eval(parse(item), Binding{}));
    std::sort(out.begin(), out.end());
    return out;
}

void judge_roots(Row& r, const Problem& p, const Computation& c) {
    const std::vector<double> want = expected_roots(p);
    if (want.size() != c.roots.size()) {
        r.computed = static_cast<double>(c.roots.size());
        r.expected = static_cast<double>(want.size());
        r.abs_err = std::fabs(r.computed - r.expected);
        r.rel_err = relative(r.abs_err, r.expected);
        r.status = Status::Fail;
        r.note = "found " + std::to_string(c.roots.size()) + " roots, expected " + std::to_string(want.size());
        return;
    }
    // Report the root farthest from passing.
    r.status = Status::Pass;
    double worst = -1.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        Row probe;
        compare(probe, c.roots[i], want[i]);
        const double score = std::min(probe.rel_err / p.tol_rel, probe.abs_err / kAbsFloor);
        if (score > worst) {
            worst = score;
            compare(r, c.roots[i], want[i]);
        }
    }
    if (want.empty()) compare(r, 0.0, 0.0);
    r.status = within(r, p.tol_rel) ? Status::Pass : Status::Fail;
    r.note = std::to_string(want.size()) + " roots";
}

void judge_derivative(Row& r, const Problem& p, const Computation& c) {
    compare(r, c.derivative, c.integrand);
    r.status = within(r, p.tol_rel) ? Status::Pass : Status::Fail;
    r.note = std::to_string(c.valid_probes) + " probes";
    if (!c.recomposed) {
        r.status = Status::Fail;
        r.note = "recombined numerator differs from the input";
    }
}

void append_real(std::string& out, double v) { out += json_real(v); }

double read_real(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "+inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    if (s == "nan") return kNaN;
    throw InvalidArgument("not a real: " + s);
}

}  // namespace

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::DiscrepancyDocumented: return "discrepancy_documented";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::optional<Status> parse_status(std::string_view name) {
    for (Status s : {Status::Pass, Status::Fail, Status::DiscrepancyDocumented, Status::Skipped})
        if (status_name(s) == name) return s;
    return std::nullopt;
}

Row evaluate(const Problem& p, const EngineConfig& cfg) {
    Row r;
    r.id = p.id;
    if (p.skip) {
        r.computed = r.expected = r.abs_err = r.rel_err = kNaN;
        r.status = Status::Skipped;
        r.note = *p.skip;
        return r;
    }
    try {
        const Computation c = compute(p, cfg);
        switch (c.shape) {
            case Computation::Shape::Value: judge_value(r, p, c); break;
            case Computation::Shape::Divergent: judge_divergent(r, p, c); break;
            case Computation::Shape::Inconclusive:
                r.computed = c.value;
                r.expected = p.has("expected") ? p.number("expected") : kNaN;
                r.abs_err = r.rel_err = kNaN;
                r.status = Status::Fail;
                r.note = "convergence inconclusive";
                break;
            case Computation::Shape::Roots: judge_roots(r, p, c); break;
            case Computation::Shape::DerivativeCheck: judge_derivative(r, p, c); break;
        }
    } catch (const std::exception& e) {
        r.computed = r.abs_err = r.rel_err = kNaN;
        r.expected = kNaN;
        r.status = Status::Fail;
        r.note = e.what();
    }
    return r;
}

Summary summarize(const std::vector<Row>& rows) {
    Summary s;
    s.total = rows.size();
    for (const Row& r : rows) {
        switch (r.status) {
            case Status::Pass: ++s.pass; break;
            case Status::Fail: ++s.fail; break;
            case Status::DiscrepancyDocumented: ++s.discrepancy_documented; break;
            case Status::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

Report verify(const std::vector<Problem>& problems, const EngineConfig& cfg, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.rows.resize(problems.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < problems.size(); i = next++) report.rows[i] = evaluate(problems[i], cfg);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(problems.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    report.summary = summarize(report.rows);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string json_real(double v) {
    const std::string s = format_real(v);
    return std::isfinite(v) ? s : "\"" + s + "\"";
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string to_json(const Report& r) {
    std::string out = "{\n  \"rows\": [";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const Row& row = r.rows[i];
        out += i == 0 ? "\n    " : ",\n    ";
        out += "{\"id\": " + json_string(row.id) + ", \"computed\": ";
        append_real(out, row.computed);
        out += ", \"expected\": ";
        append_real(out, row.expected);
        out += ", \"abs_err\": ";
        append_real(out, row.abs_err);
        out += ", \"rel_err\": ";
        append_real(out, row.rel_err);
        out += ", \"status\": " + json_string(status_name(row.status)) + "}";
    }
    out += r.rows.empty() ? "],\n" : "\n  ],\n";
    const Summary& s = r.summary;
    out += "  \"summary\": {\"total\": " + std::to_string(s.total) + ", \"pass\": " + std::to_string(s.pass) +
           ", \"fail\": " + std::to_string(s.fail) +
           ", \"discrepancy_documented\": " + std::to_string(s.discrepancy_documented) +
           ", \"skipped\": " + std::to_string(s.skipped) + "},\n";
    out += "  \"wall_time_s\": " + json_real(r.wall_time_s) + "\n}\n";
    return out;
}

Report report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text.begin(), text.end());
    Report r;
    for (const auto& jr : j.at("rows")) {
        Row row;
        row.id = jr.at("id").get<std::string>();
        row.computed = read_real(jr.at("computed"));
        row.expected = read_real(jr.at("expected"));
        row.abs_err = read_real(jr.at("abs_err"));
        row.rel_err = read_real(jr.at("rel_err"));
        const auto st = parse_status(jr.at("status").get<std::string>());
        if (!st) throw InvalidArgument("unknown status in report");
        row.status = *st;
        r.rows.push_back(std::move(row));
    }
    const auto& js = j.at("summary");
    r.summary.total = js.at("total").get<std::size_t>();
    r.summary.pass = js.at("pass").get<std::size_t>();
    r.summary.fail = js.at("fail").get<std::size_t>();
    r.summary.discrepancy_documented = js.at("discrepancy_documented").get<std::size_t>();
    r.summary.skipped = js.at("skipped").get<std::size_t>();
    r.wall_time_s = read_real(j.at("wall_time_s"));
    return r;
}

std::string to_text_table(const Report& r) {
    std::size_t id_w = 2;
    for (const Row& row : r.rows) id_w = std::max(id_w, row.id.size());
    std::ostringstream os;
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %-22s  %-24s  %-24s  %-9s  %s\n", static_cast<int>(id_w), "id", "status",
                  "computed", "expected", "rel_err", "note");
    os << line;
    for (const Row& row : r.rows) {
        std::string rel = "nan";
        if (std::isfinite(row.rel_err)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2e", row.rel_err);
            rel = buf;
        } else if (std::isinf(row.rel_err)) {
            rel = "inf";
        }
        std::snprintf(line, sizeof line, "%-*s  %-22s  %-24s  %-24s  %-9s  ", static_cast<int>(id_w), row.id.c_str(),
                      std::string(status_name(row.status)).c_str(), format_real(row.computed).c_str(),
                      format_real(row.expected).c_str(), rel.c_str());
        os << line << row.note << '\n';
    }
    const Summary& s = r.summary;
    os << "total " << s.total << ", pass " << s.pass << ", fail " << s.fail << ", discrepancy_documented "
       << s.discrepancy_documented << ", skipped " << s.skipped << "\n";
    std::snprintf(line, sizeof line, "wall time %.3f s\n", r.wall_time_s);
    os << line;
    return os.str();
}

}  // namespace calcforge::corpus
