// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.
#include "calcforge/cli.hpp"
#include "calcforge/corpus.hpp"
#include "calcforge/partial_fractions.hpp"
#include "calcforge/quadrature.hpp"
#include "support/properties.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace calcforge;

namespace {

const std::string kSample = std::string(CALCFORGE_DATA_DIR) + "/sample.corpus";
constexpr double kPi = M_PI;

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

int failures = 0;

void report(const char* name, const char* title, Criterion& c) {
    std::printf("[%s] %s %s%s\n", c.ok ? "PASS" : "FAIL", name, title, c.detail.str().c_str());
    if (!c.ok) ++failures;
}

const std::map<std::string, corpus::Problem>& sample() {
    static const std::map<std::string, corpus::Problem> problems = [] {
        std::map<std::string, corpus::Problem> m;
        for (auto& p : corpus::load(kSample)) m.emplace(p.id, p);
        return m;
    }();
    return problems;
}

corpus::Computation run(const std::string& id) { return corpus::compute(sample().at(id), corpus::EngineConfig{}); }

bool close(double got, double want, double rel) { return std::fabs(got - want) <= rel * std::fabs(want); }

// The engine result for a sample problem, compared with an independently typed closed form.
void golden(Criterion& c, const std::string& id, double want, double rel = 1e-6) {
    try {
        const auto r = run(id);
        std::ostringstream what;
        what.precision(12);
        what << id << ": got " << r.value << ", want " << want;
        c.expect(r.shape == corpus::Computation::Shape::Value && close(r.value, want, rel), what.str());
    } catch (const std::exception& e) {
        c.expect(false, id + ": " + e.what());
    }
}

double brute_force(const char* integrand, double a, double b) {
    return quad::integrate_finite(calcforge::bind(parse(integrand), "x"), a, b, 1e-14, 1e-300, 60).value;
}

Rational q(std::int64_t n) { return Rational(BigInt(n), BigInt(1)); }

void ac1() {
    Criterion c;
    golden(c, "sample.7a", std::log(2.0) + kPi / 2 - 2);
    golden(c, "sample.7b", 32.0 / 65);
    golden(c, "sample.7c", kPi / 12);
    golden(c, "sample.7d", 29.0 / 3 + 8 * std::log(1.5));
    report("AC1", "definite integrals", c);
}

void ac2() {
    using pfrac::LinearPower;
    using pfrac::PFTerm;
    using pfrac::QuadLog;
    Criterion c;
    struct Case {
        const char* id;
        Poly polynomial_part;
        std::vector<PFTerm> terms;
    };
    // A, B, C of the textbook ansatz appear as the coefficients below.
    const std::vector<Case> cases = {
        {"sample.4a", Poly{}, {LinearPower{q(-1), q(-2), 1}, LinearPower{q(-4), q(-1), 1}, LinearPower{q(2), q(1), 1}}},
        {"sample.4b", Poly::constant(q(3)), {LinearPower{q(6), q(-2), 1}, LinearPower{q(4), q(2), 2}}},
        {"sample.4c", Poly{}, {LinearPower{q(-1), q(1), 1}, QuadLog{q(1), q(4), q(5)}}},
    };
    for (const auto& k : cases) {
        const auto& p = sample().at(k.id);
        const Poly num = pfrac::to_poly(p.expr("num"), "x");
        const Poly den = pfrac::to_poly(p.expr("den"), "x");
        const auto d = pfrac::decompose(num, den);
        c.expect(d.polynomial_part == k.polynomial_part, std::string(k.id) + " polynomial part");
        c.expect(d.terms == k.terms, std::string(k.id) + " coefficients");
        c.expect(pfrac::recompose_numerator(d, den) == num, std::string(k.id) + " recomposition");
        const auto row = corpus::evaluate(p, corpus::EngineConfig{});
        c.expect(row.status == corpus::Status::Pass, std::string(k.id) + " antiderivative");
    }
    report("AC2", "partial fractions, exact", c);
}

void ac3() {
    Criterion c;
    golden(c, "sample.8a", 125.0 / 6);
    golden(c, "sample.8b", 2 * kPi);
    golden(c, "sample.8c", 4 * kPi);
    report("AC3", "areas", c);
}

void ac4() {
    Criterion c;
    golden(c, "sample.9a", std::log(3.0) / 6);
    golden(c, "sample.9b", 32.0);
    golden(c, "sample.9c", 10 * (std::exp(kPi / 5) - 1));
    report("AC4", "arc lengths", c);
}

void ac5() {
    Criterion c;
    const double catenoid = kPi * (1 + std::sinh(4.0) / 4);
    golden(c, "sample.10a", catenoid);
    golden(c, "sample.10b", 12 * kPi * kPi);
    golden(c, "sample.10c", 2 * kPi * (2 - std::sqrt(2.0)));
    // Independent oracle: 2*pi*y*sqrt(1 + y'^2) = pi*ch(2x)^2 for y = ch(2x)/2.
    const double oracle = 2 * kPi * brute_force("1/2*ch(2*x)*ch(2*x)", -1, 1);
    c.expect(close(oracle, catenoid, 1e-12), "brute-force catenoid oracle");
    const double printed = kPi * (1 + kPi / 4 * std::sinh(4.0));
    c.expect(!close(run("sample.10a").value, printed, 1e-6), "printed variant must not match");
    c.expect(sample().at("sample.10a").has("paper_discrepancy"), "sample.10a discrepancy recorded");
    char buf[96];
    std::snprintf(buf, sizeof buf, " (catenoid %.9f; printed variant %.6f)", catenoid, printed);
    c.detail << buf;
    report("AC5", "surfaces of revolution", c);
}

void ac6() {
    Criterion c;
    golden(c, "sample.11a", 50.4 * kPi);
    golden(c, "sample.11b", 140.8 * kPi);
    golden(c, "sample.11c", 576 * kPi);
    // u = 1 + cos(phi): (2pi/3) * 216 * int_0^2 u^3 du = 576 pi.
    const double oracle = 2 * kPi / 3 * 216 * brute_force("(1 + cos(x))^3*sin(x)", 0, kPi);
    c.expect(close(oracle, 576 * kPi, 1e-12), "cardioid oracle");
    c.expect(!close(run("sample.11c").value, 476 * kPi, 1e-6), "printed 476pi must not match");
    const auto row = corpus::evaluate(sample().at("sample.11c"), corpus::EngineConfig{});
    c.expect(row.status == corpus::Status::DiscrepancyDocumented, "sample.11c flagged discrepancy_documented");
    report("AC6", "volumes of revolution", c);
}

void ac7() {
    Criterion c;
    const auto div = run("sample.12a");
    c.expect(div.shape == corpus::Computation::Shape::Divergent && div.direction == quad::Direction::PosInf,
             "sample.12a Divergent(+inf)");
    golden(c, "sample.12b", 1.0);
    report("AC7", "improper integrals", c);
}

void ac8() {
    Criterion c;
    const std::pair<const char*, testing::Outcome (*)()> suites[] = {
        {"derivative vs finite difference", testing::derivative_vs_finite_difference},
        {"polynomial exactness", testing::quadrature_polynomial_exactness},
        {"additivity and orientation", testing::quadrature_additivity_orientation},
        {"1/x^p family", testing::improper_p_family},
        {"geometry closures", testing::geometry_closures},
    };
    for (const auto& [name, fn] : suites) {
        const auto o = fn();
        c.expect(o.ok, std::string(name) + ": " + o.detail);
    }
    const auto rt = testing::parse_print_round_trip(1000);
    c.expect(rt.ok, "round trip: " + rt.detail);
    report("AC8", "property suites", c);
}

void ac9() {
    Criterion c;
    int passed = 0;
    const std::set<char> sections = {'1', '2', '3', '5', '6'};
    for (const auto& [id, p] : sample()) {
        if (p.kind != corpus::Kind::IndefiniteCheck || id.size() < 8 || !sections.count(id[7])) continue;
        const auto row = corpus::evaluate(p, corpus::EngineConfig{});
        const auto comp = corpus::compute(p, corpus::EngineConfig{});
        const bool ok = row.status == corpus::Status::Pass && p.tol_rel <= 1e-8 && comp.valid_probes == 10;
        c.expect(ok, id);
        passed += ok;
    }
    c.expect(passed >= 12, "fewer than 12 indefinite checks");
    c.detail << " (" << passed << " checks at 10 probes)";
    report("AC9", "indefinite-answer checks", c);
}

void ac10() {
    Criterion c;
    const auto json_path = std::filesystem::temp_directory_path() / "calcforge_acceptance_report.json";
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run({"verify", "--corpus", kSample, "--json", json_path.string()}, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(code == cli::kOk, "exit code " + std::to_string(code) + " " + err.str());
    std::ifstream in(json_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(json_path);
    const auto r = corpus::report_from_json(ss.str());
    c.expect(r.summary.total >= 30, "fewer than 30 problems");
    c.expect(r.summary.fail == 0, "fail rows present");
    std::set<std::string> documented;
    for (const auto& row : r.rows)
        if (row.status == corpus::Status::DiscrepancyDocumented) documented.insert(row.id);
    c.expect(documented == std::set<std::string>{"sample.10a", "sample.11c"}, "documented discrepancy set");
    char buf[96];
    std::snprintf(buf, sizeof buf, " (%zu problems, %.2f s)", r.summary.total, seconds);
    c.detail << buf;
    report("AC10", "end-to-end verify", c);
}

}  // namespace

int main() {
    for (auto fn : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10}) {
        try {
            fn();
        } catch (const std::exception& e) {
            std::printf("[FAIL] criterion raised: %s\n", e.what());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
