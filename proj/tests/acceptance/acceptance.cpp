// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "cli.hpp"

#include "supertube/tubegeom/tube.hpp"
#include "supertube/verify/suites.hpp"
#include "supertube/zeta/zeta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace supertube;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

verify::SuiteResult suite(const std::string& name) { return verify::run_suite(name, verify::SuiteConfig{}); }

// Every row passes, has at least `min_cases`, and stays under `bound`.
Outcome rows_within(const verify::SuiteResult& s, long min_cases, double bound) {
    Outcome o;
    for (const auto& r : s.rows) {
        if (!r.passed || r.cases < min_cases || !(r.residual <= bound)) {
            o.pass = false;
            o.detail += " [" + r.label + ": " + std::to_string(r.cases) + " cases, residual " + num(r.residual) + "]";
        }
    }
    return o;
}

Outcome sphere_tube() {
    const auto t0 = Clock::now();
    const auto s = tubegeom::ParametricSurface::sphere(1.0, 2);
    Outcome o;
    double worst_quad = 0, worst_sigma = 0;
    std::uint64_t seed = 11;
    for (double h : {0.1, 0.25, 0.4}) {
        const double exact = 4 * std::numbers::pi * (1 - h) * (1 - h);
        const auto ht = tubegeom::half_tube_volume(s, h);
        worst_quad = std::max(worst_quad, std::abs(ht.quadrature - exact));
        // Monte Carlo sees the shell between the sphere and the parallel surface.
        const double shell = 4 * std::numbers::pi * (1 - std::pow(1 - h, 3)) / 3;
        const auto mc = tubegeom::monte_carlo_tube_volume(s, h, 1'000'000, seed++);
        worst_sigma = std::max(worst_sigma, std::abs(mc.estimate - shell) / mc.stderr_);
    }
    const double secs = seconds_since(t0);
    o.pass = worst_quad < 1e-8 && worst_sigma < 3 && secs < 30;
    o.detail = "quadrature residual " + num(worst_quad) + ", MC " + num(worst_sigma) + " sigma, " + num(secs) + " s";
    return o;
}

Outcome two_sided() {
    Outcome o;
    const double h = 0.2;
    double worst = 0;
    for (auto [s, chi] : {std::pair{tubegeom::ParametricSurface::sphere(1.0, 2), 2.0},
                          std::pair{tubegeom::ParametricSurface::torus(2.0, 1.0), 0.0}}) {
        const double vol = tubegeom::half_tube_volume(s, 0).quadrature;
        const double lhs = tubegeom::half_tube_volume(s, h).quadrature + tubegeom::half_tube_volume(s, -h).quadrature -
                           2 * vol;
        worst = std::max(worst, std::abs(lhs - 4 * std::numbers::pi * chi * h * h));
    }
    o.pass = worst < 1e-7;
    o.detail = "max residual " + num(worst) + " (sphere, torus at h = 0.2)";
    return o;
}

Outcome eq12() {
    const auto s = suite("eq12");
    Outcome o = rows_within(s, 1, 1e-8);
    o.pass = o.pass && s.cases() >= 200 && s.rows.size() >= 10;
    o.detail = std::to_string(s.cases()) + " points on " + std::to_string(s.rows.size()) + " level sets, max residual " +
               num(s.max_residual()) + o.detail;
    return o;
}

Outcome gauge() {
    const auto s = suite("gauge");
    Outcome o = rows_within(s, 20, 1e-9);
    o.detail = "max relative deviation " + num(s.max_residual()) + o.detail;
    return o;
}

Outcome ber_mult() {
    const auto t0 = Clock::now();
    const auto s = suite("ber-mult");
    const double secs = seconds_since(t0);
    Outcome o = rows_within(s, 50, 0);
    long mult = 0;
    for (const auto& r : s.rows)
        if (r.label.rfind("multiplicative", 0) == 0) mult += r.cases;
    o.pass = o.pass && mult >= 150 && secs < 60;
    o.detail = std::to_string(mult) + " exact products over (1,1),(2,1),(2,2), " + num(secs) + " s" + o.detail;
    return o;
}

Outcome charfn() {
    const auto s = suite("charfn");
    Outcome o = rows_within(s, 100, 0);
    o.pass = o.pass && s.rows.size() == 5;
    o.detail = "bullets (a)-(e), 100 matrices each, exact" + o.detail;
    return o;
}

Outcome props() {
    Outcome o;
    for (const char* name : {"prop3", "prop4"}) {
        const auto r = rows_within(suite(name), 50, 0);
        o.pass = o.pass && r.pass;
        o.detail += r.detail;
    }
    o.detail = "50 constructions each, exact" + o.detail;
    return o;
}

Outcome rationality() {
    using zeta::PrimePolyVariety;
    const auto t0 = Clock::now();
    const std::vector<std::pair<std::string, PrimePolyVariety>> corpus = {
        {"point/F3", PrimePolyVariety(3, 1, {{{1}, 1}, {{0}, -1}})},
        {"0/F2 n=1", PrimePolyVariety(2, 1, {})},
        {"0/F3 n=1", PrimePolyVariety(3, 1, {})},
        {"0/F2 n=2", PrimePolyVariety(2, 2, {})},
        {"0/F3 n=2", PrimePolyVariety(3, 2, {})},
        {"x/F2", PrimePolyVariety(2, 1, {{{1}, 1}})},
        {"conic/F3", PrimePolyVariety(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}})},
        {"cubic/F5", PrimePolyVariety(5, 2, {{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, -1}, {{0, 0}, -1}})},
    };
    const std::uint64_t budget = 1'000'000'000;
    zeta::CountOptions opts;
    opts.budget = budget;
    Outcome o;
    int min_held = 1 << 20;
    for (const auto& [name, v] : corpus) {
        // The (2,2) fit is determined by nu_1..nu_4; every later count is held out.
        int K = 6;
        while (zeta::count_cost(v, K + 1) <= budget && K < 8) ++K;
        try {
            const auto zr = zeta::compute_zeta(v, K, opts);
            const auto r = zeta::zeta_rational(zr, 2, 2);
            const auto pred = zeta::predict_counts(r, K);
            bool ok = true;
            for (int k = 1; k <= K; ++k)
                ok = ok && pred.counts[static_cast<std::size_t>(k - 1)] ==
                               exact::Rational(exact::Integer(static_cast<unsigned long>(zr.counts[static_cast<std::size_t>(k - 1)])));
            min_held = std::min(min_held, K - 4);
            if (!ok) {
                o.pass = false;
                o.detail += " [" + name + " mismatch]";
            }
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += " [" + name + ": " + e.what() + "]";
        }
    }
    const double secs = seconds_since(t0);
    o.pass = o.pass && min_held >= 2 && secs < 300;
    o.detail = std::to_string(corpus.size()) + " varieties, at least " + std::to_string(min_held) +
               " held-out counts each, " + num(secs) + " s" + o.detail;
    return o;
}

Outcome bridge() {
    const auto s = suite("bridge");
    Outcome o = rows_within(s, 8, 0);
    long random_cases = 0;
    for (const auto& r : s.rows)
        if (r.label.rfind("random", 0) == 0) random_cases += r.cases;
    o.pass = o.pass && random_cases >= 100;
    o.detail = "corpus zetas plus " + std::to_string(random_cases) + " random fractions" + o.detail;
    return o;
}

Outcome determinism() {
    Outcome o;
    std::ostringstream a, b, err;
    const std::vector<std::string> args = {"verify", "all", "--seed", "1"};
    const int ca = cli::run_cli(args, a, err);
    const int cb = cli::run_cli(args, b, err);
    const bool same_report = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();

    const auto conic = zeta::PrimePolyVariety(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}});
    const auto cubic = zeta::PrimePolyVariety(5, 2, {{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, -1}, {{0, 0}, -1}});
    bool same_counts = true;
    for (const auto* v : {&conic, &cubic}) {
        for (int k = 1; k <= 4; ++k) {
            zeta::CountOptions one, many;
            many.workers = 4;
            many.chunks = 7;
            same_counts = same_counts && zeta::count_points(*v, k, one) == zeta::count_points(*v, k, many);
        }
    }
    o.pass = same_report && same_counts;
    o.detail = std::string("verify all twice: ") + (same_report ? "identical" : "DIFFERENT") + " (" +
               std::to_string(a.str().size()) + " bytes); counts with 1 vs 4 workers: " +
               (same_counts ? "identical" : "DIFFERENT");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"sphere tube formula", sphere_tube}, {"two-sided 2-surface identity", two_sided},
        {"local characteristic identity", eq12}, {"dual-density gauge law", gauge},
        {"Ber multiplicativity", ber_mult},   {"characteristic function bullets", charfn},
        {"quotient and cohomology characteristic functions", props}, {"rationality of point-count zetas", rationality},
        {"superspace bridge round trip", bridge}, {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %zu %s: %s (%s; %.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
