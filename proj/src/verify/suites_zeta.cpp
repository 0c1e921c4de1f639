#include "common.hpp"
#include "supertube/error.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/tubegeom/tube.hpp"
#include "supertube/zeta/zeta.hpp"

#include <mutex>

namespace supertube::verify::detail {

using exact::RationalFunction;
using exact::UniPoly;
using namespace zeta;

namespace {

struct CorpusEntry {
    std::string name;
    PrimePolyVariety variety;
};

std::vector<CorpusEntry> corpus() {
    return {
        {"point x-1 over F_3", PrimePolyVariety(3, 1, {{{1}, 1}, {{0}, -1}})},
        {"line 0 over F_2", PrimePolyVariety(2, 1, {})},
        {"line 0 over F_3", PrimePolyVariety(3, 1, {})},
        {"plane 0 over F_2", PrimePolyVariety(2, 2, {})},
        {"plane 0 over F_3", PrimePolyVariety(3, 2, {})},
        {"x over F_2", PrimePolyVariety(2, 1, {{{1}, 1}})},
        {"conic x^2+y^2-1 over F_3", PrimePolyVariety(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}})},
        {"cubic y^2-x^3-x-1 over F_5",
         PrimePolyVariety(5, 2, {{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, -1}, {{0, 0}, -1}})},
    };
}

constexpr int kCounts = 6;       // nu_1..nu_6 feed the series
constexpr int kDegree = 2;       // pmax = qmax = 2, so nu_5, nu_6 are outside the fit
constexpr int kExtraHoldout = 2; // further counts when the budget allows

struct CorpusZeta {
    std::string name;
    std::vector<std::uint64_t> counts;  // brute force, including extra held-out ones
    int fitted = 0;                     // counts inside the Pade window
    bool integral = false;
    std::optional<RationalFunction> rational;
    std::string error;
};

const std::vector<CorpusZeta>& corpus_zetas(const SuiteConfig& c) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<CorpusZeta>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(c.budget);
    if (it != cache.end()) return it->second;
    CountOptions opts;
    opts.budget = c.budget;
    opts.workers = c.workers;
    std::vector<CorpusZeta> out;
    for (const auto& e : corpus()) {
        CorpusZeta z;
        z.name = e.name;
        z.fitted = 2 * kDegree;
        try {
            const ZetaResult zr = compute_zeta(e.variety, kCounts, opts);
            z.counts = zr.counts;
            z.integral = zr.integral;
            z.rational = zeta_rational(zr, kDegree, kDegree);
            for (int k = kCounts + 1; k <= kCounts + kExtraHoldout; ++k) {
                if (count_cost(e.variety, k) > c.budget) break;
                z.counts.push_back(count_points(e.variety, k, opts));
            }
        } catch (const Error& err) {
            z.error = err.what();
        }
        out.push_back(std::move(z));
    }
    return cache.emplace(c.budget, std::move(out)).first->second;
}

}  // namespace

SuiteResult suite_zeta(const SuiteConfig& c) {
    SuiteResult r{"zeta", "rational Z(t) from brute-force counts predicts every held-out count", {}};
    for (const auto& z : corpus_zetas(c)) {
        Row row;
        row.label = z.name;
        if (!z.rational) {
            row.label += ": " + z.error;
            row.passed = false;
            row.residual = 1;
            r.rows.push_back(row);
            continue;
        }
        row.label += ": " + exact::to_string(*z.rational);
        const auto pred = predict_counts(*z.rational, static_cast<int>(z.counts.size()));
        int mismatches = 0;
        for (std::size_t k = 0; k < z.counts.size(); ++k)
            if (pred.counts[k] != exact::Rational(exact::Integer(static_cast<unsigned long>(z.counts[k])))) ++mismatches;
        const int held_out = static_cast<int>(z.counts.size()) - z.fitted;
        row.cases = static_cast<int>(z.counts.size());
        row.residual = mismatches;
        row.passed = mismatches == 0 && held_out >= 2 && z.integral && pred.plausible;
        row.label += " (" + std::to_string(held_out) + " held out)";
        r.rows.push_back(row);
    }
    return r;
}

SuiteResult suite_bridge(const SuiteConfig& c) {
    SuiteResult r{"bridge", "char_function_exact(realize(R)) = R for zetas and random R(0) = 1", {}};
    ExactTally corpus_rt{"corpus zetas"};
    for (const auto& z : corpus_zetas(c)) {
        if (!z.rational) {
            corpus_rt.add(false);
            continue;
        }
        try {
            const auto m = zeta_realize(*z.rational);
            corpus_rt.add(m.dim() == superalg::SuperDim{z.rational->num_degree(), z.rational->den_degree()});
        } catch (const Error&) {
            corpus_rt.add(false);
        }
    }
    Rng rng = suite_rng(c, r.name);
    ExactTally random_rt{"random reduced R, R(0) = 1"};
    for (int trial = 0; trial < 100; ++trial) {
        auto random_poly = [&] {
            std::vector<Rational> co{q(1)};
            const auto deg = rng.uniform_int(0, 3);
            for (long i = 0; i < deg; ++i) co.push_back(q(rng.uniform_int(-5, 5), rng.uniform_int(1, 3)));
            if (deg > 0 && sgn(co.back()) == 0) co.back() = q(1);
            return UniPoly(co);
        };
        const RationalFunction f{random_poly(), random_poly()};
        const auto m = superalg::realize_operator(f);
        random_rt.add(superalg::char_function_exact(m).value == f &&
                      m.dim() == superalg::SuperDim{f.num_degree(), f.den_degree()});
    }
    r.rows = {corpus_rt.row(), random_rt.row()};
    return r;
}

SuiteResult suite_determinism(const SuiteConfig& c) {
    SuiteResult r{"determinism", "results do not depend on worker count", {}};
    ExactTally counts{"count_points, workers 1 vs 4"};
    for (const auto& e : corpus()) {
        for (int k = 1; k <= 3; ++k) {
            CountOptions one;
            CountOptions four;
            four.workers = 4;
            counts.add(count_points(e.variety, k, one) == count_points(e.variety, k, four));
        }
    }
    ExactTally mc{"Monte Carlo, workers 1 vs 4"};
    const auto sphere = tubegeom::ParametricSurface::sphere(1.0, 2);
    tubegeom::MonteCarloOptions one, four;
    one.chunks = four.chunks = c.mc_chunks;
    four.workers = 4;
    const auto a = tubegeom::monte_carlo_tube_volume(sphere, 0.3, 100000, c.seed, one);
    const auto b = tubegeom::monte_carlo_tube_volume(sphere, 0.3, 100000, c.seed, four);
    mc.add(a.hits == b.hits && a.estimate == b.estimate && a.stderr_ == b.stderr_);
    r.rows = {counts.row(), mc.row()};
    return r;
}

}  // namespace supertube::verify::detail
