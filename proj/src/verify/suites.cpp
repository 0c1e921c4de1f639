#include "supertube/verify/suites.hpp"

#include "common.hpp"
#include "supertube/error.hpp"

#include <algorithm>

namespace supertube::verify {

namespace detail {

GrassmannElement random_homogeneous(Rng& rng, int gens, bool odd, long body_lo, long body_hi) {
    GrassmannElement e(gens);
    if (!odd) e += GrassmannElement::scalar(gens, q(rng.uniform_int(body_lo, body_hi)));
    for (superalg::Mask m = 1; m < (superalg::Mask{1} << gens); ++m) {
        if ((std::popcount(m) % 2 == 1) != odd) continue;
        if (rng.uniform_int(0, 2) != 0) continue;
        e += GrassmannElement::monomial(gens, m, q(rng.uniform_int(-3, 3), rng.uniform_int(1, 2)));
    }
    return e;
}

SuperMatrix random_invertible(Rng& rng, SuperDim dim, int gens) {
    const auto n = static_cast<std::size_t>(dim.total());
    superalg::GMatrix m(n, n, GrassmannElement(gens));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool row_odd = static_cast<int>(i) >= dim.p;
            const bool col_odd = static_cast<int>(j) >= dim.p;
            if (row_odd != col_odd)
                m(i, j) = random_homogeneous(rng, gens, true, 0, 0);
            else if (i == j)
                m(i, j) = random_homogeneous(rng, gens, false, 6, 9) * (rng.coin() ? q(1) : q(-1));
            else
                m(i, j) = random_homogeneous(rng, gens, false, -2, 2);
        }
    return SuperMatrix(dim, std::move(m));
}

SuperMatrix random_supermatrix(Rng& rng, SuperDim dim, int gens) {
    const auto n = static_cast<std::size_t>(dim.total());
    superalg::GMatrix m(n, n, GrassmannElement(gens));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool odd = (static_cast<int>(i) >= dim.p) != (static_cast<int>(j) >= dim.p);
            m(i, j) = random_homogeneous(rng, gens, odd, -3, 3);
        }
    return SuperMatrix(dim, std::move(m));
}

QMatrix random_qmatrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
    QMatrix m = exact::q_zero(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = q(rng.uniform_int(lo, hi));
    return m;
}

QMatrix random_invertible_q(Rng& rng, std::size_t n) {
    while (true) {
        QMatrix m = random_qmatrix(rng, n, n);
        if (sgn(exact::q_determinant(m)) != 0) return m;
    }
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix out = exact::q_zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

}  // namespace detail

double SuiteConfig::tolerance(const std::string& name) const {
    if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
    static const std::map<std::string, double> defaults{
        {"eq12", 1e-8},       {"gauge", 1e-9}, {"quadrature", 1e-8}, {"mc_sigma", 3.0},
        {"weyl", 1e-8},       {"identity", 1e-7}, {"focal", 1e-12},
    };
    if (auto it = defaults.find(name); it != defaults.end()) return it->second;
    throw DomainError("unknown tolerance name \"" + name + "\"");
}

bool SuiteResult::passed() const {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.passed; });
}

double SuiteResult::max_residual() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.residual);
    return m;
}

int SuiteResult::cases() const {
    int n = 0;
    for (const auto& r : rows) n += r.cases;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"eq12",  "gauge", "tube-mc", "weyl",   "ber-mult",   "charfn",
                                                "prop3", "prop4", "zeta",    "bridge", "determinism"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& c) {
    using namespace detail;
    if (name == "eq12") return suite_eq12(c);
    if (name == "gauge") return suite_gauge(c);
    if (name == "tube-mc") return suite_tube_mc(c);
    if (name == "weyl") return suite_weyl(c);
    if (name == "ber-mult") return suite_ber_mult(c);
    if (name == "charfn") return suite_charfn(c);
    if (name == "prop3") return suite_prop3(c);
    if (name == "prop4") return suite_prop4(c);
    if (name == "zeta") return suite_zeta(c);
    if (name == "bridge") return suite_bridge(c);
    if (name == "determinism") return suite_determinism(c);
    throw DomainError("unknown suite \"" + name + "\"");
}

}  // namespace supertube::verify
