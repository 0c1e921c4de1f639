#include "doctest.h"

#include "supertube/error.hpp"
#include "supertube/random.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/zeta/zeta.hpp"

#include <cstdint>

using namespace supertube;
using namespace supertube::zeta;
using exact::Rational;
using exact::RationalFunction;
using exact::UniPoly;

namespace {

Rational q(long n, long d = 1) { return exact::make_rational(n, d); }
UniPoly poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(q(x));
    return UniPoly(v);
}

// ---- independent F_p polynomial oracle (signed coefficients, naive) ----
using Coeffs = std::vector<long long>;

Coeffs trim(Coeffs a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long inverse(long long a, long long p) {
    for (long long x = 1; x < p; ++x)
        if (mod(a * x, p) == 1) return x;
    return 0;
}

// remainder of a by b over F_p
Coeffs remainder(Coeffs a, const Coeffs& b, long long p) {
    a = trim(a);
    const long long inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
        const long long f = mod(a.back() * inv, p);
        const std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = mod(a[s + i] - f * b[i], p);
        a = trim(a);
    }
    return a;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
    return trim(out);
}

// all monic polynomials of degree d, enumerated by counting
std::vector<Coeffs> monics(long long p, int d) {
    std::vector<Coeffs> out;
    Coeffs c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    while (true) {
        out.push_back(c);
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(d) && ++c[i] == p) c[i++] = 0;
        if (i == static_cast<std::size_t>(d)) break;
    }
    return out;
}

bool irreducible_by_factor_search(const Coeffs& f, long long p) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d)
        for (const auto& g : monics(p, d))
            if (remainder(f, g, p).empty()) return false;
    return true;
}

// number of distinct roots of f in F_{p^k}: deg gcd(f, x^{p^k} - x)
int tower_root_count(const Coeffs& f, long long p, int k) {
    Coeffs frob = remainder({0, 1}, f, p);
    for (int i = 0; i < k; ++i) {
        Coeffs result{1}, base = frob;
        for (long long e = p; e > 0; e >>= 1) {
            if (e & 1) result = remainder(multiply(result, base, p), f, p);
            base = remainder(multiply(base, base, p), f, p);
        }
        frob = result;
    }
    Coeffs a = f, b = frob;
    if (b.size() < 2) b.resize(2, 0);
    b[1] = mod(b[1] - 1, p);
    b = trim(b);
    while (!b.empty()) {
        Coeffs r = remainder(a, b, p);
        a = b;
        b = r;
    }
    return static_cast<int>(a.size()) - 1;
}

FpPoly to_fp(const Coeffs& c) { return FpPoly(c.begin(), c.end()); }

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

PrimePolyVariety univariate(std::uint32_t p, const Coeffs& c) {
    std::map<std::vector<int>, long long> t;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) t[{static_cast<int>(i)}] = c[i];
    return PrimePolyVariety(p, 1, t);
}

PrimePolyVariety conic() { return PrimePolyVariety(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}); }

// y^2 = x^3 + x + 1 over F_5
PrimePolyVariety cubic() {
    return PrimePolyVariety(5, 2, {{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, -1}, {{0, 0}, -1}});
}

RationalFunction rf(const UniPoly& n, const UniPoly& d) { return RationalFunction{n, d}; }

}  // namespace

TEST_CASE("irreducible moduli") {
    CHECK(find_irreducible(2, 1) == FpPoly{0, 1});
    CHECK(find_irreducible(2, 2) == FpPoly{1, 1, 1});
    CHECK(find_irreducible(3, 2) == FpPoly{1, 0, 1});
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int k = 1; k <= (p <= 3 ? 6 : 3); ++k) {
            const FpPoly f = find_irreducible(p, k);
            CHECK(irreducible_by_factor_search(Coeffs(f.begin(), f.end()), p));
            // every candidate before it in the ordering is reducible
            for (const auto& g : monics(p, k)) {
                if (to_fp(g) == f) break;
                CHECK_FALSE(irreducible_by_factor_search(g, p));
            }
            // agreement of the two irreducibility tests on all candidates
            for (const auto& g : monics(p, k)) CHECK(is_irreducible(to_fp(g), p) == irreducible_by_factor_search(g, p));
        }
    }
    CHECK_THROWS_AS(find_irreducible(4, 2), DomainError);
    CHECK_THROWS_AS(ExtField(3, 2, FpPoly{2, 0, 1}), DomainError);  // x^2 + 2 = (x+1)(x+2)
}

TEST_CASE("extension field arithmetic") {
    Rng rng(51);
    for (auto [p, k] : {std::pair{2u, 4}, {3u, 3}, {5u, 2}, {2u, 17}, {3u, 11}, {7u, 1}}) {
        const ExtField f(p, k);
        CHECK(f.has_zech() == (f.size() <= 65536));
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(f.size()) - 1));
            const auto b = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(f.size()) - 1));
            const auto c = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(f.size()) - 1));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.pow(a, f.size() - 1) == 1);
            CHECK(f.pow(a, f.size()) == a);
            // table route against digit route
            const auto da = f.digits(a), db = f.digits(b);
            std::vector<std::uint32_t> out(static_cast<std::size_t>(k));
            std::vector<std::uint64_t> scratch(2 * static_cast<std::size_t>(k));
            f.mul_digits(da.data(), db.data(), out.data(), scratch.data());
            CHECK(f.code(out) == f.mul(a, b));
        }
    }
}

TEST_CASE("point counts") {
    for (int k = 1; k <= 6; ++k) CHECK(count_points(univariate(2, {0, 1}), k) == 1);
    const PrimePolyVariety line(3, 1, {});
    for (int k = 1; k <= 5; ++k) CHECK(count_points(line, k) == static_cast<std::uint64_t>(ipow(3, k)));
    const PrimePolyVariety plane(2, 2, {});
    CHECK(count_points(plane, 3) == 64);
    CHECK(count_points(conic(), 1) == 4);
    CHECK(count_points(conic(), 2) == 8);
    for (int k = 1; k <= 6; ++k)
        CHECK(count_points(conic(), k) == static_cast<std::uint64_t>(ipow(3, k) - ipow(-1, k)));
    // nonzero constant: empty
    CHECK(count_points(PrimePolyVariety(5, 2, {{{0, 0}, 3}}), 2) == 0);
    // coefficients reduce mod p: 3x over F_3 is zero
    CHECK(count_points(PrimePolyVariety(3, 1, {{{1}, 3}}), 2) == 9);
    CHECK_THROWS_AS(PrimePolyVariety(9, 1, {}), DomainError);
}

TEST_CASE("univariate counts match the tower root-count oracle") {
    Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = static_cast<std::uint32_t>(std::vector<int>{2, 3, 5, 7}[static_cast<std::size_t>(trial % 4)]);
        const int deg = static_cast<int>(rng.uniform_int(1, 6));
        Coeffs c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = rng.uniform_int(0, p - 1);
        c.back() = rng.uniform_int(1, p - 1);
        for (int k = 1; k <= 4; ++k) {
            if (ipow(p, k) > 3000) break;
            CHECK(count_points(univariate(p, c), k) == static_cast<std::uint64_t>(tower_root_count(c, p, k)));
        }
    }
}

TEST_CASE("counts do not depend on modulus, route, workers or chunking") {
    Rng rng(53);
    int cases = 0;
    while (cases < 10) {
        const auto p = static_cast<std::uint32_t>(std::vector<int>{2, 3, 5}[static_cast<std::size_t>(rng.uniform_int(0, 2))]);
        const int k = static_cast<int>(rng.uniform_int(2, 4));
        const int n = static_cast<int>(rng.uniform_int(1, 2));
        if (ipow(p, k * n) > 400000) continue;
        std::map<std::vector<int>, long long> terms;
        for (int t = 0; t < 4; ++t) {
            std::vector<int> e(static_cast<std::size_t>(n));
            for (auto& x : e) x = static_cast<int>(rng.uniform_int(0, 3));
            terms[e] = rng.uniform_int(1, p - 1);
        }
        const PrimePolyVariety v(p, n, terms);
        // another irreducible: the last one in the ordering
        const auto all = monics(p, k);
        FpPoly other;
        for (auto it = all.rbegin(); it != all.rend(); ++it)
            if (irreducible_by_factor_search(*it, p)) {
                other = to_fp(*it);
                break;
            }
        REQUIRE(other != find_irreducible(p, k));
        const std::uint64_t base = count_points(v, k);
        CountOptions alt;
        alt.modulus = other;
        CHECK(count_points(v, k, alt) == base);
        CountOptions digits;
        digits.allow_zech = false;
        CHECK(count_points(v, k, digits) == base);
        CountOptions parallel;
        parallel.workers = 4;
        parallel.chunks = 7;
        CHECK(count_points(v, k, parallel) == base);
        ++cases;
    }
}

TEST_CASE("budget refusal") {
    CountOptions small;
    small.budget = 1000;
    try {
        count_points(conic(), 4, small);
        FAIL("expected refusal");
    } catch (const BudgetError& e) {
        CHECK(e.required() == 6561);
        CHECK(std::string(e.what()).find("6561") != std::string::npos);
    }
    CHECK(count_cost(conic(), 40) == UINT64_MAX);
}

TEST_CASE("zeta series") {
    // nu_k = p^k: 1/(1 - pt); oracle: series_log of the geometric series
    std::vector<std::uint64_t> geo;
    for (int k = 1; k <= 8; ++k) geo.push_back(static_cast<std::uint64_t>(ipow(3, k)));
    const auto s = zeta_series(geo);
    CHECK(s == rf(poly({1}), poly({1, -3})).expand(8));
    CHECK(exact::series_log(rf(poly({1}), poly({1, -3})).expand(8))[5] == q(243, 5));
    CHECK(zeta_series(std::vector<std::uint64_t>(6, 1)) == rf(poly({1}), poly({1, -1})).expand(6));
    const auto conic_series = zeta_series({4, 8, 28, 80, 244, 728});
    CHECK(conic_series == rf(poly({1, 1}), poly({1, -3})).expand(6));
    CHECK(has_integral_coefficients(conic_series));
    CHECK_FALSE(has_integral_coefficients(zeta_series({1, 2})));  // exp(t + t^2) = 1 + t + 3t^2/2 + ...
    CHECK_THROWS_AS(zeta_series({}), DomainError);
}

TEST_CASE("rational reconstruction and predicted counts") {
    ZetaResult point = compute_zeta(univariate(3, {-1, 1}), 6);
    CHECK(zeta_rational(point, 2, 2) == rf(poly({1}), poly({1, -1})));
    for (std::uint32_t p : {2u, 3u})
        for (int n : {1, 2}) {
            const ZetaResult z = compute_zeta(PrimePolyVariety(p, n, {}), 6);
            CHECK(zeta_rational(z, 2, 2) == rf(poly({1}), poly({1, -ipow(p, n)})));
        }
    ZetaResult c = compute_zeta(conic(), 5);
    const RationalFunction r = zeta_rational(c, 1, 1);
    CHECK(r == rf(poly({1, 1}), poly({1, -3})));
    CHECK(c.integral);
    const PredictedCounts pred = predict_counts(r, 7);
    CHECK(pred.plausible);
    for (int k = 1; k <= 7; ++k) CHECK(pred.counts[static_cast<std::size_t>(k - 1)] == q(ipow(3, k) - ipow(-1, k)));
    CHECK(pred.counts[4] == q(static_cast<long>(count_points(conic(), 5))));

    const auto pp = predict_counts(rf(poly({1}), poly({1, -5})), 4);
    CHECK(pp.counts == std::vector<Rational>{q(5), q(25), q(125), q(625)});
    const auto two = predict_counts(rf(poly({1}), poly({1, -1}) * poly({1, -2})), 5);
    for (int k = 1; k <= 5; ++k) CHECK(two.counts[static_cast<std::size_t>(k - 1)] == q(1 + ipow(2, k)));
    CHECK_FALSE(predict_counts(rf(poly({1, 1}), poly({1, -1, 1})), 4).plausible);  // nu_2 < 0
    CHECK_THROWS_AS(predict_counts(rf(poly({1}), poly({2, -1})), 3), DomainError);  // R(0) = 1/2
}

TEST_CASE("reconstruction reports insufficient data") {
    ZetaResult c = compute_zeta(conic(), 3);
    CHECK_THROWS_AS(zeta_rational(c, 1, 1), DomainError);  // needs 4 coefficients
    ZetaResult many = compute_zeta(conic(), 4);
    // (0, 1) window fits 1 + 4t, guard coefficients then disagree
    CHECK_THROWS_WITH_AS(zeta_rational(many, 0, 1), doctest::Contains("not yet rational"), NotRationalError);
}

TEST_CASE("affine elliptic curve over F_5") {
    // oracle: brute-force affine count over F_5 gives the trace a = 5 - nu_1
    // (one point at infinity); affine zeta is (1 - a t + 5 t^2)/(1 - 5t)
    long nu1 = 0;
    for (long x = 0; x < 5; ++x)
        for (long y = 0; y < 5; ++y)
            if (mod(y * y - x * x * x - x - 1, 5) == 0) ++nu1;
    const long a = 5 - nu1;
    ZetaResult z = compute_zeta(cubic(), 6);
    CHECK(z.counts[0] == static_cast<std::uint64_t>(nu1));
    const RationalFunction r = zeta_rational(z, 2, 2);
    CHECK(r == rf(poly({1, -a, 5}), poly({1, -5})));
    const auto pred = predict_counts(r, 6);
    for (int k = 1; k <= 6; ++k) CHECK(pred.counts[static_cast<std::size_t>(k - 1)] == q(static_cast<long>(z.counts[static_cast<std::size_t>(k - 1)])));
}

TEST_CASE("realization as a superspace operator") {
    const auto point = zeta_realize(rf(poly({1}), poly({1, -1})));
    CHECK(point.dim().p == 0);
    CHECK(point.dim().q == 1);
    CHECK(point.to_rational() == exact::QMatrix(1, 1, q(-1)));
    const auto line = zeta_realize(rf(poly({1}), poly({1, -2})));
    CHECK(line.to_rational() == exact::QMatrix(1, 1, q(-2)));
    const auto c = zeta_realize(rf(poly({1, 1}), poly({1, -3})));
    CHECK(c.dim().p == 1);
    CHECK(c.dim().q == 1);
    exact::QMatrix expected = exact::q_zero(2, 2);
    expected(0, 0) = 1;
    expected(1, 1) = -3;
    CHECK(c.to_rational() == expected);
    const RationalFunction ell = rf(poly({1, 1, 5}), poly({1, -5}));
    CHECK(superalg::char_function_exact(zeta_realize(ell)).value == ell);
    CHECK_THROWS_AS(zeta_realize(rf(poly({2}), poly({1, -1}))), DomainError);
}
