#include "doctest.h"

#include "supertube/error.hpp"
#include "supertube/exact/matrix.hpp"
#include "supertube/exact/rational_function.hpp"
#include "supertube/random.hpp"

#include <vector>

using namespace supertube;
using namespace supertube::exact;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Schoolbook long division of num by den (den(0) != 0), used as an oracle
// independent of PowerSeries::inverse.
std::vector<Rational> long_division(std::vector<Rational> num, const std::vector<Rational>& den, int order) {
    num.resize(static_cast<std::size_t>(order) + 1 + den.size(), Rational(0));
    std::vector<Rational> out;
    for (int k = 0; k <= order; ++k) {
        Rational c = num[static_cast<std::size_t>(k)] / den[0];
        out.push_back(c);
        for (std::size_t j = 0; j < den.size(); ++j) num[static_cast<std::size_t>(k) + j] -= c * den[j];
    }
    return out;
}

UniPoly random_poly(Rng& rng, int degree, bool unit_constant) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(q(rng.uniform_int(-4, 4)));
    if (unit_constant) c[0] = 1;
    if (degree > 0 && sgn(c.back()) == 0) c.back() = 1;
    return UniPoly(c);
}

}  // namespace

TEST_CASE("rationals serialize canonically") {
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(to_string(q(5)) == "5");
}

TEST_CASE("rational parse rejects junk") {
    CHECK(parse_rational("-6/8") == q(-3, 4));
    CHECK(parse_rational("7") == q(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("exact square roots") {
    Rational r;
    CHECK(exact_sqrt(q(9, 4), r));
    CHECK(r == q(3, 2));
    CHECK_FALSE(exact_sqrt(q(2), r));
    CHECK_FALSE(exact_sqrt(q(-4), r));
}

TEST_CASE("polynomial arithmetic and gcd") {
    UniPoly a{q(-1), q(0), q(1)};  // t^2 - 1
    UniPoly b{q(1), q(1)};         // 1 + t
    auto [quot, rem] = divmod(a, b);
    CHECK(quot == UniPoly{q(-1), q(1)});
    CHECK(rem.is_zero());
    CHECK(gcd(a, UniPoly{q(-1), q(1)}) == UniPoly{q(-1), q(1)});
    CHECK(to_string(UniPoly{q(1), q(2), q(-3, 2)}) == "1+2t-(3/2)t^2");
    CHECK(UniPoly{q(1), q(2)}.reversed(1) == UniPoly{q(2), q(1)});
}

TEST_CASE("series_exp") {
    SUBCASE("zero series") {
        PowerSeries e = series_exp(PowerSeries(5));
        CHECK(e[0] == 1);
        for (int k = 1; k <= 5; ++k) CHECK(e[k] == 0);
    }
    SUBCASE("exp(t) has factorial coefficients") {
        PowerSeries t(4);
        t[1] = 1;
        PowerSeries e = series_exp(t);
        CHECK(e == PowerSeries({q(1), q(1), q(1, 2), q(1, 6), q(1, 24)}));
    }
    SUBCASE("exp of the geometric log is 1/(1-2t)") {
        PowerSeries s(6);
        for (int k = 1; k <= 6; ++k) s[k] = q(1L << k, k);
        PowerSeries e = series_exp(s);
        // oracle: (1 - 2t) * e = 1 + O(t^7)
        PowerSeries prod = e * PowerSeries::from_poly(UniPoly{q(1), q(-2)}, 6);
        CHECK(prod == PowerSeries::from_poly(UniPoly::constant(1), 6));
        for (int k = 0; k <= 6; ++k) CHECK(e[k] == q(1L << k));
    }
    SUBCASE("nonzero constant term is rejected") {
        PowerSeries s(3);
        s[0] = 1;
        CHECK_THROWS_AS(series_exp(s), DomainError);
    }
}

TEST_CASE("series_log") {
    CHECK(series_log(PowerSeries::from_poly(UniPoly::constant(1), 4)) == PowerSeries(4));

    // log 1/(1-pt) = sum p^k t^k / k
    const long p = 5;
    PowerSeries geom(6);
    for (int k = 0; k <= 6; ++k) geom[k] = pow(q(p), static_cast<unsigned>(k));
    PowerSeries l = series_log(geom);
    for (int k = 1; k <= 6; ++k) CHECK(l[k] == pow(q(p), static_cast<unsigned>(k)) / k);

    PowerSeries s(7);
    s[1] = 1;
    s[2] = 3;
    CHECK(series_log(series_exp(s)) == s);

    PowerSeries bad(3);
    bad[0] = 2;
    CHECK_THROWS_AS(series_log(bad), DomainError);
}

TEST_CASE("series arithmetic truncates to the smaller order") {
    PowerSeries a = PowerSeries::from_poly(UniPoly{q(1), q(1)}, 5);
    PowerSeries b = PowerSeries::from_poly(UniPoly{q(1), q(1)}, 2);
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
}

TEST_CASE("pade_reconstruct") {
    SUBCASE("geometric series") {
        PowerSeries s(3);
        for (int k = 0; k <= 3; ++k) s[k] = q(1L << k);
        RationalFunction r = pade_reconstruct(s, 0, 1);
        CHECK(r == RationalFunction(UniPoly::constant(1), UniPoly{q(1), q(-2)}));
    }
    SUBCASE("(1+t)/(1-3t) from a long-division series") {
        auto c = long_division({q(1), q(1)}, {q(1), q(-3)}, 4);
        RationalFunction r = pade_reconstruct(PowerSeries(c), 1, 1);
        CHECK(r.num() == UniPoly{q(1), q(1)});
        CHECK(r.den() == UniPoly{q(1), q(-3)});
    }
    SUBCASE("(1,1) approximant of truncated exp") {
        // Hand solution of the 2x2 system: b1 = -s2/s1 = -1/2, a1 = s1 + b1 = 1/2.
        PowerSeries s({q(1), q(1), q(1, 2), q(1, 6)});
        RationalFunction r = pade_reconstruct(s, 1, 1);
        CHECK(r.num() == UniPoly{q(1), q(1, 2)});
        CHECK(r.den() == UniPoly{q(1), q(-1, 2)});
        CHECK(r.expand(2) == s.truncated(2));
    }
    SUBCASE("degenerate table picks the minimal denominator") {
        PowerSeries s = PowerSeries::from_poly(UniPoly{q(1), q(2)}, 6);
        RationalFunction r = pade_reconstruct(s, 2, 3);
        CHECK(r.den_degree() == 0);
        CHECK(r.num() == UniPoly{q(1), q(2)});
    }
    SUBCASE("failure is a distinct error") {
        // exp is not rational of degree (1,1) through order 4.
        PowerSeries e({q(1), q(1), q(1, 2), q(1, 6), q(1, 24)});
        PowerSeries f({q(1), q(0), q(1), q(0), q(5)});
        CHECK_THROWS_AS(pade_reconstruct(f, 1, 1), NotRationalError);
        CHECK_THROWS_AS(pade_reconstruct(f, 3, 3), DomainError);
    }
}

TEST_CASE("linear_recurrence_check") {
    SUBCASE("geometric") {
        std::vector<Rational> seq;
        for (int k = 0; k < 8; ++k) seq.push_back(pow(q(-3), static_cast<unsigned>(k)));
        CHECK(linear_recurrence_check(seq, UniPoly{q(1), q(3)}, 1));
    }
    SUBCASE("(1+2t)/(1+3t) from deg num + 1") {
        auto c = long_division({q(1), q(2)}, {q(1), q(3)}, 8);
        CHECK(linear_recurrence_check(c, UniPoly{q(1), q(3)}, 2));
        CHECK_FALSE(linear_recurrence_check(c, UniPoly{q(1), q(3)}, 1));
    }
    SUBCASE("Fibonacci is not geometric") {
        std::vector<Rational> fib{q(1), q(1), q(2), q(3), q(5)};
        for (long b = -6; b <= 6; ++b)
            if (b != 0) CHECK_FALSE(linear_recurrence_check(fib, UniPoly{q(1), q(b)}, 1));
        CHECK(linear_recurrence_check(fib, UniPoly{q(1), q(-1), q(-1)}, 2));
    }
    SUBCASE("preconditions") {
        std::vector<Rational> seq{q(1)};
        CHECK_THROWS_AS(linear_recurrence_check(seq, UniPoly(), 0), DomainError);
        // a constant denominator asks for the sequence to vanish
        CHECK_FALSE(linear_recurrence_check(seq, UniPoly::constant(1), 0));
        CHECK(linear_recurrence_check(seq, UniPoly::constant(1), 1));
        CHECK_THROWS_AS(linear_recurrence_check(seq, UniPoly{q(2), q(1)}, 0), DomainError);
    }
}

TEST_CASE("resultant") {
    const Rational a = q(7, 3);
    const Rational b = q(-2);
    CHECK(resultant(UniPoly{-a, q(1)}, UniPoly{-b, q(1)}) == a - b);
    // g(t) = t - 2, f evaluated at the root of g: f(2) = 3
    CHECK(resultant(UniPoly{q(-1), q(0), q(1)}, UniPoly{q(-2), q(1)}) == 3);
    UniPoly f{q(3), q(-1), q(2), q(1)};
    CHECK(resultant(f, f) == 0);
    CHECK(resultant(UniPoly::constant(5), UniPoly{q(1), q(1), q(1)}) == 25);
    CHECK(resultant(UniPoly::constant(5), UniPoly::constant(3)) == 1);
    CHECK_THROWS_AS(resultant(UniPoly(), f), DomainError);
}

TEST_CASE("resultant matches the root product formula") {
    // f = (t-1)(t-2), g = (t-3)(t+1): prod (a_i - b_j) = (1-3)(1+1)(2-3)(2+1) = 12
    UniPoly f = UniPoly{q(-1), q(1)} * UniPoly{q(-2), q(1)};
    UniPoly g = UniPoly{q(-3), q(1)} * UniPoly{q(1), q(1)};
    CHECK(resultant(f, g) == 12);
    CHECK(resultant(f * q(2), g) == 48);  // lc(f)^deg g
}

TEST_CASE("rational functions are reduced and normalized") {
    RationalFunction r(UniPoly{q(2), q(2)} * UniPoly{q(1), q(5)}, UniPoly{q(2), q(2)} * UniPoly{q(3), q(1)});
    CHECK(r.num() == UniPoly{q(1, 3), q(5, 3)});
    CHECK(r.den() == UniPoly{q(1), q(1, 3)});
    CHECK_THROWS_AS(RationalFunction(UniPoly::constant(1), UniPoly{q(0), q(1)}), DomainError);
    CHECK(to_string(RationalFunction(UniPoly{q(1), q(2)}, UniPoly{q(1), q(3)})) == "(1+2t)/(1+3t)");
}

TEST_CASE("expansion at infinity") {
    // (1+2t)/(1+3t) at infinity: (2 + s)/(3 + s) = 2/3 + s/9 - ...
    auto terms = expand_at_infinity(RationalFunction(UniPoly{q(1), q(2)}, UniPoly{q(1), q(3)}), 3);
    CHECK(terms[0].exponent == 0);
    CHECK(terms[0].coeff == q(2, 3));
    CHECK(terms[1].exponent == -1);
    CHECK(terms[1].coeff == q(1, 9));
}

TEST_CASE("property: exp and log are inverse") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = static_cast<int>(rng.uniform_int(0, 12));
        PowerSeries s(order);
        s[0] = 1;
        for (int k = 1; k <= order; ++k) s[k] = q(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
        CHECK(series_exp(series_log(s)) == s);
    }
}

TEST_CASE("property: pade recovers random reduced fractions") {
    Rng rng(12);
    int done = 0;
    while (done < 100) {
        UniPoly num = random_poly(rng, static_cast<int>(rng.uniform_int(0, 3)), true);
        UniPoly den = random_poly(rng, static_cast<int>(rng.uniform_int(0, 3)), true);
        if (gcd(num, den).degree() > 0) continue;
        RationalFunction r(num, den);
        const int p = r.num_degree();
        const int qd = r.den_degree();
        CHECK(r.den().coeff(0) == 1);
        CHECK(gcd(r.num(), r.den()).degree() == 0);
        CHECK(pade_reconstruct(r.expand(p + qd), p, qd) == r);
        if (qd >= 1) {
            auto c = r.expand(p + qd + 10).coeffs();
            CHECK(linear_recurrence_check(c, r.den(), p + 1));
        }
        ++done;
    }
}

TEST_CASE("rational linear algebra") {
    QMatrix m = q_zero(3, 3);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 2; m(1, 1) = 4;
    m(2, 2) = 3;
    CHECK(q_rank(m) == 2);
    CHECK(q_determinant(m) == 0);
    QMatrix ns = q_nullspace(m);
    CHECK(ns.cols() == 1);
    CHECK(q_is_zero(q_multiply(m, ns)));
    CHECK_THROWS_AS(q_inverse(m), SingularError);
    m(1, 1) = 5;
    QMatrix inv = q_inverse(m);
    CHECK(q_multiply(m, inv) == q_identity(3));
    CHECK(determinant(m, Rational(0), Rational(1)) == q_determinant(m));
}
