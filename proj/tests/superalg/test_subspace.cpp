#include "doctest.h"

#include "support.hpp"
#include "supertube/error.hpp"
#include "supertube/superalg/geometry.hpp"
#include "supertube/superalg/subspace.hpp"

using namespace supertube;
using namespace supertube::superalg;
using exact::QMatrix;
using exact::RationalFunction;
using exact::UniPoly;
using testsupport::q;

namespace {

GrassmannElement xi(int gens, int i) { return GrassmannElement::generator(gens, i); }
GrassmannElement sc(int gens, const exact::Rational& c) { return GrassmannElement::scalar(gens, c); }

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix out = exact::q_zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

QMatrix random_invertible_q(Rng& rng, std::size_t n) {
    while (true) {
        QMatrix m = testsupport::random_qmatrix(rng, n, n);
        if (sgn(exact::q_determinant(m)) != 0) return m;
    }
}

// [[x, y], [0, z]] with x of size k.
QMatrix upper_block(Rng& rng, std::size_t n, std::size_t k) {
    QMatrix m = testsupport::random_qmatrix(rng, n, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = 0;
    return m;
}

RationalFunction char_of(const QMatrix& even, const QMatrix& odd) {
    return char_function_exact(SuperMatrix::from_rational_blocks(even, odd)).value;
}

std::vector<Vector> columns_of(const QMatrix& m, std::size_t from, std::size_t count) {
    std::vector<Vector> out;
    for (std::size_t j = from; j < from + count; ++j) {
        Vector v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("quotient by an invariant subspace") {
    QMatrix a = exact::q_zero(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 1) = 2;
    const SuperMatrix op = SuperMatrix::from_rational_blocks(a, exact::q_zero(0, 0));
    const QuotientCheck c = quotient_char_check(op, {{q(1), q(0)}});
    CHECK(c.equal);
    CHECK(c.lhs.value == RationalFunction(UniPoly{1, 2}));
    CHECK(c.rhs.value == RationalFunction(UniPoly{1, 2}));
    CHECK(c.extended_dim == SuperDim{2, 1});
    CHECK(c.quotient_dim == SuperDim{1, 0});

    const SuperMatrix diag = SuperMatrix::diagonal({q(2), q(3)}, {q(5)});
    const QuotientCheck none = quotient_char_check(diag, {});
    CHECK(none.equal);
    CHECK(none.lhs.value == char_function_exact(diag).value);
    const QuotientCheck all = quotient_char_check(diag, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
    CHECK(all.equal);
    CHECK(all.lhs.value == RationalFunction());

    CHECK_THROWS_AS(quotient_char_check(op, {{q(0), q(1)}}), DomainError);  // not invariant
    CHECK_THROWS_AS(quotient_char_check(diag, {{q(1), q(0), q(1)}}), DomainError);  // not homogeneous
    CHECK_THROWS_AS(quotient_char_check(diag, {{q(1), q(0), q(0)}, {q(2), q(0), q(0)}}), DomainError);
}

TEST_CASE("quotient characteristic function equals the extended one on random pairs") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = static_cast<std::size_t>(rng.uniform_int(0, 3));
        const auto qd = static_cast<std::size_t>(rng.uniform_int(0, 3));
        const auto r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p)));
        const auto s = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(qd)));
        const QMatrix t0 = upper_block(rng, p, r);
        const QMatrix t1 = upper_block(rng, qd, s);
        const QMatrix pc = block_diag(random_invertible_q(rng, p), random_invertible_q(rng, qd));
        const QMatrix a = exact::q_multiply(exact::q_multiply(pc, block_diag(t0, t1)), exact::q_inverse(pc));
        const SuperMatrix op =
            SuperMatrix::from_rational_blocks(a.block(0, 0, p, p), a.block(p, p, qd, qd));
        std::vector<Vector> basis = columns_of(pc, 0, r);
        const auto odd = columns_of(pc, p, s);
        basis.insert(basis.end(), odd.begin(), odd.end());
        const QuotientCheck c = quotient_char_check(op, basis);
        CHECK(c.equal);
        CHECK(c.lhs.value == char_of(t0.block(r, r, p - r, p - r), t1.block(s, s, qd - s, qd - s)));
    }
}

TEST_CASE("cohomology of a complex") {
    const SuperMatrix a = SuperMatrix::diagonal({q(2), q(3)}, {q(5)});
    const OddOperator zero_d({2, 1}, exact::q_zero(3, 3));
    const CohomologyCheck trivial = complex_cohomology_char(zero_d, a);
    CHECK(trivial.equal);
    CHECK(trivial.cohomology_dim == SuperDim{2, 1});

    // exact 1|1 complex, A = 2
    QMatrix d11 = exact::q_zero(2, 2);
    d11(1, 0) = 1;
    const CohomologyCheck exact_complex =
        complex_cohomology_char(OddOperator({1, 1}, d11), SuperMatrix::diagonal({q(2)}, {q(2)}));
    CHECK(exact_complex.equal);
    CHECK(exact_complex.on_h.value == RationalFunction());
    CHECK(exact_complex.cohomology_dim == SuperDim{0, 0});

    // 2|2 with d(e2) = f1: H spanned by e1 and f2
    QMatrix d22 = exact::q_zero(4, 4);
    d22(2, 1) = 1;
    const SuperMatrix a22 = SuperMatrix::diagonal({q(3), q(7)}, {q(7), q(-4)});
    const CohomologyCheck c22 = complex_cohomology_char(OddOperator({2, 2}, d22), a22);
    CHECK(c22.equal);
    CHECK(c22.cohomology_dim == SuperDim{1, 1});
    CHECK(c22.on_h.value == RationalFunction(UniPoly{1, 3}, UniPoly{1, -4}));

    QMatrix bad = exact::q_zero(2, 2);
    bad(1, 0) = 1;
    bad(0, 1) = 1;
    CHECK_THROWS_WITH_AS(complex_cohomology_char(OddOperator({1, 1}, bad), SuperMatrix::identity({1, 1})),
                         doctest::Contains("d^2 = 0"), IdentityViolation);
    CHECK_THROWS_WITH_AS(complex_cohomology_char(OddOperator({1, 1}, d11), SuperMatrix::diagonal({q(2)}, {q(3)})),
                         doctest::Contains("Ad = dA"), IdentityViolation);
    CHECK_THROWS_AS(OddOperator({1, 1}, exact::q_identity(2)), EvennessError);
}

TEST_CASE("cohomology characteristic function equals the complex one on random complexes") {
    Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        // E = H + B + C with d: C -> B an odd isomorphism.
        const auto h0 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto h1 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto c0 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto c1 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const std::size_t b0 = c1, b1 = c0;
        const std::size_t p = h0 + b0 + c0, qd = h1 + b1 + c1, n = p + qd;
        // coordinate offsets: even H, B, C then odd H, B, C
        const std::size_t oh0 = 0, ob0 = h0, oc0 = h0 + b0, oh1 = p, ob1 = p + h1, oc1 = p + h1 + b1;

        const QMatrix d_c0 = random_invertible_q(rng, c0);  // C0 -> B1
        const QMatrix d_c1 = random_invertible_q(rng, c1);  // C1 -> B0
        QMatrix d = exact::q_zero(n, n);
        d.set_block(ob1, oc0, d_c0);
        d.set_block(ob0, oc1, d_c1);

        const QMatrix ah0 = testsupport::random_qmatrix(rng, h0, h0);
        const QMatrix ah1 = testsupport::random_qmatrix(rng, h1, h1);
        const QMatrix ac0 = testsupport::random_qmatrix(rng, c0, c0);
        const QMatrix ac1 = testsupport::random_qmatrix(rng, c1, c1);
        QMatrix a = exact::q_zero(n, n);
        a.set_block(oh0, oh0, ah0);
        a.set_block(oh1, oh1, ah1);
        a.set_block(oc0, oc0, ac0);
        a.set_block(oc1, oc1, ac1);
        // A on B is forced by Ad = dA
        a.set_block(ob1, ob1, exact::q_multiply(exact::q_multiply(d_c0, ac0), exact::q_inverse(d_c0)));
        a.set_block(ob0, ob0, exact::q_multiply(exact::q_multiply(d_c1, ac1), exact::q_inverse(d_c1)));
        // extra parity-preserving components H -> B, C -> H, C -> B
        a.set_block(ob0, oh0, testsupport::random_qmatrix(rng, b0, h0));
        a.set_block(ob1, oh1, testsupport::random_qmatrix(rng, b1, h1));
        a.set_block(oh0, oc0, testsupport::random_qmatrix(rng, h0, c0));
        a.set_block(oh1, oc1, testsupport::random_qmatrix(rng, h1, c1));
        a.set_block(ob0, oc0, testsupport::random_qmatrix(rng, b0, c0));
        a.set_block(ob1, oc1, testsupport::random_qmatrix(rng, b1, c1));

        const QMatrix pc = block_diag(random_invertible_q(rng, p), random_invertible_q(rng, qd));
        const QMatrix pinv = exact::q_inverse(pc);
        const QMatrix a2 = exact::q_multiply(exact::q_multiply(pc, a), pinv);
        const QMatrix d2 = exact::q_multiply(exact::q_multiply(pc, d), pinv);
        const SuperMatrix op = SuperMatrix::from_rational_blocks(a2.block(0, 0, p, p), a2.block(p, p, qd, qd));
        const CohomologyCheck c = complex_cohomology_char(OddOperator({static_cast<int>(p), static_cast<int>(qd)}, d2), op);
        CHECK(c.equal);
        CHECK(c.cohomology_dim == SuperDim{static_cast<int>(h0), static_cast<int>(h1)});
        CHECK(c.on_h.value == char_of(ah0, ah1));
    }
}

TEST_CASE("super metric and first fundamental form") {
    const SuperMatrix g = super_metric(1, 1);
    CHECK(g.dim() == SuperDim{2, 2});
    CHECK(g(0, 0) == sc(0, 1));
    CHECK(g(1, 1) == sc(0, 1));
    CHECK(g(2, 3) == sc(0, 1));
    CHECK(g(3, 2) == sc(0, -1));
    CHECK(berezinian(g) == sc(0, 1));
    CHECK(berezinian(super_metric(3, 2)) == sc(0, 1));
    CHECK(super_metric(2, 0) == SuperMatrix::identity({3, 0}));

    // z G z with z = (x1, x2; th1, th2) taken as Grassmann values
    const int gens = 4;
    const SuperMatrix g4 = super_metric(1, 1, gens);
    std::vector<GrassmannElement> z{sc(gens, 3), sc(gens, 4), xi(gens, 1), xi(gens, 2)};
    GrassmannElement form(gens);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) form += z[a] * g4(a, b) * z[b];
    CHECK(form == sc(gens, 25) + xi(gens, 1) * xi(gens, 2) * q(2));

    // purely even embedding: u -> (u, u^2) at u = 3
    GMatrix jac(2, 1, g_zero(0));
    jac(0, 0) = sc(0, 1);
    jac(1, 0) = sc(0, 6);
    CHECK(super_first_fundamental_form(jac, {2, 0}, {1, 0}, super_metric(1, 0)) ==
          SuperMatrix::diagonal({q(37)}, {}));

    // identity injection of 1|2 into 1|2
    const SuperMatrix g12 = super_metric(0, 1);
    const GMatrix id = exact::identity(3, g_zero(0), g_one(0));
    CHECK(super_first_fundamental_form(id, {1, 2}, {1, 2}, g12) == g12);

    // odd plane z = (0; eta1, eta2)
    GMatrix odd_plane(3, 2, g_zero(0));
    odd_plane(1, 0) = sc(0, 1);
    odd_plane(2, 1) = sc(0, 1);
    const SuperMatrix gp = super_first_fundamental_form(odd_plane, {1, 2}, {0, 2}, g12);
    CHECK(gp == SuperMatrix(SuperDim{0, 2}, g12.entries().block(1, 1, 2, 2)));
    CHECK(berezinian(gp) == sc(0, 1));

    GMatrix wrong(3, 2, g_zero(1));
    wrong(0, 0) = sc(1, 1);  // even row, odd column must be odd
    CHECK_THROWS_AS(super_first_fundamental_form(wrong, {1, 2}, {0, 2}, super_metric(0, 1, 1)), DomainError);
}

TEST_CASE("super first fundamental form with odd entries") {
    // z(u; eta) = (u, eta1 eta2 ; eta1, eta2): rows x1 x2 th1 th2, columns u eta1 eta2
    const int gens = 2;
    GMatrix jac(4, 3, g_zero(gens));
    jac(0, 0) = g_one(gens);
    jac(1, 1) = xi(gens, 2);   // d(eta1 eta2)/d eta1
    jac(1, 2) = -xi(gens, 1);  // d(eta1 eta2)/d eta2
    jac(2, 1) = g_one(gens);
    jac(3, 2) = g_one(gens);
    const SuperMatrix g = super_first_fundamental_form(jac, {2, 2}, {1, 2}, super_metric(1, 1, gens));
    // Oracle: entrywise sum with the sign (-1)^{p(B)(p(J)+1)} written out.
    const std::vector<int> pa{0, 0, 1, 1};
    const std::vector<int> pi{0, 1, 1};
    const SuperMatrix metric = super_metric(1, 1, gens);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            GrassmannElement acc(gens);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) {
                    GrassmannElement term = jac(a, i) * metric(a, b) * jac(b, j);
                    if ((pa[b] * (pi[j] + 1)) % 2) term = -term;
                    acc += term;
                }
            CHECK(g(i, j) == acc);
        }
    CHECK(g(0, 0) == g_one(gens));
}

TEST_CASE("volume densities") {
    CHECK(super_volume_density(SuperMatrix::identity({2, 2})) == sc(0, 1));
    CHECK(super_volume_density(SuperMatrix::diagonal({q(4)}, {q(1)})) == sc(0, 2));
    GMatrix m(1, 1, sc(2, 1) + xi(2, 1) * xi(2, 2) * q(2));
    const GrassmannElement dens = super_volume_density(SuperMatrix({1, 0}, m));
    CHECK(dens == sc(2, 1) + xi(2, 1) * xi(2, 2));
    CHECK_THROWS_AS(super_volume_density(SuperMatrix::diagonal({q(2)}, {})), SingularError);
    const GrassmannFloat fl = super_volume_density_float(SuperMatrix::diagonal({q(2)}, {}));
    CHECK(distance(fl, GrassmannFloat::scalar(0, std::sqrt(2.0))) < 1e-12);

    // sphere gradient 2x at a unit point, m = 0
    const SuperMatrix ginv = super_metric(1, 0);
    CHECK(dual_super_volume_density({sc(0, 2), sc(0, 0)}, ginv) == sc(0, 2));
    CHECK(dual_super_volume_density({sc(0, q(6, 5)), sc(0, q(8, 5))}, ginv) == sc(0, 2));
    CHECK_THROWS_AS(dual_super_volume_density({sc(0, 0), sc(0, 0)}, ginv), SingularError);

    // Phi = x^2 + 2 th1 th2 at x = 1: grad = (2; 2 th2, -2 th1)
    const int gens = 2;
    const SuperMatrix g = super_metric(0, 1, gens);
    const SuperMatrix g_inverse = inverse(g);
    const std::vector<GrassmannElement> grad{sc(gens, 2), xi(gens, 2) * q(2), xi(gens, 1) * q(-2)};
    const GrassmannElement square = dual_volume_square(grad, g_inverse);
    CHECK(square == sc(gens, 4) + xi(gens, 1) * xi(gens, 2) * q(8));
    const GrassmannElement a_vol = dual_super_volume_density(grad, g_inverse);
    CHECK(a_vol * a_vol == square);
    CHECK(a_vol == sc(gens, 2) + xi(gens, 1) * xi(gens, 2) * q(2));
    CHECK_THROWS_AS(dual_volume_square({sc(gens, 2), sc(gens, 1), xi(gens, 1)}, g_inverse), DomainError);

    // float mode squares back to the exact scalar
    const std::vector<GrassmannElement> grad3{sc(gens, 1), xi(gens, 2) * q(2), xi(gens, 1) * q(-2)};
    const GrassmannFloat f3 = dual_super_volume_density_float(grad3, g_inverse);
    CHECK(distance(f3 * f3, to_float(dual_volume_square(grad3, g_inverse))) < 1e-12);
}
