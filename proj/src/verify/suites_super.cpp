#include "common.hpp"
#include "supertube/superalg/charfn.hpp"
#include "supertube/superalg/subspace.hpp"

namespace supertube::verify::detail {

using exact::RationalFunction;
using namespace superalg;

namespace {

// Ber through the other Schur complement: det(M00) / det(M11 - M10 M00^{-1} M01).
GrassmannElement ber_other_route(const SuperMatrix& m) {
    const int g = m.generators();
    const GMatrix inv00 = even_inverse(m.m00(), g);
    const GMatrix schur =
        exact::subtract(m.m11(), exact::multiply(exact::multiply(m.m10(), inv00, g_zero(g)), m.m01(), g_zero(g)));
    return even_determinant(m.m00(), g) * grassmann_inverse(even_determinant(schur, g));
}

SuperMatrix random_scalar_bodied(Rng& rng, SuperDim dim) {
    return SuperMatrix::from_rational_blocks(random_qmatrix(rng, static_cast<std::size_t>(dim.p), static_cast<std::size_t>(dim.p)),
                                             random_qmatrix(rng, static_cast<std::size_t>(dim.q), static_cast<std::size_t>(dim.q)));
}

SuperDim random_dim(Rng& rng, int lo, int hi) {
    return {static_cast<int>(rng.uniform_int(lo, hi)), static_cast<int>(rng.uniform_int(lo, hi))};
}

RationalFunction char_of(const QMatrix& even, const QMatrix& odd) {
    return char_function_exact(SuperMatrix::from_rational_blocks(even, odd)).value;
}

QMatrix upper_block(Rng& rng, std::size_t n, std::size_t k) {
    QMatrix m = random_qmatrix(rng, n, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = 0;
    return m;
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

SuiteResult suite_ber_mult(const SuiteConfig& c) {
    SuiteResult r{"ber-mult", "Ber(MN) = Ber(M) Ber(N) exactly; Ber agrees with the other Schur route", {}};
    Rng rng = suite_rng(c, r.name);
    for (SuperDim dim : {SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{2, 2}}) {
        const std::string tag = "(" + std::to_string(dim.p) + "|" + std::to_string(dim.q) + ")";
        ExactTally mult{"multiplicative " + tag}, route{"two Schur routes " + tag};
        for (int trial = 0; trial < 50; ++trial) {
            const SuperMatrix a = random_invertible(rng, dim, 4);
            const SuperMatrix b = random_invertible(rng, dim, 4);
            mult.add(berezinian(a * b) == berezinian(a) * berezinian(b));
            route.add(berezinian(a) == ber_other_route(a));
        }
        r.rows.push_back(mult.row());
        r.rows.push_back(route.row());
    }
    return r;
}

SuiteResult suite_charfn(const SuiteConfig& c) {
    SuiteResult r{"charfn", "Ber(1 + tA): series, recurrences, dual series, raw degrees, Ber+/Ber-", {}};
    Rng rng = suite_rng(c, r.name);
    constexpr int kCases = 100;
    ExactTally series{"(a) fraction series = exp-supertrace series to p+q+4"};
    ExactTally recur{"(b) c_k recurrence past deg num"};
    for (int trial = 0; trial < kCases; ++trial) {
        const SuperMatrix a = random_scalar_bodied(rng, random_dim(rng, 0, 3));
        const CharFunction f = char_function_exact(a);
        const int order = a.dim().p + a.dim().q + 4;
        series.add(f.series.order() >= order &&
                   f.series.truncated(order) == char_series(a, order).to_scalar());
        recur.add(exact::linear_recurrence_check(f.series.coeffs(), f.value.den(), f.value.num_degree() + 1));
    }
    ExactTally gamma{"(c) gamma_k = c_k - c*_k recurrence on k in [-8, 8]"};
    while (gamma.cases < kCases) {
        const SuperMatrix a = random_scalar_bodied(rng, random_dim(rng, 1, 3));
        const QMatrix body = a.to_rational();
        const auto p = static_cast<std::size_t>(a.dim().p), qd = static_cast<std::size_t>(a.dim().q);
        if (sgn(exact::q_determinant(body.block(0, 0, p, p))) == 0 ||
            sgn(exact::q_determinant(body.block(p, p, qd, qd))) == 0)
            continue;
        const CharFunction f = char_function_exact(a);
        constexpr int window = 8;
        const auto dual = char_dual_series(a, 2 * window + a.dim().p + 2);
        const exact::PowerSeries taylor = f.value.expand(window);
        std::vector<Rational> g;
        for (int k = -window; k <= window; ++k) {
            Rational ck = k >= 0 ? taylor[k] : Rational(0);
            Rational dk = 0;
            for (const auto& t : dual)
                if (t.exponent == k) dk = t.coeff.body();
            g.push_back(ck - dk);
        }
        gamma.add(exact::linear_recurrence_check(g, f.value.den(), f.value.den_degree()));
    }
    ExactTally degrees{"(d) raw degrees <= p+pq, q+pq; raw series = exp-supertrace series"};
    for (int trial = 0; trial < kCases; ++trial) {
        const SuperDim dims[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        const SuperDim dim = dims[trial % 4];
        const SuperMatrix a = random_supermatrix(rng, dim, 3);
        const RawCharFraction raw = char_function_raw(a);
        const int order = dim.p + dim.q + dim.p * dim.q;
        degrees.add(raw.num.degree() <= dim.p + dim.p * dim.q && raw.den.degree() <= dim.q + dim.p * dim.q &&
                    expand(raw, order) == char_series(a, order));
    }
    ExactTally bpm{"(e) Ber+/Ber- = Ber"};
    while (bpm.cases < kCases) {
        const SuperDim dim = random_dim(rng, 1, 3);
        QMatrix a00 = random_qmatrix(rng, static_cast<std::size_t>(dim.p), static_cast<std::size_t>(dim.p), -4, 4);
        QMatrix a11 = random_qmatrix(rng, static_cast<std::size_t>(dim.q), static_cast<std::size_t>(dim.q), -4, 4);
        if (sgn(exact::q_determinant(a00)) == 0 || sgn(exact::q_determinant(a11)) == 0) continue;
        const SuperMatrix a = SuperMatrix::from_rational_blocks(a00, a11);
        const BerPlusMinus b = ber_plus_minus(char_function_exact(a));
        if (sgn(b.res) == 0 || sgn(b.ber_minus) == 0) continue;
        bpm.add(b.ber_plus / b.ber_minus == berezinian(a).body());
    }
    r.rows = {series.row(), recur.row(), gamma.row(), degrees.row(), bpm.row()};
    return r;
}

SuiteResult suite_prop3(const SuiteConfig& c) {
    SuiteResult r{"prop3", "R_{A|V/M} = R_{A on V + Pi M} for invariant subspaces M", {}};
    Rng rng = suite_rng(c, r.name);
    ExactTally equal{"quotient = extended"}, oracle{"quotient = block-triangular oracle"};
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = static_cast<std::size_t>(rng.uniform_int(0, 3));
        const auto qd = static_cast<std::size_t>(rng.uniform_int(0, 3));
        const auto rr = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(p)));
        const auto s = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(qd)));
        const QMatrix t0 = upper_block(rng, p, rr);
        const QMatrix t1 = upper_block(rng, qd, s);
        const QMatrix pc = block_diag(random_invertible_q(rng, p), random_invertible_q(rng, qd));
        const QMatrix a = exact::q_multiply(exact::q_multiply(pc, block_diag(t0, t1)), exact::q_inverse(pc));
        const SuperMatrix op = SuperMatrix::from_rational_blocks(a.block(0, 0, p, p), a.block(p, p, qd, qd));
        std::vector<Vector> basis = columns_of(pc, 0, rr);
        const auto odd = columns_of(pc, p, s);
        basis.insert(basis.end(), odd.begin(), odd.end());
        const QuotientCheck chk = quotient_char_check(op, basis);
        equal.add(chk.equal && chk.lhs.value == chk.rhs.value);
        oracle.add(chk.lhs.value == char_of(t0.block(rr, rr, p - rr, p - rr), t1.block(s, s, qd - s, qd - s)));
    }
    r.rows = {equal.row(), oracle.row()};
    return r;
}

SuiteResult suite_prop4(const SuiteConfig& c) {
    SuiteResult r{"prop4", "R_{A|H} = R_A for a complex (E, d) with Ad = dA", {}};
    Rng rng = suite_rng(c, r.name);
    ExactTally equal{"cohomology = complex"}, oracle{"cohomology = construction oracle"};
    for (int trial = 0; trial < 50; ++trial) {
        // E = H + B + C with d: C -> B an odd isomorphism
        const auto h0 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto h1 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto c0 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const auto c1 = static_cast<std::size_t>(rng.uniform_int(0, 2));
        const std::size_t b0 = c1, b1 = c0;
        const std::size_t p = h0 + b0 + c0, qd = h1 + b1 + c1, n = p + qd;
        const std::size_t oh0 = 0, ob0 = h0, oc0 = h0 + b0, oh1 = p, ob1 = p + h1, oc1 = p + h1 + b1;

        const QMatrix d_c0 = random_invertible_q(rng, c0);
        const QMatrix d_c1 = random_invertible_q(rng, c1);
        QMatrix d = exact::q_zero(n, n);
        d.set_block(ob1, oc0, d_c0);
        d.set_block(ob0, oc1, d_c1);

        const QMatrix ah0 = random_qmatrix(rng, h0, h0);
        const QMatrix ah1 = random_qmatrix(rng, h1, h1);
        const QMatrix ac0 = random_qmatrix(rng, c0, c0);
        const QMatrix ac1 = random_qmatrix(rng, c1, c1);
        QMatrix a = exact::q_zero(n, n);
        a.set_block(oh0, oh0, ah0);
        a.set_block(oh1, oh1, ah1);
        a.set_block(oc0, oc0, ac0);
        a.set_block(oc1, oc1, ac1);
        a.set_block(ob1, ob1, exact::q_multiply(exact::q_multiply(d_c0, ac0), exact::q_inverse(d_c0)));
        a.set_block(ob0, ob0, exact::q_multiply(exact::q_multiply(d_c1, ac1), exact::q_inverse(d_c1)));
        a.set_block(ob0, oh0, random_qmatrix(rng, b0, h0));
        a.set_block(ob1, oh1, random_qmatrix(rng, b1, h1));
        a.set_block(oh0, oc0, random_qmatrix(rng, h0, c0));
        a.set_block(oh1, oc1, random_qmatrix(rng, h1, c1));
        a.set_block(ob0, oc0, random_qmatrix(rng, b0, c0));
        a.set_block(ob1, oc1, random_qmatrix(rng, b1, c1));

        const QMatrix pc = block_diag(random_invertible_q(rng, p), random_invertible_q(rng, qd));
        const QMatrix pinv = exact::q_inverse(pc);
        const QMatrix a2 = exact::q_multiply(exact::q_multiply(pc, a), pinv);
        const QMatrix d2 = exact::q_multiply(exact::q_multiply(pc, d), pinv);
        const SuperMatrix op = SuperMatrix::from_rational_blocks(a2.block(0, 0, p, p), a2.block(p, p, qd, qd));
        const CohomologyCheck chk =
            complex_cohomology_char(OddOperator({static_cast<int>(p), static_cast<int>(qd)}, d2), op);
        equal.add(chk.equal && chk.on_h.value == chk.on_e.value);
        oracle.add(chk.on_h.value == char_of(ah0, ah1) &&
                   chk.cohomology_dim == SuperDim{static_cast<int>(h0), static_cast<int>(h1)});
    }
    r.rows = {equal.row(), oracle.row()};
    return r;
}

}  // namespace supertube::verify::detail
