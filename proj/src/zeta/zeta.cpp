#include "supertube/zeta/zeta.hpp"

#include "supertube/error.hpp"
#include "supertube/superalg/charfn.hpp"

namespace supertube::zeta {

using exact::PowerSeries;
using exact::Rational;
using exact::RationalFunction;

PowerSeries zeta_series(const std::vector<std::uint64_t>& counts) {
    if (counts.empty()) throw DomainError("zeta_series needs at least one count");
    const int order = static_cast<int>(counts.size());
    PowerSeries log_z(order);
    for (int k = 1; k <= order; ++k)
        log_z[k] = exact::make_rational(exact::Integer(static_cast<unsigned long>(counts[static_cast<std::size_t>(k - 1)])),
                                        exact::Integer(k));
    return exact::series_exp(log_z);
}

bool has_integral_coefficients(const PowerSeries& s) {
    for (const auto& c : s.coeffs())
        if (!exact::is_integer(c)) return false;
    return true;
}

ZetaResult compute_zeta(const PrimePolyVariety& v, int K, const CountOptions& options) {
    if (K < 1) throw DomainError("compute_zeta: K must be at least 1");
    ZetaResult zr;
    for (int k = 1; k <= K; ++k) zr.counts.push_back(count_points(v, k, options));
    zr.series = zeta_series(zr.counts);
    zr.integral = has_integral_coefficients(zr.series);
    return zr;
}

RationalFunction zeta_rational(const ZetaResult& zr, int pmax, int qmax) {
    if (zr.series.order() < pmax + qmax + 2)
        throw DomainError("zeta_rational: need " + std::to_string(pmax + qmax + 2) + " coefficients, have " +
                          std::to_string(zr.series.order()));
    RationalFunction r = [&] {
        try {
            return exact::pade_reconstruct(zr.series.truncated(pmax + qmax), pmax, qmax);
        } catch (const NotRationalError&) {
            throw NotRationalError("not yet rational within bounds (" + std::to_string(pmax) + ", " +
                                   std::to_string(qmax) + ")");
        }
    }();
    if (r.expand(zr.series.order()) != zr.series)
        throw NotRationalError("not yet rational within bounds (" + std::to_string(pmax) + ", " +
                               std::to_string(qmax) + "): guard coefficients disagree");
    return r;
}

PredictedCounts predict_counts(const RationalFunction& r, int upto) {
    if (r(Rational(0)) != 1) throw DomainError("predict_counts needs R(0) = 1");
    PredictedCounts out;
    const PowerSeries s = r.expand(upto);
    const PowerSeries log_s = exact::series_log(s);
    for (int k = 1; k <= upto; ++k) {
        Rational nu = log_s[k] * k;
        nu.canonicalize();
        if (!exact::is_integer(nu) || sgn(nu) < 0) out.plausible = false;
        out.counts.push_back(nu);
    }
    return out;
}

superalg::SuperMatrix zeta_realize(const RationalFunction& r) {
    superalg::SuperMatrix a = superalg::realize_operator(r);
    if (superalg::char_function_exact(a).value != r)
        throw IdentityViolation("realization does not reproduce " + exact::to_string(r));
    return a;
}

}  // namespace supertube::zeta
