#include "supertube/superalg/geometry.hpp"

namespace supertube::superalg {

using exact::Rational;

SuperMatrix super_metric(int n, int m, int generators) {
    if (n < 0 || m < 0) throw DomainError("super_metric needs n, m >= 0");
    const SuperDim dim{n + 1, 2 * m};
    const auto size = static_cast<std::size_t>(dim.total());
    GMatrix g(size, size, g_zero(generators));
    for (int i = 0; i <= n; ++i) g(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = g_one(generators);
    for (int i = 0; i < m; ++i) {
        const auto a = static_cast<std::size_t>(dim.p + 2 * i);
        g(a, a + 1) = g_one(generators);
        g(a + 1, a) = -g_one(generators);
    }
    return SuperMatrix(dim, std::move(g));
}

SuperMatrix super_first_fundamental_form(const GMatrix& jacobian, SuperDim ambient, SuperDim params,
                                         const SuperMatrix& metric) {
    const auto na = static_cast<std::size_t>(ambient.total());
    const auto np = static_cast<std::size_t>(params.total());
    if (jacobian.rows() != na || jacobian.cols() != np) throw DomainError("Jacobian shape does not match dimensions");
    if (!(metric.dim() == ambient)) throw DomainError("metric dimension does not match the ambient space");
    const int gens = metric.generators();
    auto odd_row = [&](std::size_t a) { return static_cast<int>(a) >= ambient.p; };
    auto odd_col = [&](std::size_t i) { return static_cast<int>(i) >= params.p; };
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t i = 0; i < np; ++i) {
            const auto& e = jacobian(a, i);
            const bool want_odd = odd_row(a) != odd_col(i);
            if (want_odd ? !e.is_odd() : !e.is_even())
                throw DomainError("Jacobian entry (" + std::to_string(a) + "," + std::to_string(i) +
                                  ") has the wrong parity");
        }
    }
    GMatrix g(np, np, g_zero(gens));
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            GrassmannElement acc = g_zero(gens);
            for (std::size_t a = 0; a < na; ++a) {
                if (jacobian(a, i).is_zero()) continue;
                for (std::size_t b = 0; b < na; ++b) {
                    if (metric(a, b).is_zero() || jacobian(b, j).is_zero()) continue;
                    const GrassmannElement term = jacobian(a, i) * metric(a, b) * jacobian(b, j);
                    if (odd_row(b) && !odd_col(j))
                        acc -= term;
                    else
                        acc += term;
                }
            }
            g(i, j) = acc;
        }
    }
    return SuperMatrix(params, std::move(g));
}

GrassmannElement super_volume_density(const SuperMatrix& g) { return grassmann_sqrt(berezinian(g)); }

GrassmannFloat super_volume_density_float(const SuperMatrix& g) { return grassmann_sqrt(to_float(berezinian(g))); }

GrassmannElement dual_volume_square(const std::vector<GrassmannElement>& grad, const SuperMatrix& inverse_metric) {
    const SuperDim dim = inverse_metric.dim();
    const auto n = static_cast<std::size_t>(dim.total());
    if (grad.size() != n) throw DomainError("gradient length does not match the metric");
    const int gens = inverse_metric.generators();
    for (std::size_t a = 0; a < n; ++a) {
        const bool odd = static_cast<int>(a) >= dim.p;
        if (odd ? !grad[a].is_odd() : !grad[a].is_even())
            throw DomainError("gradient component " + std::to_string(a) + " has the wrong parity");
    }
    GrassmannElement acc = g_zero(gens);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (inverse_metric(a, b).is_zero()) continue;
            const GrassmannElement term = grad[a] * inverse_metric(a, b) * grad[b];
            if (static_cast<int>(b) >= dim.p)
                acc -= term;
            else
                acc += term;
        }
    }
    return acc;
}

GrassmannElement dual_super_volume_density(const std::vector<GrassmannElement>& grad,
                                           const SuperMatrix& inverse_metric) {
    return grassmann_sqrt(dual_volume_square(grad, inverse_metric));
}

GrassmannFloat dual_super_volume_density_float(const std::vector<GrassmannElement>& grad,
                                               const SuperMatrix& inverse_metric) {
    return grassmann_sqrt(to_float(dual_volume_square(grad, inverse_metric)));
}

}  // namespace supertube::superalg
