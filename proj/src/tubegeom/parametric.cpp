#include "supertube/tubegeom/parametric.hpp"

#include "supertube/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace supertube::tubegeom {

ParametricSurface ParametricSurface::sphere(double radius, int n) {
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    if (n < 1) throw DomainError("sphere dimension must be at least 1");
    ParametricSurface s;
    s.kind_ = SurfaceKind::sphere;
    s.n_ = n;
    s.major_ = radius;
    s.closed_ = true;
    for (int i = 0; i + 1 < n; ++i) s.domains_.push_back({0.0, std::numbers::pi, false});
    s.domains_.push_back({0.0, 2.0 * std::numbers::pi, true});
    s.fn_ = [radius, n](const std::vector<Jet>& u) {
        std::vector<Jet> x;
        Jet prefix = Jet::constant(n, radius);
        for (int i = 0; i < n; ++i) {
            x.push_back(prefix * cos(u[static_cast<std::size_t>(i)]));
            prefix = prefix * sin(u[static_cast<std::size_t>(i)]);
        }
        x.push_back(prefix);
        return x;
    };
    return s;
}

ParametricSurface ParametricSurface::torus(double major, double minor) {
    if (!(minor > 0.0) || !(major > minor)) throw DomainError("torus needs R > r > 0");
    ParametricSurface s;
    s.kind_ = SurfaceKind::torus;
    s.n_ = 2;
    s.major_ = major;
    s.minor_ = minor;
    s.closed_ = true;
    s.domains_ = {{0.0, 2.0 * std::numbers::pi, true}, {0.0, 2.0 * std::numbers::pi, true}};
    s.fn_ = [major, minor](const std::vector<Jet>& u) {
        const Jet w = major + minor * cos(u[1]);
        return std::vector<Jet>{w * cos(u[0]), w * sin(u[0]), minor * sin(u[1])};
    };
    return s;
}

ParametricSurface ParametricSurface::chart(int n, ChartFn fn, std::vector<ParamDomain> domains, bool closed) {
    if (n < 1) throw DomainError("chart dimension must be at least 1");
    if (static_cast<int>(domains.size()) != n) throw DomainError("chart needs one parameter domain per dimension");
    ParametricSurface s;
    s.kind_ = SurfaceKind::chart;
    s.n_ = n;
    s.closed_ = closed;
    s.fn_ = std::move(fn);
    s.domains_ = std::move(domains);
    return s;
}

std::string ParametricSurface::kind_name() const {
    switch (kind_) {
        case SurfaceKind::sphere:
            return "sphere";
        case SurfaceKind::torus:
            return "torus";
        case SurfaceKind::chart:
            break;
    }
    return "chart";
}

Embedding ParametricSurface::evaluate(const Eigen::VectorXd& u) const {
    if (u.size() != n_) throw DomainError("parameter point has the wrong dimension");
    std::vector<Jet> vars;
    for (int i = 0; i < n_; ++i) vars.push_back(Jet::variable(n_, i, u[i]));
    const std::vector<Jet> x = fn_(vars);
    if (static_cast<int>(x.size()) != n_ + 1) throw DomainError("chart must return n+1 coordinates");
    Embedding e{Eigen::VectorXd(n_ + 1), Eigen::MatrixXd(n_ + 1, n_), {}};
    for (int a = 0; a <= n_; ++a) {
        e.x[a] = x[static_cast<std::size_t>(a)].v;
        e.jacobian.row(a) = x[static_cast<std::size_t>(a)].g.transpose();
        e.second.push_back(x[static_cast<std::size_t>(a)].h);
    }
    return e;
}

Eigen::VectorXd ParametricSurface::normal(const Embedding& e) const {
    const int m = n_ + 1;
    Eigen::VectorXd nv(m);
    Eigen::MatrixXd frame(m, m);
    frame.rightCols(n_) = e.jacobian;
    for (int a = 0; a < m; ++a) {
        frame.col(0) = Eigen::VectorXd::Unit(m, a);
        nv[a] = frame.determinant();
    }
    const double norm = nv.norm();
    if (!(norm > 0.0)) throw SingularError("degenerate metric: tangent vectors are dependent");
    nv /= norm;
    Eigen::VectorXd outward;
    if (kind_ == SurfaceKind::sphere) {
        outward = e.x;
    } else if (kind_ == SurfaceKind::torus) {
        Eigen::VectorXd core = e.x;
        const double rho = std::hypot(e.x[0], e.x[1]);
        core[0] = e.x[0] * major_ / rho;
        core[1] = e.x[1] * major_ / rho;
        core[2] = 0.0;
        outward = e.x - core;
    }
    if (outward.size() > 0 && nv.dot(outward) < 0.0) nv = -nv;
    return nv;
}

double ParametricSurface::focal_bound() const {
    switch (kind_) {
        case SurfaceKind::sphere:
            return major_;
        case SurfaceKind::torus:
            return std::min(minor_, major_ - minor_);
        case SurfaceKind::chart:
            break;
    }
    return std::numeric_limits<double>::infinity();
}

namespace {

struct Local {
    Embedding e;
    Eigen::VectorXd normal;
    Eigen::MatrixXd metric;
};

Local local_frame(const ParametricSurface& ps, const Eigen::VectorXd& u) {
    Local l{ps.evaluate(u), {}, {}};
    l.metric = l.e.jacobian.transpose() * l.e.jacobian;
    if (!(l.metric.determinant() > 0.0)) throw SingularError("degenerate metric at parameter point");
    l.normal = ps.normal(l.e);
    return l;
}

}  // namespace

ShapeData weingarten_parametric(const ParametricSurface& ps, const Eigen::VectorXd& u) {
    const Local l = local_frame(ps, u);
    const int n = ps.dim();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);  // n . x_ki
    for (int a = 0; a <= n; ++a) b += l.normal[a] * l.e.second[static_cast<std::size_t>(a)];
    ShapeData d;
    d.point = l.e.x;
    d.normal = l.normal;
    d.tangent_basis = l.e.jacobian;
    d.S = l.metric.ldlt().solve(b);
    d.H = d.S.trace();
    // extended J = J S on tangent vectors, extended n = H n
    const Eigen::MatrixXd pinv = l.metric.ldlt().solve(l.e.jacobian.transpose());
    d.extended = l.e.jacobian * d.S * pinv + d.H * l.normal * l.normal.transpose();
    return d;
}

double area_element(const ParametricSurface& ps, const Eigen::VectorXd& u) {
    const Embedding e = ps.evaluate(u);
    const double det = (e.jacobian.transpose() * e.jacobian).determinant();
    return std::sqrt(std::max(det, 0.0));
}

double tube_jacobian(const ParametricSurface& ps, const Eigen::VectorXd& u, double t) {
    const ShapeData d = weingarten_parametric(ps, u);
    const double g = (d.tangent_basis.transpose() * d.tangent_basis).determinant();
    return std::sqrt(g) * evaluate_poly(det_one_plus_t(d.S), t);
}

}  // namespace supertube::tubegeom
