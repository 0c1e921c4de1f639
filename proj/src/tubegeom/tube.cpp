#include "supertube/tubegeom/tube.hpp"

#include "supertube/error.hpp"
#include "supertube/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace supertube::tubegeom {

double TubePolynomial::evaluate(double h) const { return evaluate_poly(c, h); }

double TubePolynomial::integral(double h) const {
    double sum = 0.0;
    double power = h;
    for (std::size_t k = 0; k < c.size(); ++k) {
        sum += c[k] * power / static_cast<double>(k + 1);
        power *= h;
    }
    return sum;
}

double unit_sphere_volume(int n) {
    const double m = n + 1;
    return 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
}

double TubePolynomial::gauss_map_degree() const {
    return c.back() / unit_sphere_volume(static_cast<int>(c.size()) - 1);
}

double TubePolynomial::euler_estimate() const {
    if (c.size() != 3) throw DomainError("Euler estimate is defined for surfaces in E^3");
    return c[2] / (2.0 * std::numbers::pi);
}

TubePolynomial weyl_coefficients(const ParametricSurface& ps, const QuadratureOptions& options) {
    const int n = ps.dim();
    const QuadratureResult q = integrate(
        ps.domains(), n + 1,
        [&ps](const Eigen::VectorXd& u, std::vector<double>& out) {
            const ShapeData d = weingarten_parametric(ps, u);
            const double area = std::sqrt((d.tangent_basis.transpose() * d.tangent_basis).determinant());
            const std::vector<double> e = det_one_plus_t(d.S);
            for (std::size_t k = 0; k < e.size(); ++k) out[k] = e[k] * area;
        },
        options);
    return TubePolynomial{q.values, q.errors, q.nodes, q.converged};
}

HalfTube half_tube_volume(const ParametricSurface& ps, double h, const QuadratureOptions& options) {
    const QuadratureResult q = integrate(
        ps.domains(), 1,
        [&ps, h](const Eigen::VectorXd& u, std::vector<double>& out) { out[0] = tube_jacobian(ps, u, h); },
        options);
    return HalfTube{q.values[0], q.errors[0], q.converged, std::abs(h) >= ps.focal_bound()};
}

std::optional<double> signed_distance(const ParametricSurface& ps, const Eigen::VectorXd& x) {
    if (x.size() != ps.ambient_dim()) throw DomainError("point has the wrong dimension");
    switch (ps.kind()) {
        case SurfaceKind::sphere: {
            const double r = x.norm();
            if (r == 0.0) return std::nullopt;
            return ps.major_radius() - r;
        }
        case SurfaceKind::torus: {
            const double rho = std::hypot(x[0], x[1]);
            if (rho == 0.0) return std::nullopt;
            const double d = std::hypot(rho - ps.major_radius(), x[2]);
            if (d == 0.0) return std::nullopt;
            return ps.minor_radius() - d;
        }
        case SurfaceKind::chart:
            break;
    }
    throw DomainError("signed distance is available for the built-in sphere and torus only");
}

namespace {

struct Box {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
    double volume() const { return (hi - lo).prod(); }
};

// Box containing every point whose signed distance lies in [t_lo, t_hi].
Box bounding_box(const ParametricSurface& ps, double t_lo) {
    const double grow = std::max(0.0, -t_lo);
    const int m = ps.ambient_dim();
    Box b{Eigen::VectorXd(m), Eigen::VectorXd(m)};
    if (ps.kind() == SurfaceKind::sphere) {
        b.hi.setConstant(ps.major_radius() + grow);
    } else if (ps.kind() == SurfaceKind::torus) {
        const double xy = ps.major_radius() + ps.minor_radius() + grow;
        b.hi << xy, xy, ps.minor_radius() + grow;
    } else {
        throw DomainError("Monte Carlo sampling is available for the built-in sphere and torus only");
    }
    b.lo = -b.hi;
    return b;
}

struct ChunkSum {
    double sum = 0.0;
    double sum_sq = 0.0;
    long hits = 0;
    long rejected = 0;
    long samples = 0;
};

// Runs `value(x)` on every sample; chunks use independent counter-based
// streams and are reduced in chunk order.
template <class F>
ChunkSum sample_box(const Box& box, long samples, std::uint64_t seed, const MonteCarloOptions& options, F value) {
    if (samples <= 0) throw DomainError("sample count must be positive");
    if (options.chunks < 1) throw DomainError("chunk count must be positive");
    const int chunks = options.chunks;
    std::vector<ChunkSum> parts(static_cast<std::size_t>(chunks));
    std::atomic<int> next{0};
    auto work = [&]() {
        Eigen::VectorXd x(box.lo.size());
        for (int c = next++; c < chunks; c = next++) {
            const long count = samples / chunks + (c < samples % chunks ? 1 : 0);
            Rng rng(seed, static_cast<std::uint64_t>(c));
            ChunkSum& s = parts[static_cast<std::size_t>(c)];
            s.samples = count;
            for (long i = 0; i < count; ++i) {
                for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = rng.uniform(box.lo[k], box.hi[k]);
                value(x, s);
            }
        }
    };
    const int workers = std::max(1, std::min(options.workers, chunks));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    ChunkSum total;
    for (const auto& s : parts) {
        total.sum += s.sum;
        total.sum_sq += s.sum_sq;
        total.hits += s.hits;
        total.rejected += s.rejected;
        total.samples += s.samples;
    }
    return total;
}

}  // namespace

MonteCarloResult monte_carlo_tube_volume(const ParametricSurface& ps, double h, long samples, std::uint64_t seed,
                                         const MonteCarloOptions& options) {
    const Box box = bounding_box(ps, std::min(h, 0.0));
    const double lo = std::min(0.0, h);
    const double hi = std::max(0.0, h);
    const ChunkSum s = sample_box(box, samples, seed, options, [&](const Eigen::VectorXd& x, ChunkSum& acc) {
        const auto t = signed_distance(ps, x);
        if (!t) {
            ++acc.rejected;
            return;
        }
        if (*t > lo && *t < hi) ++acc.hits;
    });
    MonteCarloResult r;
    r.samples = s.samples;
    r.hits = s.hits;
    r.rejected = s.rejected;
    r.box_volume = box.volume();
    r.seed = seed;
    r.chunks = options.chunks;
    const double p = static_cast<double>(s.hits) / static_cast<double>(s.samples);
    const double sign = h < 0.0 ? -1.0 : 1.0;
    r.estimate = sign * p * r.box_volume;
    r.stderr_ = r.box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(s.samples));
    return r;
}

double WeightProfile::operator()(double s) const {
    if (t.size() != value.size()) throw DomainError("weight profile knots and values differ in length");
    if (t.size() < 2 || s < t.front() || s > t.back()) return 0.0;
    auto it = std::upper_bound(t.begin(), t.end(), s);
    if (it == t.end()) return value.back();
    const std::size_t k = static_cast<std::size_t>(it - t.begin());
    const double w = (s - t[k - 1]) / (t[k] - t[k - 1]);
    return value[k - 1] * (1.0 - w) + value[k] * w;
}

WeightedIntegral weighted_integral(const ParametricSurface& ps, const WeightProfile& rho, long samples,
                                   std::uint64_t seed, const MonteCarloOptions& options,
                                   const QuadratureOptions& quad) {
    if (rho.t.size() != rho.value.size()) throw DomainError("weight profile knots and values differ in length");
    for (std::size_t k = 1; k < rho.t.size(); ++k)
        if (!(rho.t[k] > rho.t[k - 1])) throw DomainError("weight profile knots must increase");
    WeightedIntegral out;
    if (rho.t.size() < 2) return out;

    const Box box = bounding_box(ps, std::min(rho.t.front(), 0.0));
    const ChunkSum s = sample_box(box, samples, seed, options, [&](const Eigen::VectorXd& x, ChunkSum& acc) {
        const auto t = signed_distance(ps, x);
        if (!t) {
            ++acc.rejected;
            return;
        }
        const double v = rho(*t);
        acc.sum += v;
        acc.sum_sq += v * v;
    });
    const double n = static_cast<double>(s.samples);
    const double mean = s.sum / n;
    const double var = std::max(0.0, s.sum_sq / n - mean * mean);
    out.lhs = mean * box.volume();
    out.lhs_stderr = box.volume() * std::sqrt(var / n);
    out.rejected = s.rejected;

    const TubePolynomial poly = weyl_coefficients(ps, quad);
    const GaussRule g = gauss_legendre(8);
    double abs_weight = 0.0;
    for (std::size_t k = 1; k < rho.t.size(); ++k) {
        const double a = rho.t[k - 1];
        const double b = rho.t[k];
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const double t = 0.5 * (a + b) + 0.5 * (b - a) * g.nodes[i];
            const double w = 0.5 * (b - a) * g.weights[i];
            out.rhs += w * rho(t) * poly.evaluate(t);
            abs_weight += w * std::abs(rho(t));
        }
    }
    const double reach = std::max(std::abs(rho.t.front()), std::abs(rho.t.back()));
    double power = 1.0;
    for (double e : poly.errors) {
        out.rhs_error += e * power * abs_weight;
        power *= reach;
    }
    return out;
}

}  // namespace supertube::tubegeom
