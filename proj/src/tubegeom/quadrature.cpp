#include "supertube/tubegeom/quadrature.hpp"

#include "supertube/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace supertube::tubegeom {

GaussRule gauss_legendre(int points) {
    if (points < 1) throw DomainError("Gauss-Legendre needs at least one point");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const int n = points;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

namespace {

struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

AxisRule axis_rule(const ParamDomain& d, int points) {
    AxisRule r;
    const double len = d.hi - d.lo;
    if (d.periodic) {
        for (int i = 0; i < points; ++i) {
            r.nodes.push_back(d.lo + len * i / points);
            r.weights.push_back(len / points);
        }
    } else {
        const GaussRule g = gauss_legendre(points);
        for (int i = 0; i < points; ++i) {
            r.nodes.push_back(d.lo + 0.5 * len * (g.nodes[static_cast<std::size_t>(i)] + 1.0));
            r.weights.push_back(0.5 * len * g.weights[static_cast<std::size_t>(i)]);
        }
    }
    return r;
}

std::vector<double> tensor_sum(const std::vector<ParamDomain>& domains, int components, const Integrand& f,
                               int points) {
    const std::size_t dims = domains.size();
    std::vector<AxisRule> rules;
    for (const auto& d : domains) rules.push_back(axis_rule(d, points));
    std::vector<double> total(static_cast<std::size_t>(components), 0.0);
    std::vector<double> value(static_cast<std::size_t>(components), 0.0);
    std::vector<int> idx(dims, 0);
    Eigen::VectorXd u(static_cast<Eigen::Index>(dims));
    while (true) {
        double w = 1.0;
        for (std::size_t k = 0; k < dims; ++k) {
            u[static_cast<Eigen::Index>(k)] = rules[k].nodes[static_cast<std::size_t>(idx[k])];
            w *= rules[k].weights[static_cast<std::size_t>(idx[k])];
        }
        f(u, value);
        for (std::size_t c = 0; c < total.size(); ++c) total[c] += w * value[c];
        std::size_t k = dims;
        while (k > 0) {
            --k;
            if (++idx[k] < points) break;
            idx[k] = 0;
            if (k == 0) return total;
        }
        if (dims == 0) return total;
    }
}

long node_count(std::size_t dims, int points) {
    long n = 1;
    for (std::size_t k = 0; k < dims; ++k) n *= points;
    return n;
}

}  // namespace

QuadratureResult integrate(const std::vector<ParamDomain>& domains, int components, const Integrand& f,
                           const QuadratureOptions& options) {
    if (domains.empty()) throw DomainError("integration needs at least one parameter");
    QuadratureResult r;
    int points = options.start_points;
    std::vector<double> previous = tensor_sum(domains, components, f, points);
    r.nodes = node_count(domains.size(), points);
    while (true) {
        const int next_points = points * 2;
        const long next_nodes = node_count(domains.size(), next_points);
        if (r.nodes + next_nodes > options.max_nodes) break;
        std::vector<double> current = tensor_sum(domains, components, f, next_points);
        r.nodes += next_nodes;
        points = next_points;
        bool done = true;
        r.errors.assign(current.size(), 0.0);
        for (std::size_t c = 0; c < current.size(); ++c) {
            r.errors[c] = std::abs(current[c] - previous[c]);
            if (r.errors[c] > options.rel_tol * std::max(1.0, std::abs(current[c]))) done = false;
        }
        previous = std::move(current);
        if (done) {
            r.converged = true;
            break;
        }
    }
    if (r.errors.empty()) r.errors.assign(previous.size(), std::numeric_limits<double>::infinity());
    r.values = std::move(previous);
    return r;
}

}  // namespace supertube::tubegeom
