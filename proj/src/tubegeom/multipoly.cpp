#include "supertube/tubegeom/multipoly.hpp"

#include "supertube/error.hpp"

#include <algorithm>

namespace supertube::tubegeom {

using exact::Rational;

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw DomainError("variable count must be nonnegative");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent vector has the wrong length");
    for (int k : e)
        if (k < 0) throw DomainError("negative exponent");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, Rational(0));
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

MultiPoly MultiPoly::derivative(int index) const {
    if (index < 0 || index >= nvars_) throw DomainError("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(index)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(index)] = k - 1;
        out.add_term(d, c * k);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DomainError("point has the wrong dimension");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= exact::pow(x[i], e[i]);
        sum += term;
    }
    return sum;
}

double MultiPoly::evaluate(const Eigen::VectorXd& x) const {
    if (x.size() != nvars_) throw DomainError("point has the wrong dimension");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[static_cast<Eigen::Index>(i)];
        sum += term;
    }
    return sum;
}

void MultiPoly::check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const Rational mag = abs(c);
        std::string coeff = exact::to_string(mag);
        if (!mono.empty() && mag == 1) coeff.clear();
        if (!mono.empty() && !coeff.empty()) coeff = (mag.get_den() == 1 ? coeff : "(" + coeff + ")") + "*";
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + coeff + mono;
        else
            out += (sgn(c) < 0 ? "-" : "+") + coeff + mono;
    }
    return out;
}

}  // namespace supertube::tubegeom
