#pragma once

#include "supertube/error.hpp"
#include "supertube/exact/rational.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace supertube::superalg {

inline constexpr int kMaxGenerators = 16;

// A monomial xi_{i1} xi_{i2} ... with i1 < i2 < ..., as a bitmask (bit i-1
// stands for xi_i).
using Mask = std::uint32_t;

// True when putting the ordered monomial a in front of the ordered monomial b
// (disjoint) and sorting the result takes an odd number of transpositions.
inline bool merge_sign_negative(Mask a, Mask b) {
    int swaps = 0;
    for (Mask rest = b; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps & 1) != 0;
}

namespace detail {

inline bool coeff_is_zero(const exact::Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(double c) { return c == 0.0; }

inline exact::Rational coeff_sqrt(const exact::Rational& c) {
    exact::Rational root;
    if (sgn(c) <= 0) throw SingularError("square root: body is not positive");
    if (!exact::exact_sqrt(c, root)) throw SingularError("square root: non-square body " + exact::to_string(c));
    return root;
}
inline double coeff_sqrt(double c) {
    if (!(c > 0.0)) throw SingularError("square root: body is not positive");
    return std::sqrt(c);
}

inline std::string coeff_string(const exact::Rational& c) { return exact::to_string(c); }
inline std::string coeff_string(double c) { return std::to_string(c); }

}  // namespace detail

// Element of the Grassmann algebra over coefficient field C on n generators
// xi_1..xi_n with xi_i xi_j = -xi_j xi_i. Terms with zero coefficient are
// never stored.
template <class C>
class BasicGrassmann {
public:
    BasicGrassmann() = default;
    explicit BasicGrassmann(int generators) : n_(generators) {
        if (n_ < 0 || n_ > kMaxGenerators) throw DomainError("generator count must lie in 0..16");
    }

    static BasicGrassmann scalar(int generators, const C& c) { return monomial(generators, 0, c); }
    static BasicGrassmann generator(int generators, int index) {
        if (index < 1 || index > generators) throw DomainError("generator index out of range");
        return monomial(generators, Mask{1} << (index - 1), C(1));
    }
    static BasicGrassmann monomial(int generators, Mask mask, const C& c) {
        BasicGrassmann g(generators);
        if (mask >> generators) throw DomainError("monomial uses a generator beyond the generator count");
        if (!detail::coeff_is_zero(c)) g.terms_.emplace(mask, c);
        return g;
    }

    int generators() const { return n_; }
    const std::map<Mask, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C body() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? C(0) : it->second;
    }
    C coeff(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    // The zero element counts as both even and odd.
    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 != 0) return false;
        return true;
    }
    bool is_odd() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 == 0) return false;
        return true;
    }

    BasicGrassmann nilpotent_part() const {
        BasicGrassmann out = *this;
        out.terms_.erase(0);
        return out;
    }

    BasicGrassmann& operator+=(const BasicGrassmann& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, c, false);
        return *this;
    }
    BasicGrassmann& operator-=(const BasicGrassmann& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, c, true);
        return *this;
    }
    BasicGrassmann& operator*=(const C& s) {
        if (detail::coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    BasicGrassmann& operator*=(const BasicGrassmann& o) { return *this = *this * o; }

    friend BasicGrassmann operator+(BasicGrassmann a, const BasicGrassmann& b) { return a += b; }
    friend BasicGrassmann operator-(BasicGrassmann a, const BasicGrassmann& b) { return a -= b; }
    friend BasicGrassmann operator*(BasicGrassmann a, const C& s) { return a *= s; }
    friend BasicGrassmann operator*(const C& s, BasicGrassmann a) { return a *= s; }
    BasicGrassmann operator-() const {
        BasicGrassmann out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend BasicGrassmann operator*(const BasicGrassmann& a, const BasicGrassmann& b) {
        a.check(b);
        BasicGrassmann out(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;
                C prod = ca * cb;
                out.accumulate(ma | mb, prod, merge_sign_negative(ma, mb));
            }
        }
        return out;
    }

    friend bool operator==(const BasicGrassmann& a, const BasicGrassmann& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicGrassmann& a, const BasicGrassmann& b) { return !(a == b); }

private:
    void check(const BasicGrassmann& o) const {
        if (o.n_ != n_)
            throw DomainError("Grassmann generator-count mismatch (" + std::to_string(n_) + " vs " +
                              std::to_string(o.n_) + ")");
    }
    void accumulate(Mask m, const C& c, bool negate) {
        auto [it, inserted] = terms_.try_emplace(m, C(0));
        if (negate)
            it->second -= c;
        else
            it->second += c;
        if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }

    int n_ = 0;
    std::map<Mask, C> terms_;
};

using GrassmannElement = BasicGrassmann<exact::Rational>;
// Same algebra with double coefficients, used where square roots of
// irrational bodies are needed.
using GrassmannFloat = BasicGrassmann<double>;

GrassmannFloat to_float(const GrassmannElement& g);

// max |coefficient difference|
double distance(const GrassmannFloat& a, const GrassmannFloat& b);

// b^{-1} sum_k (-n/b)^k for a = b + n, n nilpotent; throws SingularError when
// the body b is zero.
template <class C>
BasicGrassmann<C> grassmann_inverse(const BasicGrassmann<C>& a) {
    const C b = a.body();
    if (detail::coeff_is_zero(b)) throw SingularError("not invertible: zero body");
    const C inv_b = C(1) / b;
    const BasicGrassmann<C> x = a.nilpotent_part() * (-inv_b);
    BasicGrassmann<C> sum = BasicGrassmann<C>::scalar(a.generators(), C(1));
    BasicGrassmann<C> power = sum;
    for (int k = 1; k <= a.generators(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * inv_b;
}

// Principal square root sqrt(b) * sum_k binom(1/2, k) (n/b)^k. In the exact
// instantiation the body must be the square of a rational.
template <class C>
BasicGrassmann<C> grassmann_sqrt(const BasicGrassmann<C>& a) {
    const C b = a.body();
    const C root = detail::coeff_sqrt(b);
    const BasicGrassmann<C> x = a.nilpotent_part() * (C(1) / b);
    BasicGrassmann<C> sum = BasicGrassmann<C>::scalar(a.generators(), C(1));
    BasicGrassmann<C> power = sum;
    C binom(1);  // binom(1/2, k)
    for (int k = 1; k <= a.generators(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        binom = binom * (C(1) / C(2) - C(k - 1)) / C(k);
        sum += power * binom;
    }
    return sum * root;
}

// Berezin integral over the generators in `vars` (1-based indices). Each
// monomial containing all of them is rewritten as rest * (vars in ascending
// order) and mapped to rest, so that the integral of xi_1...xi_q over all q
// generators is 1; monomials missing any of them integrate to zero.
template <class C>
BasicGrassmann<C> berezin_integral(const BasicGrassmann<C>& f, const std::vector<int>& vars) {
    Mask v = 0;
    for (int i : vars) {
        if (i < 1 || i > f.generators()) throw DomainError("berezin_integral: generator index out of range");
        v |= Mask{1} << (i - 1);
    }
    BasicGrassmann<C> out(f.generators());
    for (const auto& [m, c] : f.terms()) {
        if ((m & v) != v) continue;
        const Mask rest = m & ~v;
        C coeff = c;
        if (merge_sign_negative(rest, v)) coeff = -coeff;
        out += BasicGrassmann<C>::monomial(f.generators(), rest, coeff);
    }
    return out;
}

template <class C>
std::string to_string(const BasicGrassmann<C>& g) {
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : g.terms()) {
        if (!out.empty()) out += " + ";
        out += detail::coeff_string(c);
        for (Mask rest = m; rest != 0; rest &= rest - 1) out += "*xi" + std::to_string(std::countr_zero(rest) + 1);
    }
    return out;
}

}  // namespace supertube::superalg
