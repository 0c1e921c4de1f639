#include "supertube/zeta/variety.hpp"

#include "supertube/error.hpp"
#include "supertube/zeta/field.hpp"

namespace supertube::zeta {

PrimePolyVariety::PrimePolyVariety(std::uint32_t p, int nvars, const std::map<Exponents, long long>& terms,
                                   std::vector<std::string> names)
    : p_(p), nvars_(nvars), names_(std::move(names)) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (nvars < 1) throw DomainError("a variety needs at least one variable");
    if (names_.empty())
        for (int i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i));
    if (static_cast<int>(names_.size()) != nvars) throw DomainError("variable name count does not match nvars");
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars) throw DomainError("exponent vector has the wrong length");
        for (int x : e)
            if (x < 0) throw DomainError("negative exponent");
        long long r = c % static_cast<long long>(p);
        if (r < 0) r += p;
        if (r == 0) continue;
        auto& slot = terms_[e];
        slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(r)) % p);
        if (slot == 0) terms_.erase(e);
    }
}

std::string to_string(const PrimePolyVariety& v) {
    std::string out;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += "+";
        std::string mono;
        for (int i = 0; i < v.nvars(); ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v.names()[static_cast<std::size_t>(i)];
            if (e[static_cast<std::size_t>(i)] > 1) mono += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
        }
        if (mono.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return (out.empty() ? "0" : out) + " over F_" + std::to_string(v.p());
}

}  // namespace supertube::zeta
