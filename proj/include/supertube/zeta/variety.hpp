#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace supertube::zeta {

// Affine hypersurface P = 0 in n variables over F_p.
class PrimePolyVariety {
public:
    using Exponents = std::vector<int>;

    // Coefficients are reduced mod p and zero terms dropped. Throws
    // DomainError for composite p, n < 1, or a wrong exponent count.
    PrimePolyVariety(std::uint32_t p, int nvars, const std::map<Exponents, long long>& terms,
                     std::vector<std::string> names = {});

    std::uint32_t p() const { return p_; }
    int nvars() const { return nvars_; }
    const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::uint32_t p_;
    int nvars_;
    std::map<Exponents, std::uint32_t> terms_;
    std::vector<std::string> names_;
};

std::string to_string(const PrimePolyVariety& v);

}  // namespace supertube::zeta
