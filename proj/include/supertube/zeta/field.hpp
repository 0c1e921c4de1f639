#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace supertube::zeta {

// Polynomial over F_p, coefficients low to high, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

FpPoly fp_trim(FpPoly a);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p);
FpPoly fp_rem(const FpPoly& a, const FpPoly& m, std::uint32_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p);  // monic, or empty for gcd(0, 0)
FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint32_t p);

// gcd(x^{p^i} - x, f) = 1 for 0 < i < k and x^{p^k} = x mod f, k = deg f.
bool is_irreducible(const FpPoly& f, std::uint32_t p);

// Smallest monic irreducible of degree k when the lower coefficients are read
// as a base-p number with the constant term as the lowest digit.
FpPoly find_irreducible(std::uint32_t p, int k);

// F_{p^k} = F_p[x]/(modulus). An element is coded as sum c_j p^j over its
// coefficients c_j, so the codes 0..p-1 are the prime subfield.
class ExtField {
public:
    // Uses the lex-smallest modulus unless one is given.
    ExtField(std::uint32_t p, int k, std::optional<FpPoly> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    int k() const { return k_; }
    std::uint64_t size() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }

    // Zech logarithm tables are built when size() <= 65536.
    bool has_zech() const { return !exp_.empty(); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t from_int(long long c) const;  // prime subfield

    std::vector<std::uint32_t> digits(std::uint64_t code) const;
    std::uint64_t code(const std::vector<std::uint32_t>& digits) const;

    // Log-domain view, valid only with Zech tables. Zero is log_zero().
    std::uint32_t log_zero() const { return static_cast<std::uint32_t>(q_ - 1); }
    std::uint32_t log(std::uint64_t code) const { return log_[code]; }
    std::uint64_t exp(std::uint32_t l) const { return l == log_zero() ? 0 : exp_[l]; }
    // log(g^a + g^b) for logs a, b (either may be log_zero()).
    std::uint32_t log_add(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t z = log_zero();
        if (a == z) return b;
        if (b == z) return a;
        std::uint32_t d = b >= a ? b - a : b + z - a;
        const std::uint32_t zech = zech_[d];
        if (zech == z) return z;
        const std::uint32_t s = a + zech;
        return s >= z ? s - z : s;
    }
    std::uint32_t log_mul(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t z = log_zero();
        if (a == z || b == z) return z;
        const std::uint32_t s = a + b;
        return s >= z ? s - z : s;
    }

    // Digit-vector arithmetic used when there are no tables.
    void mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                    std::uint64_t* scratch) const;

private:
    void build_tables();

    std::uint32_t p_;
    int k_;
    std::uint64_t q_;
    FpPoly modulus_;
    std::vector<std::uint32_t> exp_;   // exp_[i] = code of g^i
    std::vector<std::uint32_t> log_;   // log_[code], log_zero() for 0
    std::vector<std::uint32_t> zech_;  // zech_[n] = log(1 + g^n)
};

}  // namespace supertube::zeta
