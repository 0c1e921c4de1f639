#include "supertube/zeta/field.hpp"

#include "supertube/error.hpp"

#include <algorithm>
#include <string>

namespace supertube::zeta {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t x = i < a.size() ? a[i] : 0;
        const std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    return fp_trim(std::move(out));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    FpPoly out(acc.begin(), acc.end());
    return fp_trim(std::move(out));
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& m, std::uint32_t p) {
    if (m.empty()) throw DomainError("polynomial division by zero");
    FpPoly r = fp_trim(a);
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (r.size() >= m.size()) {
        const std::uint64_t factor = std::uint64_t{r.back()} * lead_inv % p;
        const std::size_t shift = r.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + p - factor * m[i] % p) % p);
        r = fp_trim(std::move(r));
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
    return a;
}

FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
    FpPoly result = fp_rem(FpPoly{1}, m, p);
    FpPoly b = fp_rem(base, m, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = fp_rem(fp_mul(result, b, p), m, p);
        b = fp_rem(fp_mul(b, b, p), m, p);
    }
    return result;
}

bool is_irreducible(const FpPoly& f_in, std::uint32_t p) {
    const FpPoly f = fp_trim(f_in);
    if (f.size() < 2) return false;
    const int k = static_cast<int>(f.size()) - 1;
    const FpPoly x{0, 1};
    FpPoly frob = fp_rem(x, f, p);  // x^{p^i} mod f
    for (int i = 1; i <= k; ++i) {
        frob = fp_powmod(frob, p, f, p);
        const FpPoly diff = fp_sub(frob, fp_rem(x, f, p), p);
        if (i < k) {
            if (fp_gcd(diff, f, p).size() != 1) return false;
        } else if (!diff.empty()) {
            return false;
        }
    }
    return true;
}

FpPoly find_irreducible(std::uint32_t p, int k) {
    if (!is_prime(p)) throw DomainError("find_irreducible: " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("find_irreducible: degree must be at least 1");
    FpPoly f(static_cast<std::size_t>(k) + 1, 0);
    f[static_cast<std::size_t>(k)] = 1;
    while (true) {
        if (is_irreducible(f, p)) return f;
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(k) && ++f[i] == p) f[i++] = 0;
    }
}

ExtField::ExtField(std::uint32_t p, int k, std::optional<FpPoly> modulus) : p_(p), k_(k), q_(1) {
    if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("extension degree must be at least 1");
    for (int i = 0; i < k; ++i) {
        if (q_ > (std::uint64_t{1} << 62) / p) throw DomainError("field too large");
        q_ *= p;
    }
    if (modulus) {
        FpPoly m = fp_trim(*modulus);
        if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
            throw DomainError("modulus must be monic of degree " + std::to_string(k));
        for (auto c : m)
            if (c >= p) throw DomainError("modulus coefficients must be reduced mod p");
        if (!is_irreducible(m, p)) throw DomainError("modulus is not irreducible");
        modulus_ = std::move(m);
    } else {
        modulus_ = find_irreducible(p, k);
    }
    if (q_ <= 65536) build_tables();
}

std::vector<std::uint32_t> ExtField::digits(std::uint64_t code) const {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(k_));
    for (auto& c : d) {
        c = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return d;
}

std::uint64_t ExtField::code(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t c = 0;
    for (std::size_t i = digits.size(); i-- > 0;) c = c * p_ + digits[i];
    return c;
}

std::uint64_t ExtField::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint64_t ExtField::neg(std::uint64_t a) const {
    std::uint64_t out = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

void ExtField::mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
                          std::uint64_t* scratch) const {
    const auto k = static_cast<std::size_t>(k_);
    for (std::size_t i = 0; i < 2 * k - 1; ++i) scratch[i] = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            scratch[i + j] += std::uint64_t{a[i]} * b[j];
            if (p_ >= 65536) scratch[i + j] %= p_;
        }
    }
    for (std::size_t i = 0; i < 2 * k - 1; ++i) scratch[i] %= p_;
    // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    for (std::size_t top = 2 * k - 1; top-- > k;) {
        const std::uint64_t c = scratch[top];
        if (c == 0) continue;
        scratch[top] = 0;
        for (std::size_t j = 0; j < k; ++j)
            scratch[top - k + j] = (scratch[top - k + j] + c * (p_ - modulus_[j])) % p_;
    }
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(scratch[i]);
}

std::uint64_t ExtField::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_zech()) return exp(log_mul(log_[a], log_[b]));
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(k_));
    std::vector<std::uint64_t> scratch(2 * static_cast<std::size_t>(k_));
    mul_digits(da.data(), db.data(), out.data(), scratch.data());
    return code(out);
}

std::uint64_t ExtField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
    }
    return result;
}

std::uint64_t ExtField::from_int(long long c) const {
    const long long r = c % static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + p_ : r);
}

void ExtField::build_tables() {
    const auto z = static_cast<std::uint32_t>(q_ - 1);
    std::vector<std::uint32_t> powers(q_ - 1);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(k_)), next(cur.size());
    std::vector<std::uint64_t> scratch(2 * cur.size());
    // smallest primitive element by code
    for (std::uint64_t g = 1; g < q_; ++g) {
        const auto gd = digits(g);
        std::fill(cur.begin(), cur.end(), 0);
        cur[0] = 1;
        std::uint64_t order = 0;
        do {
            powers[order++] = static_cast<std::uint32_t>(code(cur));
            mul_digits(cur.data(), gd.data(), next.data(), scratch.data());
            cur.swap(next);
        } while (order < q_ - 1 && !(cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](auto c) { return c == 0; })));
        if (order == q_ - 1) break;
        if (g == q_ - 1) throw DomainError("no primitive element found");
    }
    exp_ = std::move(powers);
    log_.assign(q_, z);
    for (std::uint32_t i = 0; i < z; ++i) log_[exp_[i]] = i;
    zech_.assign(z, z);
    for (std::uint32_t i = 0; i < z; ++i) zech_[i] = log_[add(1, exp_[i])];
}

}  // namespace supertube::zeta
