#include "supertube/zeta/count.hpp"

#include "supertube/error.hpp"

#include <atomic>
#include <string>
#include <thread>

namespace supertube::zeta {

namespace {

struct Monomial {
    std::uint64_t coeff;      // prime-subfield code
    std::vector<int> prefix;  // exponents of all but the last variable
};

// Terms grouped by the exponent of the last variable: P = sum_j a_j(prefix) y^j.
struct Layout {
    std::vector<std::vector<Monomial>> by_degree;
};

Layout make_layout(const PrimePolyVariety& v) {
    Layout l;
    for (const auto& [e, c] : v.terms()) {
        const auto j = static_cast<std::size_t>(e.back());
        if (l.by_degree.size() <= j) l.by_degree.resize(j + 1);
        l.by_degree[j].push_back({c, std::vector<int>(e.begin(), e.end() - 1)});
    }
    return l;
}

class ZechCounter {
public:
    ZechCounter(const ExtField& f, const Layout& l) : f_(f), l_(l) {}

    std::uint64_t count(const std::vector<std::uint64_t>& prefix) {
        const std::uint32_t z = f_.log_zero();
        const std::uint64_t order = z;
        logs_.resize(prefix.size());
        for (std::size_t i = 0; i < prefix.size(); ++i) logs_[i] = f_.log(prefix[i]);
        active_.clear();
        std::uint32_t a0 = z;
        for (std::size_t j = 0; j < l_.by_degree.size(); ++j) {
            std::uint32_t acc = z;
            for (const auto& m : l_.by_degree[j]) {
                std::uint64_t lg = f_.log(m.coeff);
                bool zero = false;
                for (std::size_t i = 0; i < m.prefix.size() && !zero; ++i) {
                    if (m.prefix[i] == 0) continue;
                    if (logs_[i] == z)
                        zero = true;
                    else
                        lg = (lg + static_cast<std::uint64_t>(m.prefix[i]) * logs_[i]) % order;
                }
                if (!zero) acc = f_.log_add(acc, static_cast<std::uint32_t>(lg));
            }
            if (j == 0) a0 = acc;
            if (acc != z) active_.push_back({acc, static_cast<std::uint32_t>(j % order)});
        }
        if (active_.empty()) return f_.size();
        std::uint64_t hits = a0 == z ? 1 : 0;  // y = 0
        if (active_.size() == 1 && a0 != z) return hits;
        // y = g^i: the term a_j y^j has log a_j + j i, advancing by j per step
        for (std::uint64_t i = 0; i < order; ++i) {
            std::uint32_t val = z;
            for (auto& t : active_) {
                val = f_.log_add(val, t.current);
                t.current += t.step;
                if (t.current >= z) t.current -= z;
            }
            if (val == z) ++hits;
        }
        return hits;
    }

private:
    struct Active {
        std::uint32_t current;
        std::uint32_t step;
    };
    const ExtField& f_;
    const Layout& l_;
    std::vector<std::uint32_t> logs_;
    std::vector<Active> active_;
};

class DigitCounter {
public:
    DigitCounter(const ExtField& f, const Layout& l)
        : f_(f), l_(l), k_(static_cast<std::size_t>(f.k())), scratch_(2 * k_), tmp_(k_), pw_(k_) {}

    std::uint64_t count(const std::vector<std::uint64_t>& prefix) {
        const std::size_t d = l_.by_degree.size();
        coeffs_.assign(d * k_, 0);
        prefix_digits_.resize(prefix.size() * k_);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const auto dg = f_.digits(prefix[i]);
            std::copy(dg.begin(), dg.end(), prefix_digits_.begin() + static_cast<std::ptrdiff_t>(i * k_));
        }
        bool any = false;
        for (std::size_t j = 0; j < d; ++j) {
            std::uint32_t* a = &coeffs_[j * k_];
            for (const auto& m : l_.by_degree[j]) {
                std::fill(pw_.begin(), pw_.end(), 0);
                pw_[0] = static_cast<std::uint32_t>(m.coeff);
                for (std::size_t i = 0; i < m.prefix.size(); ++i)
                    for (int e = 0; e < m.prefix[i]; ++e) mul_into(pw_.data(), &prefix_digits_[i * k_]);
                for (std::size_t t = 0; t < k_; ++t) a[t] = (a[t] + pw_[t]) % f_.p();
            }
            if (j > 0 && !is_zero(a)) any = true;
        }
        if (!any) return d == 0 || is_zero(&coeffs_[0]) ? f_.size() : 0;
        std::uint64_t hits = 0;
        std::vector<std::uint32_t> y(k_, 0), acc(k_);
        for (std::uint64_t n = 0; n < f_.size(); ++n) {
            // Horner from the top coefficient
            std::copy_n(&coeffs_[(d - 1) * k_], k_, acc.begin());
            for (std::size_t j = d - 1; j-- > 0;) {
                mul_into(acc.data(), y.data());
                const std::uint32_t* a = &coeffs_[j * k_];
                for (std::size_t t = 0; t < k_; ++t) {
                    const std::uint32_t s = acc[t] + a[t];
                    acc[t] = s >= f_.p() ? s - f_.p() : s;
                }
            }
            if (is_zero(acc.data())) ++hits;
            for (std::size_t t = 0; t < k_ && ++y[t] == f_.p(); ++t) y[t] = 0;
        }
        return hits;
    }

private:
    bool is_zero(const std::uint32_t* a) const {
        for (std::size_t t = 0; t < k_; ++t)
            if (a[t] != 0) return false;
        return true;
    }
    void mul_into(std::uint32_t* a, const std::uint32_t* b) {
        f_.mul_digits(a, b, tmp_.data(), scratch_.data());
        std::copy(tmp_.begin(), tmp_.end(), a);
    }

    const ExtField& f_;
    const Layout& l_;
    std::size_t k_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::uint32_t> tmp_, pw_, coeffs_, prefix_digits_;
};

template <class Counter>
std::uint64_t count_range(const ExtField& f, const Layout& l, int prefix_len, std::uint64_t begin,
                          std::uint64_t end) {
    Counter counter(f, l);
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(prefix_len), 0);
    std::uint64_t rest = begin;
    for (auto& c : prefix) {
        c = rest % f.size();
        rest /= f.size();
    }
    std::uint64_t total = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        total += counter.count(prefix);
        for (std::size_t i = 0; i < prefix.size() && ++prefix[i] == f.size(); ++i) prefix[i] = 0;
    }
    return total;
}

}  // namespace

std::uint64_t count_cost(const PrimePolyVariety& v, int k) {
    std::uint64_t cost = 1;
    for (int i = 0; i < k * v.nvars(); ++i) {
        if (cost > UINT64_MAX / v.p()) return UINT64_MAX;
        cost *= v.p();
    }
    return cost;
}

std::uint64_t count_points(const PrimePolyVariety& v, int k, const CountOptions& options) {
    if (k < 1) throw DomainError("count_points: k must be at least 1");
    const std::uint64_t cost = count_cost(v, k);
    if (cost > options.budget)
        throw BudgetError("counting over F_" + std::to_string(v.p()) + "^" + std::to_string(k) + " needs " +
                              std::to_string(cost) + " evaluations, budget is " + std::to_string(options.budget),
                          cost);
    const ExtField field(v.p(), k, options.modulus);
    const Layout layout = make_layout(v);
    const int prefix_len = v.nvars() - 1;
    std::uint64_t prefixes = 1;
    for (int i = 0; i < prefix_len; ++i) prefixes *= field.size();

    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.chunks, prefixes));
    std::vector<std::uint64_t> partial(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    const bool zech = options.allow_zech && field.has_zech();
    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(prefixes) * c / chunks);
            const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(prefixes) * (c + 1) / chunks);
            partial[c] = zech ? count_range<ZechCounter>(field, layout, prefix_len, lo, hi)
                              : count_range<DigitCounter>(field, layout, prefix_len, lo, hi);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(chunks)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace supertube::zeta
