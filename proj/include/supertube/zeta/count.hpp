#pragma once

#include "supertube/zeta/field.hpp"
#include "supertube/zeta/variety.hpp"

#include <cstdint>
#include <optional>

namespace supertube::zeta {

struct CountOptions {
    std::uint64_t budget = 1'000'000'000;  // point evaluations per call
    unsigned workers = 1;
    unsigned chunks = 64;                  // prefix chunks; results do not depend on it
    std::optional<FpPoly> modulus;         // default: lex-smallest irreducible
    bool allow_zech = true;                // false forces digit arithmetic
};

// Evaluations needed to count over F_{p^k}: p^{kn}, saturating at UINT64_MAX.
std::uint64_t count_cost(const PrimePolyVariety& v, int k);

// Number of points of P = 0 in F_{p^k}^n by enumeration. Throws BudgetError
// (carrying the required count) when count_cost exceeds the budget.
std::uint64_t count_points(const PrimePolyVariety& v, int k, const CountOptions& options = {});

}  // namespace supertube::zeta
