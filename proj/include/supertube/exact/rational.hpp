#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supertube::exact {

// Exact rational backed by GMP. Results of arithmetic are always in lowest
// terms with a positive denominator; values built through the helpers below
// are canonicalized on construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "a/b", or "a" when b = 1.
std::string to_string(const Rational& r);

// Accepts "a", "-a", "a/b"; rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// Exact square root when r is the square of a rational; false otherwise.
bool exact_sqrt(const Rational& r, Rational& root);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace supertube::exact
