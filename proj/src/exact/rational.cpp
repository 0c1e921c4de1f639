#include "supertube/exact/rational.hpp"

#include "supertube/error.hpp"

#include <cctype>

namespace supertube::exact {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string digits(s);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    Integer d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return make_rational(parse_integer(num), d);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool exact_sqrt(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Integer rn = sqrt(n);
    Integer rd = sqrt(d);
    root = make_rational(rn, rd);
    return true;
}

Rational pow(const Rational& base, unsigned exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

}  // namespace supertube::exact
