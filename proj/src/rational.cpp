#include "sunit/rational.hpp"

#include <cctype>

namespace sunit {

Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Rational pochhammer(const Rational& a, unsigned long k) {
    Rational acc(1);
    Rational term = a;
    for (unsigned long j = 0; j < k; ++j) {
        acc *= term;
        term += 1;
    }
    return acc;
}

Rational gen_binomial(const Rational& top, unsigned long k) {
    Rational acc(1);
    Rational term = top;
    for (unsigned long j = 0; j < k; ++j) {
        acc *= term;
        term -= 1;
    }
    return acc / Rational(factorial(k));
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0 && exponent < 0) throw std::domain_error("rational_pow: zero base with negative exponent");
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exponent < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

Rational rational_from_decimal(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a decimal literal: '" + text + "'"); };

    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) negative = (text[i++] == '-');

    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        digits += text[i];
        seen_digit = true;
    }
    if (i < n && text[i] == '.') {
        ++i;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            ++frac_digits;
            seen_digit = true;
        }
    }
    if (!seen_digit) return fail();

    long exp10 = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) exp_neg = (text[i++] == '-');
        if (i >= n) return fail();
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
            exp10 = exp10 * 10 + (text[i] - '0');
        if (exp_neg) exp10 = -exp10;
    }
    if (i != n) return fail();

    Rational value(Integer(digits.empty() ? "0" : digits));
    const long shift = exp10 - frac_digits;
    if (shift != 0) {
        Rational p;
        mpz_ui_pow_ui(p.get_num_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        if (shift < 0) mpq_inv(p.get_mpq_t(), p.get_mpq_t());
        value *= p;
    }
    if (negative) value = -value;
    return value;
}

}  // namespace sunit
