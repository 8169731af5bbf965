#pragma once

#include "sunit/rational.hpp"

#include <cstddef>
#include <vector>

namespace sunit {

// Exact division left a nonzero remainder: the identity the caller was
// checking does not hold.
struct NonZeroRemainder : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense univariate polynomial over Rational, coefficients stored by ascending
// degree with trailing zeros trimmed. The zero polynomial has an empty
// coefficient vector; degree() reports kZeroDegree for it (stand-in for the
// usual deg 0 = -inf convention).
class RationalPolynomial {
public:
    static constexpr long kZeroDegree = -1;

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    // c * T^degree
    static RationalPolynomial monomial(const Rational& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of T^i (zero beyond the degree).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational evaluate(const Rational& x) const;
    RationalPolynomial derivative() const;
    // p(T) -> p(T^stride)
    RationalPolynomial inflate(std::size_t stride) const;
    // T^n * p(1/T); requires n >= degree
    RationalPolynomial reversed(std::size_t n) const;
    // p(inner(T)), exact
    RationalPolynomial compose(const RationalPolynomial& inner) const;

    bool operator==(const RationalPolynomial&) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator-(const RationalPolynomial& a);
RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p);

RationalPolynomial poly_pow(const RationalPolynomial& base, unsigned long exponent);

// Exact quotient num/den; throws NonZeroRemainder if den does not divide num.
RationalPolynomial poly_divide_exact(const RationalPolynomial& num, const RationalPolynomial& den);

}  // namespace sunit
