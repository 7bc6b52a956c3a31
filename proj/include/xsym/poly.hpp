#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xsym/rational.hpp"

namespace xsym {

/// Univariate polynomial in the base variable b with rational coefficients.
///
/// Coefficients are stored in ascending degree. Trailing zeros are stripped on
/// every construction, so the zero polynomial has no coefficients and
/// `leading()` of a nonzero polynomial is never zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(const Rational& constant);

    /// The monomial b.
    static Poly variable();

    /// Parses `[c0, c1, ..., cd]`; `[]` and `[0]` are the zero polynomial.
    static Poly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of b^k, zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    Rational leading() const;
    bool is_constant() const { return degree() <= 0; }

    Rational eval(const Rational& x) const;
    /// q with q(u) = p(u + beta).
    Poly shift(const Rational& beta) const;
    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Quotient when `divisor` divides `dividend` exactly; throws ArithmeticError
/// on a nonzero remainder.
Poly divide_exact(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

}  // namespace xsym
