#pragma once

#include <string>
#include <string_view>

#include "xsym/poly.hpp"

namespace xsym {

/// Rational function num(b)/den(b) in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& constant) : RatFunc(Poly(constant)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long constant) : RatFunc(Rational(constant)) {}         // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    /// Parses `[..]` or `[..]/[..]`; a bare rational is accepted as a constant.
    static RatFunc parse(std::string_view text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws ArithmeticError when x is a pole.
    Rational eval(const Rational& x) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string to_string() const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

inline RatFunc zero_of(const RatFunc&) { return RatFunc(); }
inline RatFunc one_of(const RatFunc&) { return RatFunc(1L); }

}  // namespace xsym
