#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "xsym/ratfunc.hpp"

namespace xsym {

enum class RayVerdict { PositiveOnRay, NegativeOnRay, ZeroIdentically, Mixed };

/// Sign of a rational function on the real ray [beta, inf).
///
/// `witness_bound` is set only for Mixed and is the floor of the largest real
/// root of num*den lying in the ray.
struct RaySign {
    RayVerdict verdict = RayVerdict::ZeroIdentically;
    std::optional<BigInt> witness_bound;

    friend bool operator==(const RaySign&, const RaySign&) = default;
};

std::string to_string(RayVerdict v);

/// Exact sign decision on [beta, inf). Tries the shifted-coefficient test
/// first and falls back to Sturm sequences. Requires beta >= 1.
RaySign sign_on_ray(const Poly& p, const BigInt& beta);
RaySign sign_on_ray(const RatFunc& f, const BigInt& beta);

/// Number of distinct real roots of p in the open interval (lo, inf); p must
/// not vanish at lo. Exposed for testing.
int count_roots_above(const Poly& p, const Rational& lo);

/// Integer strictly exceeding the absolute value of every complex root of p.
BigInt cauchy_bound(const Poly& p);

/// Thrown by RaySigns when a value changes sign (or vanishes) on the ray.
class IndefiniteSign : public std::runtime_error {
public:
    IndefiniteSign(std::string what_value, BigInt bound)
        : std::runtime_error("sign not constant on ray; root near " + bound.get_str()),
          value(std::move(what_value)),
          witness_bound(std::move(bound)) {}

    std::string value;
    BigInt witness_bound;
};

/// Sign decision for concrete rationals.
struct RationalSigns {
    using value_type = Rational;
    int sign(const Rational& x) const { return x.sign(); }
};

/// Sign decision for rational functions of b, valid uniformly for b >= beta.
/// Values that are neither identically zero nor of constant sign on the ray
/// raise IndefiniteSign.
struct RaySigns {
    using value_type = RatFunc;
    BigInt beta;

    int sign(const RatFunc& f) const;
};

}  // namespace xsym
