#include "xsym/ray_sign.hpp"

#include <vector>

namespace xsym {

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sign_variations_at_infinity(const std::vector<Poly>& chain) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = p.leading().sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

Poly square_free(const Poly& p) {
    const Poly g = gcd(p, p.derivative());
    return g.degree() > 0 ? divide_exact(p, g) : p;
}

// True when the square-free polynomial has a root in [k, inf).
bool has_root_at_or_above(const std::vector<Poly>& chain, int at_infinity, const BigInt& k) {
    const Rational x(k);
    if (chain.front().eval(x).is_zero()) return true;
    return sign_variations(chain, x) - at_infinity > 0;
}

}  // namespace

std::string to_string(RayVerdict v) {
    switch (v) {
        case RayVerdict::PositiveOnRay: return "positive-on-ray";
        case RayVerdict::NegativeOnRay: return "negative-on-ray";
        case RayVerdict::ZeroIdentically: return "zero-identically";
        case RayVerdict::Mixed: return "mixed";
    }
    return "unknown";
}

BigInt cauchy_bound(const Poly& p) {
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) {
        const Rational r = p.coefficient(static_cast<std::size_t>(k)).abs() / lead;
        if (r > m) m = r;
    }
    // 1 + max|a_k / a_d| bounds every root strictly; round up and add one.
    return (m + Rational(1)).floor() + 1;
}

int count_roots_above(const Poly& p, const Rational& lo) {
    const auto chain = sturm_chain(square_free(p));
    return sign_variations(chain, lo) - sign_variations_at_infinity(chain);
}

RaySign sign_on_ray(const Poly& p, const BigInt& beta) {
    if (beta < 1) throw std::invalid_argument("sign_on_ray requires beta >= 1");
    if (p.is_zero()) return {RayVerdict::ZeroIdentically, std::nullopt};

    const Poly shifted = p.shift(Rational(beta));
    const auto& c = shifted.coefficients();
    const int constant_sign = c.front().sign();
    if (constant_sign != 0) {
        bool uniform = true;
        for (const auto& a : c) {
            if (a.sign() != 0 && a.sign() != constant_sign) {
                uniform = false;
                break;
            }
        }
        if (uniform) {
            return {constant_sign > 0 ? RayVerdict::PositiveOnRay : RayVerdict::NegativeOnRay, std::nullopt};
        }
    }

    const auto chain = sturm_chain(square_free(p));
    const int at_infinity = sign_variations_at_infinity(chain);
    if (!has_root_at_or_above(chain, at_infinity, beta)) {
        return {p.eval(Rational(beta)).sign() > 0 ? RayVerdict::PositiveOnRay : RayVerdict::NegativeOnRay,
                std::nullopt};
    }

    // Largest integer k in [beta, bound) with a root in [k, inf).
    BigInt lo = beta;
    BigInt hi = cauchy_bound(p);
    if (hi <= lo) hi = lo + 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (has_root_at_or_above(chain, at_infinity, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {RayVerdict::Mixed, lo};
}

RaySign sign_on_ray(const RatFunc& f, const BigInt& beta) {
    if (f.is_zero()) return {RayVerdict::ZeroIdentically, std::nullopt};
    if (f.is_polynomial()) return sign_on_ray(f.num(), beta);
    return sign_on_ray(f.num() * f.den(), beta);
}

int RaySigns::sign(const RatFunc& f) const {
    const RaySign r = sign_on_ray(f, beta);
    switch (r.verdict) {
        case RayVerdict::PositiveOnRay: return 1;
        case RayVerdict::NegativeOnRay: return -1;
        case RayVerdict::ZeroIdentically: return 0;
        case RayVerdict::Mixed: break;
    }
    throw IndefiniteSign(f.to_string(), *r.witness_bound);
}

}  // namespace xsym
