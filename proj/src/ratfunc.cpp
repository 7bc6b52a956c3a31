#include "xsym/ratfunc.hpp"

#include <stdexcept>

namespace xsym {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty() || text.front() != '[') return RatFunc(Rational::parse(text));
    const auto close = text.find(']');
    if (close == std::string_view::npos) throw std::invalid_argument("malformed rational function");
    Poly num = Poly::parse(text.substr(0, close + 1));
    std::string_view rest = text.substr(close + 1);
    if (rest.empty()) return RatFunc(std::move(num));
    if (rest.front() != '/') throw std::invalid_argument("malformed rational function: '" + std::string(text) + "'");
    return RatFunc(std::move(num), Poly::parse(rest.substr(1)));
}

Rational RatFunc::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw ArithmeticError("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw ArithmeticError("rational function division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace xsym
