#include "xsym/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace xsym {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(const Rational& constant) : coeffs_{constant} { trim(); }

Poly Poly::variable() { return Poly{Rational(0), Rational(1)}; }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<Rational> coeffs;
    if (text.find_first_not_of(' ') == std::string_view::npos) return Poly{};
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coeffs.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(std::move(coeffs));
}

Rational Poly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::shift(const Rational& beta) const {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i > k; --i) c[i - 1] += beta * c[i];
    }
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    const Rational lead = leading();
    for (auto& c : r.coeffs_) c /= lead;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

std::string Poly::to_string() const {
    if (is_zero()) return "[0]";
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ", ";
        out += coeffs_[k].to_string();
    }
    return out + "]";
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<Rational> rem = dividend.coefficients();
    const auto& d = divisor.coefficients();
    const int dd = divisor.degree();
    if (dividend.degree() < dd) return {Poly{}, dividend};
    std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    const Rational lead = divisor.leading();
    for (int k = dividend.degree(); k >= dd; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dd)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= q * d[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& dividend, const Poly& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace xsym
