#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xsym/ratfunc.hpp"
#include "xsym/rational.hpp"

namespace xsym {

/// The order-reversing index map on 1..n.
inline std::size_t w0(std::size_t i, std::size_t n) {
    if (i < 1 || i > n) throw std::out_of_range("w0: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return n + 1 - i;
}

/// Strictly increasing, nonempty list of 1-based row or column indices.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
    explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
        if (idx_.empty()) throw std::invalid_argument("empty index set");
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (idx_[k] < 1 || (k > 0 && idx_[k] <= idx_[k - 1])) {
                throw std::invalid_argument("index set must be strictly increasing and 1-based");
            }
        }
    }

    std::size_t size() const { return idx_.size(); }
    std::size_t operator[](std::size_t k) const { return idx_[k]; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    std::span<const std::size_t> view() const { return idx_; }

    /// Image under w0, re-sorted.
    IndexSet reversed(std::size_t n) const {
        std::vector<std::size_t> r;
        r.reserve(idx_.size());
        for (auto it = idx_.rbegin(); it != idx_.rend(); ++it) r.push_back(w0(*it, n));
        return IndexSet(std::move(r));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < idx_.size(); ++k) s += (k ? "," : "") + std::to_string(idx_[k]);
        return s + "}";
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

/// Dense square matrix over an exact scalar, 1-based access.
template <class Scalar>
class Matrix {
public:
    using value_type = Scalar;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), entries_(n * n, Scalar{}) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    }
    Matrix(std::size_t n, std::vector<Scalar> row_major) : n_(n), entries_(std::move(row_major)) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
        if (entries_.size() != n * n) throw std::invalid_argument("matrix entry count does not match n*n");
    }
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()) {
        if (n_ == 0) throw std::invalid_argument("matrix dimension must be at least 1");
        entries_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw std::invalid_argument("matrix must be square");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_function(std::size_t n, const std::function<Scalar(std::size_t, std::size_t)>& f) {
        Matrix m(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) m.at(i, j) = f(i, j);
        return m;
    }

    static Matrix identity(std::size_t n) {
        return from_function(n, [](std::size_t i, std::size_t j) { return Scalar(i == j ? 1L : 0L); });
    }

    static Matrix diagonal(std::span<const Scalar> d) {
        Matrix m(d.size());
        for (std::size_t i = 1; i <= d.size(); ++i) m.at(i, i) = d[i - 1];
        return m;
    }

    std::size_t size() const { return n_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Matrix transpose() const {
        return from_function(n_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
    }

    std::vector<Scalar> diagonal_entries() const {
        std::vector<Scalar> d;
        d.reserve(n_);
        for (std::size_t i = 1; i <= n_; ++i) d.push_back((*this)(i, i));
        return d;
    }

    /// The submatrix on the given rows and columns (same count) as a dense matrix.
    Matrix submatrix(const IndexSet& rows, const IndexSet& cols) const {
        if (rows.size() != cols.size()) throw std::invalid_argument("submatrix index sets differ in size");
        check_indices(rows);
        check_indices(cols);
        Matrix m(rows.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) m.at(a + 1, b + 1) = (*this)(rows[a], cols[b]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix product dimension mismatch");
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 1; k <= n; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 1; j <= n; ++j) {
                    if (!b(k, j).is_zero()) c.at(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_indices(const IndexSet& s) const {
        for (auto i : s)
            if (i > n_) throw std::out_of_range("index " + std::to_string(i) + " exceeds dimension");
    }

    std::size_t n_ = 0;
    std::vector<Scalar> entries_;
};

using RationalMatrix = Matrix<Rational>;
using RatFuncMatrix = Matrix<RatFunc>;

/// Entrywise rotation by 180 degrees: result(i,j) = A(w0(i), w0(j)).
template <class S>
Matrix<S> tau(const Matrix<S>& a) {
    const std::size_t n = a.size();
    return Matrix<S>::from_function(n, [&](std::size_t i, std::size_t j) { return a(w0(i, n), w0(j, n)); });
}

template <class S>
bool is_cross_symmetric(const Matrix<S>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (!(a(i, j) == a(w0(i, n), w0(j, n)))) return false;
    return true;
}

/// Ones on the anti-diagonal.
template <class S = Rational>
Matrix<S> exchange_matrix(std::size_t n) {
    return Matrix<S>::from_function(n, [n](std::size_t i, std::size_t j) { return S(j == n + 1 - i ? 1L : 0L); });
}

/// Determinant by exact Gaussian elimination over a field.
template <class S>
S determinant(const Matrix<S>& a) {
    const std::size_t n = a.size();
    std::vector<S> m = a.entries();
    auto el = [&](std::size_t i, std::size_t j) -> S& { return m[i * n + j]; };
    S det(1L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && el(p, k).is_zero()) ++p;
        if (p == n) return S(0L);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(el(p, j), el(k, j));
            det = -det;
        }
        det *= el(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (el(i, k).is_zero()) continue;
            const S f = el(i, k) / el(k, k);
            for (std::size_t j = k + 1; j < n; ++j) el(i, j) -= f * el(k, j);
            el(i, k) = S(0L);
        }
    }
    return det;
}

/// Rational determinant: rows are scaled to integers, then fraction-free
/// Bareiss elimination runs over mpz.
inline Rational determinant(const Matrix<Rational>& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> m(n * n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i + 1, j + 1).denominator().get_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a(i + 1, j + 1);
            m[i * n + j] = x.numerator() * (l / x.denominator());
        }
    }
    auto el = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (el(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && el(p, k) == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(el(p, j), el(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = el(k, k) * el(i, j) - el(i, k) * el(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                el(i, j) = std::move(v);
            }
        }
        prev = el(k, k);
    }
    const BigInt det = el(n - 1, n - 1) * sign;
    return Rational(det, scale);
}

/// Exact minor [I|J]; cofactor expansion for sizes up to 3.
template <class S>
S minor(const Matrix<S>& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: index sets differ in size");
    for (auto i : rows)
        if (i > a.size()) throw std::out_of_range("minor: row index exceeds dimension");
    for (auto j : cols)
        if (j > a.size()) throw std::out_of_range("minor: column index exceeds dimension");
    auto e = [&](std::size_t r, std::size_t c) -> const S& { return a(rows[r], cols[c]); };
    switch (rows.size()) {
        case 1: return e(0, 0);
        case 2: return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
        case 3:
            return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                   e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                   e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        default: return determinant(a.submatrix(rows, cols));
    }
}

template <class S>
std::string to_string(const Matrix<S>& a) {
    std::string out = "[";
    for (std::size_t i = 1; i <= a.size(); ++i) {
        out += i > 1 ? ",[" : "[";
        for (std::size_t j = 1; j <= a.size(); ++j) out += (j > 1 ? "," : "") + a(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

/// Scalar conversion used where rational matrices enter symbolic code.
inline Matrix<RatFunc> to_ratfunc(const Matrix<Rational>& a) {
    std::vector<RatFunc> e(a.entries().begin(), a.entries().end());
    return Matrix<RatFunc>(a.size(), std::move(e));
}

/// Specializes every entry at b = x.
inline Matrix<Rational> evaluate(const Matrix<RatFunc>& a, const Rational& x) {
    std::vector<Rational> e;
    e.reserve(a.entries().size());
    for (const auto& f : a.entries()) e.push_back(f.eval(x));
    return Matrix<Rational>(a.size(), std::move(e));
}

/// A pair (s, t) with a_{sj} = 0 for every j <= t while a_{s+1,t} != 0; such
/// a pair rules out an invertible totally nonnegative matrix.
template <class S>
std::optional<std::pair<std::size_t, std::size_t>> zero_pattern_violation(const Matrix<S>& a) {
    const std::size_t n = a.size();
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t t = 1; t <= n; ++t) {
            if (!a(s, t).is_zero()) break;
            if (!a(s + 1, t).is_zero()) return std::pair{s, t};
        }
    }
    return std::nullopt;
}

}  // namespace xsym
