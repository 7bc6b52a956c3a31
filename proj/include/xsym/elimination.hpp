#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "xsym/matrix.hpp"
#include "xsym/minors.hpp"
#include "xsym/ray_sign.hpp"
#include "xsym/verdict.hpp"

namespace xsym {

/// I - c E(s+1,s) - c E(w0(s+1),w0(s)). For n = 2s the two cells are
/// (s+1,s) and (s,s+1).
template <class S>
Matrix<S> materialize_elementary(const ElementaryStep<S>& step, std::size_t n) {
    if (step.s < 1 || step.s >= n) throw std::out_of_range("elementary step row outside 1..n-1");
    Matrix<S> f = Matrix<S>::identity(n);
    f.at(step.s + 1, step.s) -= step.c;
    f.at(w0(step.s + 1, n), w0(step.s, n)) -= step.c;
    return f;
}

/// Checks the atom invariants with the given sign rule; throws
/// std::invalid_argument on violation.
template <class S, SignDomain Signs>
void require_valid_atom(const Atom<S>& a, const Signs& signs) {
    if (a.n < 2) throw std::invalid_argument("atoms need n >= 2");
    if (a.kind == AtomKind::Bridge) {
        if (a.s < 1 || a.s >= a.n || 2 * a.s == a.n) throw std::invalid_argument("bridge atom requires 1 <= s < n, n != 2s");
        if (signs.sign(a.c) <= 0) throw std::invalid_argument("bridge atom requires c > 0");
    } else {
        if (a.n % 2 != 0 || a.s != a.n / 2) throw std::invalid_argument("center atom requires even n and s = n/2");
        if (signs.sign(a.c) <= 0 || signs.sign(S(1L) - a.c) <= 0) {
            throw std::invalid_argument("center atom requires 0 < c < 1");
        }
    }
}

template <class S>
Matrix<S> materialize_atom(const Atom<S>& a) {
    if constexpr (std::is_same_v<S, Rational>) require_valid_atom(a, RationalSigns{});
    const std::size_t n = a.n;
    Matrix<S> m = Matrix<S>::identity(n);
    if (a.kind == AtomKind::Bridge) {
        m.at(a.s + 1, a.s) += a.c;
        m.at(w0(a.s + 1, n), w0(a.s, n)) += a.c;
        return m;
    }
    const S denom = S(1L) - a.c * a.c;
    if (denom.is_zero()) throw std::invalid_argument("center atom requires 0 < c < 1");
    const S diag = S(1L) / denom;
    const S off = a.c / denom;
    m.at(a.s, a.s) = diag;
    m.at(a.s + 1, a.s + 1) = diag;
    m.at(a.s, a.s + 1) = off;
    m.at(a.s + 1, a.s) = off;
    return m;
}

/// The atom F^{-1} for an elimination step F.
template <class S>
Atom<S> inverse_atom(const ElementaryStep<S>& step, std::size_t n) {
    return step.is_center ? Atom<S>::center(step.c, n) : Atom<S>::bridge(step.s, step.c, n);
}

/// The elimination step whose inverse is the atom.
template <class S>
ElementaryStep<S> inverse_step(const Atom<S>& a) {
    return {a.s, 0, a.c, a.kind == AtomKind::Center};
}

/// F * A computed as two row operations against the unmodified rows of A.
template <class S>
Matrix<S> apply_step(const Matrix<S>& a, const ElementaryStep<S>& step) {
    const std::size_t n = a.size();
    const std::size_t r1 = step.s + 1, src1 = step.s;
    const std::size_t r2 = w0(step.s + 1, n), src2 = w0(step.s, n);
    Matrix<S> b = a;
    for (std::size_t j = 1; j <= n; ++j) {
        if (!a(src1, j).is_zero()) b.at(r1, j) -= step.c * a(src1, j);
        if (!a(src2, j).is_zero()) b.at(r2, j) -= step.c * a(src2, j);
    }
    return b;
}

template <class S>
Matrix<S> factorization_product(const Factorization<S>& f) {
    Matrix<S> m = Matrix<S>::identity(f.n);
    for (const auto& atom : f.atoms) m = m * materialize_atom(atom);
    return m * Matrix<S>::diagonal(f.diagonal);
}

/// First nonzero below-diagonal position in column-major, bottom-up order:
/// (n,1), ..., (2,1), (n,2), ..., (3,2), ..., (n,n-1).
template <class S>
std::optional<std::pair<std::size_t, std::size_t>> first_uncleared(const Matrix<S>& a) {
    const std::size_t n = a.size();
    for (std::size_t t = 1; t < n; ++t)
        for (std::size_t r = n; r > t; --r)
            if (!a(r, t).is_zero()) return std::pair{r, t};
    return std::nullopt;
}

template <class S>
struct EliminationRun {
    Verdict<S> verdict;
    std::vector<ElementaryStep<S>> steps;
    /// F_k ... F_1 A for k = 0..d, filled when requested.
    std::vector<Matrix<S>> intermediates;
};

/// Cross-symmetric elimination with full trace.
template <class S, SignDomain Signs>
EliminationRun<S> eliminate_traced(const Matrix<S>& input, const Signs& signs, bool keep_intermediates = false) {
    EliminationRun<S> run{Inapplicable{NotCrossSymmetric{}}, {}, {}};
    if (!is_cross_symmetric(input)) return run;
    if (determinant(input).is_zero()) {
        run.verdict = Inapplicable{Singular{}};
        return run;
    }

    const std::size_t n = input.size();
    Matrix<S> a = input;
    if (keep_intermediates) run.intermediates.push_back(a);
    auto fail = [&](FailureReason<S> reason) {
        run.verdict = NotTnn<S>{Witness<S>{std::move(reason), run.steps}};
        return run;
    };

    try {
        while (auto pos = first_uncleared(a)) {
            const auto [r, t] = *pos;
            const std::size_t s = r - 1;
            if (signs.sign(a(r, t)) < 0) return fail(NegativeMultiplier{s, t});
            if (a(s, t).is_zero()) return fail(ZeroPivotNonzeroBelow{s, t});
            if (signs.sign(a(s, t)) < 0) return fail(NonpositivePivot{s, t});
            S c = a(r, t) / a(s, t);
            const bool center = (n == 2 * s);
            if (center && signs.sign(S(1L) - c) <= 0) return fail(CenterCoefficientNotLessThanOne{s, t});
            if (!(a(w0(r, n), w0(t, n)) == a(r, t)) || !(a(w0(s, n), w0(t, n)) == a(s, t))) {
                throw std::logic_error("cross-symmetry lost during elimination");
            }
            ElementaryStep<S> step{s, t, std::move(c), center};
            a = apply_step(a, step);
            run.steps.push_back(std::move(step));
            if (keep_intermediates) run.intermediates.push_back(a);
        }
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                if (!a(i, j).is_zero()) throw std::logic_error("above-diagonal entry survived elimination");
        for (std::size_t i = 1; i <= n; ++i)
            if (signs.sign(a(i, i)) <= 0) return fail(NonpositiveDiagonal{i});
    } catch (const IndefiniteSign& e) {
        run.verdict = Inapplicable{SymbolicIndefinite{e.witness_bound, e.value}};
        return run;
    }

    Factorization<S> f{n, {}, a.diagonal_entries()};
    f.atoms.reserve(run.steps.size());
    for (const auto& step : run.steps) f.atoms.push_back(inverse_atom(step, n));
    run.verdict = TotallyNonnegative<S>{std::move(f)};
    return run;
}

template <class S, SignDomain Signs>
Verdict<S> cross_symmetric_eliminate(const Matrix<S>& a, const Signs& signs) {
    return eliminate_traced(a, signs).verdict;
}

inline Verdict<Rational> cross_symmetric_eliminate(const Matrix<Rational>& a) {
    return cross_symmetric_eliminate(a, RationalSigns{});
}

namespace detail {

// Neville elimination without row exchanges; nullopt when every multiplier is
// nonnegative and every diagonal pivot positive.
template <class S, SignDomain Signs>
std::optional<FailureReason<S>> neville_pass(Matrix<S> m, const Signs& signs) {
    const std::size_t n = m.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n; i > k; --i) {
            if (m(i, k).is_zero()) continue;
            if (m(i - 1, k).is_zero()) return ZeroPivotNonzeroBelow{i - 1, k};
            const S mult = m(i, k) / m(i - 1, k);
            if (signs.sign(mult) < 0) return NegativeMultiplier{i - 1, k};
            for (std::size_t j = k; j <= n; ++j) {
                if (!m(i - 1, j).is_zero()) m.at(i, j) -= mult * m(i - 1, j);
            }
        }
    }
    for (std::size_t i = 1; i <= n; ++i)
        if (signs.sign(m(i, i)) <= 0) return NonpositiveDiagonal{i};
    return std::nullopt;
}

}  // namespace detail

/// Classical Neville test for nonsingular matrices, run on A and then on its
/// transpose. Witness indices of the second pass refer to the transpose.
template <class S, SignDomain Signs>
Verdict<S> neville_tnn_test(const Matrix<S>& a, const Signs& signs) {
    if (determinant(a).is_zero()) return Inapplicable{Singular{}};
    try {
        if (auto r = detail::neville_pass(a, signs)) return NotTnn<S>{Witness<S>{std::move(*r), {}}};
        if (auto r = detail::neville_pass(a.transpose(), signs)) return NotTnn<S>{Witness<S>{std::move(*r), {}}};
    } catch (const IndefiniteSign& e) {
        return Inapplicable{SymbolicIndefinite{e.witness_bound, e.value}};
    }
    return TotallyNonnegative<S>{};
}

inline Verdict<Rational> neville_tnn_test(const Matrix<Rational>& a) { return neville_tnn_test(a, RationalSigns{}); }

}  // namespace xsym
