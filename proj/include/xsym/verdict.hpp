#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xsym/matrix.hpp"

namespace xsym {

/// One cross-symmetric elimination step F = I - c E(s+1,s) - c E(w0(s+1),w0(s)),
/// taken while clearing position (s+1, t).
template <class S>
struct ElementaryStep {
    std::size_t s = 0;
    std::size_t t = 0;
    S c;
    bool is_center = false;

    friend bool operator==(const ElementaryStep&, const ElementaryStep&) = default;
};

enum class AtomKind { Bridge, Center };

/// Inverse of an elimination step. Bridge: I + c E(s+1,s) + c E(w0(s+1),w0(s))
/// with n != 2s and c > 0. Center: n = 2s, the central block is
/// [[1, -c], [-c, 1]]^{-1} with 0 < c < 1.
template <class S>
struct Atom {
    AtomKind kind = AtomKind::Bridge;
    std::size_t s = 0;
    S c;
    std::size_t n = 0;

    static Atom bridge(std::size_t s, S c, std::size_t n) { return {AtomKind::Bridge, s, std::move(c), n}; }
    static Atom center(S c, std::size_t n) { return {AtomKind::Center, n / 2, std::move(c), n}; }

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// A = atoms[0] * atoms[1] * ... * diag(diagonal).
template <class S>
struct Factorization {
    std::size_t n = 0;
    std::vector<Atom<S>> atoms;
    std::vector<S> diagonal;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct NonpositivePivot { std::size_t s, t; };
struct NegativeMultiplier { std::size_t s, t; };
struct ZeroPivotNonzeroBelow { std::size_t s, t; };
struct CenterCoefficientNotLessThanOne { std::size_t s, t; };
struct NonpositiveDiagonal { std::size_t i; };
template <class S>
struct NegativeMinor {
    IndexSet rows;
    IndexSet cols;
    S value;
};

template <class S>
using FailureReason = std::variant<NonpositivePivot, NegativeMultiplier, ZeroPivotNonzeroBelow,
                                   CenterCoefficientNotLessThanOne, NonpositiveDiagonal, NegativeMinor<S>>;

template <class S>
struct Witness {
    FailureReason<S> reason;
    std::vector<ElementaryStep<S>> trace;
};

struct Singular {};
struct NotCrossSymmetric {};
struct SymbolicIndefinite {
    BigInt witness_bound;
    std::string value;
};
using InapplicableReason = std::variant<Singular, NotCrossSymmetric, SymbolicIndefinite>;

template <class S>
struct TotallyNonnegative {
    std::optional<Factorization<S>> factorization;
};
template <class S>
struct NotTnn {
    Witness<S> witness;
};
struct Inapplicable {
    InapplicableReason reason;
};

template <class S>
using Verdict = std::variant<TotallyNonnegative<S>, NotTnn<S>, Inapplicable>;

template <class S>
bool is_tnn(const Verdict<S>& v) { return std::holds_alternative<TotallyNonnegative<S>>(v); }
template <class S>
bool is_not_tnn(const Verdict<S>& v) { return std::holds_alternative<NotTnn<S>>(v); }
template <class S>
bool is_inapplicable(const Verdict<S>& v) { return std::holds_alternative<Inapplicable>(v); }

template <class S>
std::string describe(const FailureReason<S>& r) {
    struct Visitor {
        std::string operator()(const NonpositivePivot& x) const {
            return "nonpositive pivot at (" + std::to_string(x.s) + "," + std::to_string(x.t) + ")";
        }
        std::string operator()(const NegativeMultiplier& x) const {
            return "negative entry below pivot (" + std::to_string(x.s) + "," + std::to_string(x.t) + ")";
        }
        std::string operator()(const ZeroPivotNonzeroBelow& x) const {
            return "zero pivot at (" + std::to_string(x.s) + "," + std::to_string(x.t) + ") above a nonzero entry";
        }
        std::string operator()(const CenterCoefficientNotLessThanOne& x) const {
            return "center coefficient >= 1 at (" + std::to_string(x.s) + "," + std::to_string(x.t) + ")";
        }
        std::string operator()(const NonpositiveDiagonal& x) const {
            return "nonpositive diagonal entry " + std::to_string(x.i);
        }
        std::string operator()(const NegativeMinor<S>& x) const {
            return "negative minor [" + x.rows.to_string() + "|" + x.cols.to_string() + "] = " + x.value.to_string();
        }
    };
    return std::visit(Visitor{}, r);
}

inline std::string describe(const InapplicableReason& r) {
    struct Visitor {
        std::string operator()(const Singular&) const { return "singular matrix"; }
        std::string operator()(const NotCrossSymmetric&) const { return "matrix is not cross-symmetric"; }
        std::string operator()(const SymbolicIndefinite& x) const {
            return "sign of " + x.value + " not constant on the ray (largest root below " +
                   BigInt(x.witness_bound + 1).get_str() + ")";
        }
    };
    return std::visit(Visitor{}, r);
}

}  // namespace xsym
