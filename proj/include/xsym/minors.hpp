#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsym/matrix.hpp"
#include "xsym/ray_sign.hpp"
#include "xsym/verdict.hpp"

namespace xsym {

template <class D>
concept SignDomain = requires(const D& d, const typename D::value_type& x) {
    { d.sign(x) } -> std::convertible_to<int>;
};

/// Thrown by the minor oracle in symbolic mode when a minor has no constant
/// sign on the ray.
class InconclusiveMinor : public std::runtime_error {
public:
    InconclusiveMinor(IndexSet r, IndexSet c, std::string value, BigInt bound)
        : std::runtime_error("minor [" + r.to_string() + "|" + c.to_string() + "] = " + value +
                             " has no constant sign on the ray"),
          rows(std::move(r)),
          cols(std::move(c)),
          value(std::move(value)),
          witness_bound(std::move(bound)) {}

    IndexSet rows;
    IndexSet cols;
    std::string value;
    BigInt witness_bound;
};

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k == 0 || k > n) return out;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        out.emplace_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace detail {

enum class MinorStatus { Nonnegative, Negative, Indefinite };

template <class S, SignDomain Signs>
MinorStatus classify_minor(const S& value, const Signs& signs, BigInt& bound) {
    try {
        return signs.sign(value) < 0 ? MinorStatus::Negative : MinorStatus::Nonnegative;
    } catch (const IndefiniteSign& e) {
        bound = e.witness_bound;
        return MinorStatus::Indefinite;
    }
}

}  // namespace detail

/// Reference all-minors oracle: enumerates (I, J) by size, then I, then J,
/// and reports the first negative minor.
template <class S, SignDomain Signs>
Verdict<S> brute_force_tnn_serial(const Matrix<S>& a, const Signs& signs) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; k <= n; ++k) {
        const auto sets = subsets_of_size(n, k);
        for (const auto& rows : sets) {
            for (const auto& cols : sets) {
                S value = minor(a, rows, cols);
                BigInt bound;
                switch (detail::classify_minor(value, signs, bound)) {
                    case detail::MinorStatus::Nonnegative: break;
                    case detail::MinorStatus::Negative:
                        return NotTnn<S>{Witness<S>{NegativeMinor<S>{rows, cols, std::move(value)}, {}}};
                    case detail::MinorStatus::Indefinite:
                        throw InconclusiveMinor(rows, cols, value.to_string(), bound);
                }
            }
        }
    }
    return TotallyNonnegative<S>{};
}

/// OpenMP all-minors oracle. Minors of one size are evaluated in parallel;
/// the reported witness is the first failing pair in the serial order.
template <class S, SignDomain Signs>
Verdict<S> brute_force_tnn(const Matrix<S>& a, const Signs& signs) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; k <= n; ++k) {
        const auto sets = subsets_of_size(n, k);
        const std::size_t m = sets.size();
        const long total = static_cast<long>(m * m);
        std::vector<detail::MinorStatus> status(static_cast<std::size_t>(total));
        std::vector<S> values(static_cast<std::size_t>(total));
        std::vector<BigInt> bounds(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 8)
        for (long idx = 0; idx < total; ++idx) {
            const auto u = static_cast<std::size_t>(idx);
            const auto& rows = sets[u / m];
            const auto& cols = sets[u % m];
            values[u] = minor(a, rows, cols);
            status[u] = detail::classify_minor(values[u], signs, bounds[u]);
        }
        for (std::size_t u = 0; u < status.size(); ++u) {
            if (status[u] == detail::MinorStatus::Negative) {
                return NotTnn<S>{Witness<S>{NegativeMinor<S>{sets[u / m], sets[u % m], values[u]}, {}}};
            }
            if (status[u] == detail::MinorStatus::Indefinite) {
                throw InconclusiveMinor(sets[u / m], sets[u % m], values[u].to_string(), bounds[u]);
            }
        }
    }
    return TotallyNonnegative<S>{};
}

inline Verdict<Rational> brute_force_tnn(const Matrix<Rational>& a) { return brute_force_tnn(a, RationalSigns{}); }

/// Every 2x2 minor of a is nonnegative.
inline bool all_2x2_minors_nonnegative(const Matrix<Rational>& a) {
    const auto pairs = subsets_of_size(a.size(), 2);
    for (const auto& r : pairs)
        for (const auto& c : pairs)
            if (minor(a, r, c).sign() < 0) return false;
    return true;
}

}  // namespace xsym
