#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "xsym/elimination.hpp"

namespace xsym {

struct CertifiedSample {
    Matrix<Rational> matrix;
    Factorization<Rational> certificate;
};

/// Random product of valid atoms and a palindromic positive diagonal.
/// Bridge coefficients are p/q with p, q in [1, 9]; center coefficients
/// p/q with 1 <= p < q <= 9; diagonal entries p/q with p in [1, 9], q in [1, 4].
inline CertifiedSample random_certified_tnn(std::size_t n, std::uint64_t seed, std::size_t atom_count) {
    if (n == 0) throw std::invalid_argument("random_certified_tnn requires n >= 1");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

    Factorization<Rational> f{n, {}, std::vector<Rational>(n)};
    if (n >= 2) {
        for (std::size_t k = 0; k < atom_count; ++k) {
            const auto s = static_cast<std::size_t>(uniform(1, static_cast<long>(n) - 1));
            if (2 * s == n) {
                const long q = uniform(2, 9);
                f.atoms.push_back(Atom<Rational>::center(Rational(uniform(1, q - 1), q), n));
            } else {
                f.atoms.push_back(Atom<Rational>::bridge(s, Rational(uniform(1, 9), uniform(1, 9)), n));
            }
        }
    }
    for (std::size_t i = 1; i <= (n + 1) / 2; ++i) {
        const Rational d(uniform(1, 9), uniform(1, 4));
        f.diagonal[i - 1] = d;
        f.diagonal[n - i] = d;
    }
    Matrix<Rational> m = factorization_product(f);
    return {std::move(m), std::move(f)};
}

}  // namespace xsym
