#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xsym/matrix.hpp"
#include "xsym/poly.hpp"
#include "xsym/serialize.hpp"
#include "xsym/verdict.hpp"

namespace xsym {

/// (1/k!) * prod_{m=0}^{k-1} (alpha + beta*b - m): the binomial coefficient
/// C(alpha + beta*b, k) as a polynomial in b.
Poly binomial_poly(const Rational& alpha, const Rational& beta, unsigned k);

/// Holte's carries transition probability p_{ij} for adding n numbers in
/// base b, with 0-based carries i, j in [0, n-1].
Rational amazing_entry(std::size_t n, long b, std::size_t i, std::size_t j);

/// b^n * p_{ij}, always an integer.
BigInt amazing_entry_scaled(std::size_t n, long b, std::size_t i, std::size_t j);

struct AmazingParams {
    std::size_t n = 1;
    long b = 2;
    bool scaled = true;
};

/// Numeric Amazing Matrix; entries are computed in parallel.
Matrix<Rational> amazing_matrix(const AmazingParams& p);
/// Single-threaded reference for amazing_matrix.
Matrix<Rational> amazing_matrix_serial(const AmazingParams& p);

/// Scaled entries b^n p_{ij}(b) as polynomials, valid for every integer b >= n.
Matrix<Poly> amazing_matrix_symbolic(std::size_t n);

enum class Coverage { Certified, Refuted, Partial };
std::string to_string(Coverage c);

struct BaseResult {
    long b = 0;
    std::string verdict;  // "certified", "refuted" or "inapplicable"
    std::string detail;   // factorization digest or failure description
    std::size_t atom_count = 0;
};

struct RayAttempt {
    BigInt beta;
    std::string verdict;  // "certified", "refuted", "indefinite" or "inapplicable"
    std::string detail;
    std::optional<BigInt> witness_bound;
};

struct VerificationReport {
    std::size_t n = 0;
    std::vector<BaseResult> numeric;      // b in [2, n-1]
    std::vector<RayAttempt> symbolic;     // one per symbolic pass
    std::vector<BaseResult> residual;     // integer bases checked during escalation
    std::optional<Factorization<RatFunc>> ray_certificate;
    std::optional<BigInt> uncovered_from;  // set when overall is Partial
    Coverage overall = Coverage::Partial;
};

/// One-parameter family of matrices indexed by an integer base b >= 2: exact
/// instances for any base plus a polynomial form valid for b >= ray_start.
struct MatrixFamily {
    std::size_t n = 1;
    Matrix<Poly> symbolic;
    std::function<Matrix<Rational>(long)> instance;
    long ray_start = 2;
};

/// Numeric checks for b in [2, ray_start - 1], then the escalating symbolic
/// pass described under verify_amazing.
VerificationReport verify_family(const MatrixFamily& family, unsigned escalation_cap = 3);

/// Certifies the scaled Amazing Matrix of size n for every base b >= 2:
/// numeric elimination for b < max(n, 2), then a symbolic elimination valid on
/// the ray b >= beta, raising beta past indefinite signs at most
/// `escalation_cap` times.
VerificationReport verify_amazing(std::size_t n, unsigned escalation_cap = 3);

/// Stable-field-order document for a verification report.
Json report_to_json(const VerificationReport& r);

}  // namespace xsym
