#include "xsym/amazing.hpp"

#include <stdexcept>

#include "xsym/elimination.hpp"
#include "xsym/serialize.hpp"

namespace xsym {

Poly binomial_poly(const Rational& alpha, const Rational& beta, unsigned k) {
    Poly p(Rational(1));
    BigInt factorial = 1;
    for (unsigned m = 0; m < k; ++m) {
        p *= Poly{alpha - Rational(static_cast<long>(m)), beta};
        factorial *= m + 1;
    }
    return p * Rational(BigInt(1), factorial);
}

BigInt amazing_entry_scaled(std::size_t n, long b, std::size_t i, std::size_t j) {
    if (b < 2) throw std::invalid_argument("amazing matrix requires base b >= 2");
    if (n == 0 || i >= n || j >= n) throw std::out_of_range("amazing entry index outside [0, n-1]");
    const long ni = static_cast<long>(n), ii = static_cast<long>(i), jj = static_cast<long>(j);
    const long upper = jj - ii / b;
    BigInt sum = 0;
    for (long r = 0; r <= upper; ++r) {
        const long top = ni - 1 - ii + (jj + 1 - r) * b;
        const BigInt term = binomial(ni + 1, static_cast<unsigned long>(r)) * binomial(top, n);
        if (r % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational amazing_entry(std::size_t n, long b, std::size_t i, std::size_t j) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(b), n);
    return Rational(amazing_entry_scaled(n, b, i, j), scale);
}

namespace {

Rational entry_for(const AmazingParams& p, std::size_t i, std::size_t j) {
    return p.scaled ? Rational(amazing_entry_scaled(p.n, p.b, i, j)) : amazing_entry(p.n, p.b, i, j);
}

void check_params(const AmazingParams& p) {
    if (p.n == 0) throw std::invalid_argument("amazing matrix requires n >= 1");
    if (p.b < 2) throw std::invalid_argument("amazing matrix requires base b >= 2");
}

}  // namespace

Matrix<Rational> amazing_matrix(const AmazingParams& p) {
    check_params(p);
    const std::size_t n = p.n;
    std::vector<Rational> e(n * n);
    const long total = static_cast<long>(n * n);
#pragma omp parallel for
    for (long idx = 0; idx < total; ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        e[u] = entry_for(p, u / n, u % n);
    }
    return Matrix<Rational>(n, std::move(e));
}

Matrix<Rational> amazing_matrix_serial(const AmazingParams& p) {
    check_params(p);
    return Matrix<Rational>::from_function(p.n, [&](std::size_t i, std::size_t j) { return entry_for(p, i - 1, j - 1); });
}

Matrix<Poly> amazing_matrix_symbolic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("amazing matrix requires n >= 1");
    const long ni = static_cast<long>(n);
    return Matrix<Poly>::from_function(n, [&](std::size_t row, std::size_t col) {
        const long i = static_cast<long>(row) - 1, j = static_cast<long>(col) - 1;
        Poly sum;
        for (long r = 0; r <= j; ++r) {
            Poly term = binomial_poly(Rational(ni - 1 - i), Rational(j + 1 - r), static_cast<unsigned>(n)) *
                        Rational(binomial(ni + 1, static_cast<unsigned long>(r)));
            if (r % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        return sum;
    });
}

std::string to_string(Coverage c) {
    switch (c) {
        case Coverage::Certified: return "certified";
        case Coverage::Refuted: return "refuted";
        case Coverage::Partial: return "partial";
    }
    return "unknown";
}

namespace {

BaseResult check_base(const MatrixFamily& family, long b) {
    const auto m = family.instance(b);
    const auto v = cross_symmetric_eliminate(m);
    BaseResult r{b, "", "", 0};
    if (const auto* ok = std::get_if<TotallyNonnegative<Rational>>(&v)) {
        r.verdict = "certified";
        r.atom_count = ok->factorization->atoms.size();
        r.detail = digest(*ok->factorization);
    } else if (const auto* no = std::get_if<NotTnn<Rational>>(&v)) {
        r.verdict = "refuted";
        r.detail = describe(no->witness.reason);
    } else {
        r.verdict = "inapplicable";
        r.detail = describe(std::get<Inapplicable>(v).reason);
    }
    return r;
}

std::vector<BaseResult> check_bases(const MatrixFamily& family, long lo, long hi) {
    if (hi < lo) return {};
    std::vector<BaseResult> out(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic)
    for (long b = lo; b <= hi; ++b) out[static_cast<std::size_t>(b - lo)] = check_base(family, b);
    return out;
}

bool all_certified(const std::vector<BaseResult>& rs) {
    for (const auto& r : rs)
        if (r.verdict != "certified") return false;
    return true;
}

bool any_refuted(const std::vector<BaseResult>& rs) {
    for (const auto& r : rs)
        if (r.verdict == "refuted") return true;
    return false;
}

}  // namespace

VerificationReport verify_family(const MatrixFamily& family, unsigned escalation_cap) {
    if (family.ray_start < 2) throw std::invalid_argument("verify_family requires ray_start >= 2");
    const std::size_t n = family.n;
    VerificationReport report;
    report.n = n;
    report.numeric = check_bases(family, 2, family.ray_start - 1);

    Matrix<RatFunc> symbolic(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) symbolic.at(i, j) = RatFunc(family.symbolic(i, j));

    BigInt beta = family.ray_start;
    bool ray_done = false;
    bool ray_refuted = false;
    for (unsigned round = 0; round <= escalation_cap; ++round) {
        const auto v = cross_symmetric_eliminate(symbolic, RaySigns{beta});
        RayAttempt attempt{beta, "", "", std::nullopt};
        if (const auto* ok = std::get_if<TotallyNonnegative<RatFunc>>(&v)) {
            attempt.verdict = "certified";
            attempt.detail = digest(*ok->factorization);
            report.ray_certificate = ok->factorization;
            report.symbolic.push_back(std::move(attempt));
            ray_done = true;
            break;
        }
        if (const auto* no = std::get_if<NotTnn<RatFunc>>(&v)) {
            attempt.verdict = "refuted";
            attempt.detail = describe(no->witness.reason);
            report.symbolic.push_back(std::move(attempt));
            ray_refuted = true;
            break;
        }
        const auto& reason = std::get<Inapplicable>(v).reason;
        attempt.detail = describe(reason);
        const auto* indefinite = std::get_if<SymbolicIndefinite>(&reason);
        if (indefinite == nullptr) {
            attempt.verdict = "inapplicable";
            report.symbolic.push_back(std::move(attempt));
            break;
        }
        attempt.verdict = "indefinite";
        attempt.witness_bound = indefinite->witness_bound;
        const BigInt bound = indefinite->witness_bound;
        report.symbolic.push_back(std::move(attempt));
        if (round == escalation_cap) break;
        if (!bound.fits_slong_p()) break;
        auto residual = check_bases(family, beta.get_si(), bound.get_si());
        report.residual.insert(report.residual.end(), residual.begin(), residual.end());
        beta = bound + 1;
    }

    if (any_refuted(report.numeric) || any_refuted(report.residual) || ray_refuted) {
        report.overall = Coverage::Refuted;
    } else if (ray_done && all_certified(report.numeric) && all_certified(report.residual)) {
        report.overall = Coverage::Certified;
    } else {
        report.overall = Coverage::Partial;
        report.uncovered_from = beta;
    }
    return report;
}

VerificationReport verify_amazing(std::size_t n, unsigned escalation_cap) {
    if (n == 0) throw std::invalid_argument("verify_amazing requires n >= 1");
    MatrixFamily family;
    family.n = n;
    family.symbolic = amazing_matrix_symbolic(n);
    family.instance = [n](long b) { return amazing_matrix_serial({n, b, true}); };
    family.ray_start = std::max<long>(static_cast<long>(n), 2);
    return verify_family(family, escalation_cap);
}

}  // namespace xsym

namespace xsym {

namespace {

Json base_to_json(const BaseResult& r) {
    Json j;
    j["b"] = r.b;
    j["verdict"] = r.verdict;
    j["atoms"] = r.atom_count;
    j["detail"] = r.detail;
    return j;
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
    Json doc;
    doc["n"] = r.n;
    doc["overall"] = to_string(r.overall);
    Json numeric = Json::array();
    for (const auto& b : r.numeric) numeric.push_back(base_to_json(b));
    doc["numeric"] = std::move(numeric);
    Json symbolic = Json::array();
    for (const auto& a : r.symbolic) {
        Json j;
        j["beta"] = a.beta.get_str();
        j["verdict"] = a.verdict;
        j["witness_bound"] = a.witness_bound ? Json(a.witness_bound->get_str()) : Json(nullptr);
        j["detail"] = a.detail;
        symbolic.push_back(std::move(j));
    }
    doc["symbolic"] = std::move(symbolic);
    Json residual = Json::array();
    for (const auto& b : r.residual) residual.push_back(base_to_json(b));
    doc["residual"] = std::move(residual);
    doc["ray_certificate"] = r.ray_certificate ? factorization_to_json(*r.ray_certificate) : Json(nullptr);
    doc["uncovered_from"] = r.uncovered_from ? Json(r.uncovered_from->get_str()) : Json(nullptr);
    return doc;
}

}  // namespace xsym
