#include <doctest.h>

#include "xsym/amazing.hpp"
#include "xsym/elimination.hpp"

using namespace xsym;

namespace {

using RM = Matrix<Rational>;

// Number of n-digit tuples in base b whose column sum, with incoming carry i,
// produces outgoing carry j. Independent of the closed formula.
BigInt carry_count(std::size_t n, long b, std::size_t i, std::size_t j) {
    std::vector<BigInt> ways(1, BigInt(1));  // ways[t] = tuples with digit sum t
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<BigInt> next(ways.size() + static_cast<std::size_t>(b - 1), BigInt(0));
        for (std::size_t t = 0; t < ways.size(); ++t)
            for (long digit = 0; digit < b; ++digit) next[t + static_cast<std::size_t>(digit)] += ways[t];
        ways = std::move(next);
    }
    BigInt total = 0;
    for (std::size_t t = 0; t < ways.size(); ++t)
        if ((static_cast<long>(i + t)) / b == static_cast<long>(j)) total += ways[t];
    return total;
}

BigInt power(long b, std::size_t n) {
    BigInt p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= b;
    return p;
}

RM scaled(std::size_t n, long b) { return amazing_matrix({n, b, true}); }

}  // namespace

TEST_CASE("binomial polynomials") {
    CHECK(binomial_poly(Rational(0), Rational(0), 0) == Poly(Rational(1)));
    CHECK(binomial_poly(Rational(1), Rational(2), 2).eval(Rational(2)) == Rational(10));
    CHECK(binomial_poly(Rational(1), Rational(2), 2).degree() == 2);
    for (unsigned k = 1; k <= 6; ++k)
        for (long m = 0; m < static_cast<long>(k); ++m)
            CHECK(binomial_poly(Rational(m), Rational(0), k).eval(Rational(0)).is_zero());
    for (long top = 0; top <= 12; ++top)
        for (unsigned k = 0; k <= 6; ++k) CHECK(binomial_poly(Rational(top), Rational(0), k).eval(Rational(0)) == Rational(binomial(top, k)));
}

TEST_CASE("amazing entries") {
    CHECK(scaled(2, 3) == RM{{6, 3}, {3, 6}});
    CHECK(amazing_entry_scaled(4, 3, 0, 3) == 0);
    // n = 2, b = 2 term by term:
    // p'00 = C(3,2) = 3; p'01 = C(5,2) - 3 C(3,2) = 1; p'10 = C(2,2) = 1; p'11 = C(4,2) - 3 C(2,2) = 3.
    CHECK(binomial(3, 2) == 3);
    CHECK(binomial(5, 2) - 3 * binomial(3, 2) == 1);
    CHECK(binomial(2, 2) == 1);
    CHECK(binomial(4, 2) - 3 * binomial(2, 2) == 3);
    CHECK(scaled(2, 2) == RM{{3, 1}, {1, 3}});
    CHECK(amazing_entry(2, 3, 0, 1) == Rational(1, 3));
    CHECK(amazing_entry(4, 3, 0, 3) == Rational(0));
}

TEST_CASE("amazing matrices from the worked examples") {
    CHECK(scaled(3, 3) == RM{{10, 16, 1}, {4, 19, 4}, {1, 16, 10}});
    CHECK(scaled(4, 3) == RM{{15, 51, 15, 0}, {5, 45, 30, 1}, {1, 30, 45, 5}, {0, 15, 51, 15}});
    for (long b = 2; b <= 6; ++b) CHECK(amazing_matrix({1, b, false}) == RM{{1}});
}

TEST_CASE("closed formula matches carry counting") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (long b = 2; b <= 7; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) REQUIRE(amazing_entry_scaled(n, b, i, j) == carry_count(n, b, i, j));
}

TEST_CASE("cross-symmetry and stochasticity") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (long b = 2; b <= 10; ++b) {
            const RM s = scaled(n, b);
            const RM u = amazing_matrix({n, b, false});
            REQUIRE(is_cross_symmetric(s));
            for (std::size_t i = 1; i <= n; ++i) {
                Rational rs(0), ru(0);
                for (std::size_t j = 1; j <= n; ++j) {
                    rs += s(i, j);
                    ru += u(i, j);
                    REQUIRE(u(i, j) >= Rational(0));
                    REQUIRE(u(i, j) <= Rational(1));
                }
                REQUIRE(rs == Rational(power(b, n)));
                REQUIRE(ru == Rational(1));
            }
        }
    }
}

TEST_CASE("parallel and serial generators agree") {
    for (std::size_t n = 1; n <= 9; ++n)
        for (long b = 2; b <= 12; b += 3) {
            REQUIRE(amazing_matrix({n, b, true}) == amazing_matrix_serial({n, b, true}));
            REQUIRE(amazing_matrix({n, b, false}) == amazing_matrix_serial({n, b, false}));
        }
}

TEST_CASE("symbolic matrix") {
    CHECK(amazing_matrix_symbolic(2)(1, 1).eval(Rational(3)) == Rational(6));
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto sym = amazing_matrix_symbolic(n);
        for (std::size_t i = 1; i <= n; ++i) {
            Poly row;
            for (std::size_t j = 1; j <= n; ++j) {
                REQUIRE(sym(i, j).degree() == static_cast<int>(n));
                row += sym(i, j);
            }
            Poly bn(Rational(1));
            for (std::size_t k = 0; k < n; ++k) bn *= Poly::variable();
            REQUIRE(row == bn);
        }
        for (long b = static_cast<long>(std::max<std::size_t>(n, 2)); b <= static_cast<long>(n) + 4; ++b) {
            const RM num = scaled(n, b);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j) REQUIRE(sym(i, j).eval(Rational(b)) == num(i, j));
        }
    }
}

TEST_CASE("base 2 matrices are certified") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto v = cross_symmetric_eliminate(scaled(n, 2));
        REQUIRE(is_tnn(v));
        CHECK(factorization_product(*std::get<TotallyNonnegative<Rational>>(v).factorization) == scaled(n, 2));
    }
}

TEST_CASE("all 2x2 minors are nonnegative") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (long b = 2; b <= 10; ++b) REQUIRE(all_2x2_minors_nonnegative(scaled(n, b)));
}

TEST_CASE("oracles agree on amazing matrices") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (long b = 2; b <= 6; ++b) {
            const RM m = scaled(n, b);
            const auto bf = brute_force_tnn(m);
            REQUIRE(bf.index() == cross_symmetric_eliminate(m).index());
            REQUIRE(bf.index() == neville_tnn_test(m).index());
            REQUIRE(is_tnn(bf));
        }
    }
}

TEST_CASE("verify_amazing") {
    {
        const auto r = verify_amazing(2);
        CHECK(r.overall == Coverage::Certified);
        CHECK(r.numeric.empty());
        REQUIRE(r.ray_certificate);
        REQUIRE(r.ray_certificate->atoms.size() == 1);
        const auto& atom = r.ray_certificate->atoms.front();
        CHECK(atom.kind == AtomKind::Center);
        CHECK(atom.c == RatFunc(Poly::parse("[-1, 1]"), Poly::parse("[1, 1]")));
        // Specializing the ray certificate gives the numeric certificate.
        CHECK(atom.c.eval(Rational(3)) == Rational(1, 2));
        CHECK(r.ray_certificate->diagonal[0].eval(Rational(3)) == Rational(9, 2));
    }
    {
        const auto r = verify_amazing(3);
        CHECK(r.overall == Coverage::Certified);
        REQUIRE(r.numeric.size() == 1);
        CHECK(r.numeric[0].b == 2);
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto r = verify_amazing(n);
        CHECK(r.overall == Coverage::Certified);
        CHECK(r.numeric.size() == (n > 2 ? n - 2 : 0));
        REQUIRE(r.ray_certificate);
        CHECK(r.symbolic.back().beta == BigInt(std::max<std::size_t>(n, 2)));
        // The ray certificate reproduces the symbolic matrix.
        const auto product = factorization_product(*r.ray_certificate);
        const auto sym = amazing_matrix_symbolic(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) REQUIRE(product(i, j) == RatFunc(sym(i, j)));
    }
    CHECK_THROWS_AS(verify_amazing(0), std::invalid_argument);
}

TEST_CASE("verification report document") {
    const Json doc = report_to_json(verify_amazing(3));
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"n", "overall", "numeric", "symbolic", "residual", "ray_certificate",
                                           "uncovered_from"});
    CHECK(doc["overall"] == "certified");
    CHECK(doc["numeric"][0]["b"] == 2);
    CHECK(doc["symbolic"][0]["beta"] == "3");
    CHECK(to_json_text(doc) == to_json_text(report_to_json(verify_amazing(3))));
}

TEST_CASE("escalation past an indefinite sign") {
    // [[p, 1], [1, p]] with p = b^2 - 7b + 105/8. The center coefficient 1/p
    // stays below 1 at every integer base, but p - 1 has real roots near 3.15
    // and 3.85, so the first ray b >= 2 is indefinite with witness bound 3.
    const Poly p = Poly::parse("[105/8, -7, 1]");
    MatrixFamily fam;
    fam.n = 2;
    fam.symbolic = Matrix<Poly>{{p, Poly(Rational(1))}, {Poly(Rational(1)), p}};
    fam.instance = [p](long b) {
        const Rational v = p.eval(Rational(b));
        return RM{{v, 1}, {1, v}};
    };
    fam.ray_start = 2;

    const auto r = verify_family(fam, 3);
    CHECK(r.overall == Coverage::Certified);
    REQUIRE(r.symbolic.size() == 2);
    CHECK(r.symbolic[0].verdict == "indefinite");
    CHECK(*r.symbolic[0].witness_bound == 3);
    CHECK(r.symbolic[1].beta == 4);
    CHECK(r.symbolic[1].verdict == "certified");
    REQUIRE(r.residual.size() == 2);
    CHECK(r.residual[0].b == 2);
    CHECK(r.residual[1].b == 3);

    const auto capped = verify_family(fam, 0);
    CHECK(capped.overall == Coverage::Partial);
    REQUIRE(capped.uncovered_from);
    CHECK(*capped.uncovered_from == 2);
    CHECK(capped.residual.empty());

    // Lowering the constant to 89/8 gives a negative pivot -7/8 at b = 3 and 4.
    const Poly q = Poly::parse("[89/8, -7, 1]");
    fam.symbolic = Matrix<Poly>{{q, Poly(Rational(1))}, {Poly(Rational(1)), q}};
    fam.instance = [q](long b) {
        const Rational v = q.eval(Rational(b));
        return RM{{v, 1}, {1, v}};
    };
    const auto refuted = verify_family(fam, 3);
    CHECK(refuted.overall == Coverage::Refuted);
}
