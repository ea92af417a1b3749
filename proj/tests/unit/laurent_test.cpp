#include <doctest.h>

#include <random>

#include "knotcab/errors.hpp"
#include "knotcab/laurent.hpp"

using namespace knotcab;

namespace {

LaurentPoly make(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    std::vector<LaurentPoly::Term> ts;
    for (auto& [e, c] : terms) ts.push_back({e, Int(c)});
    return LaurentPoly::from_terms(std::move(ts));
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), exp(-8, 8), coeff(-9, 9);
    std::vector<LaurentPoly::Term> ts;
    for (int i = nterms(rng); i > 0; --i)
        ts.push_back({exp(rng), Int(coeff(rng))});
    return LaurentPoly::from_terms(std::move(ts));
}

} // namespace

TEST_CASE("zero and one") {
    CHECK(LaurentPoly{}.is_zero());
    CHECK(LaurentPoly::zero() == LaurentPoly{});
    CHECK_FALSE(LaurentPoly::one().is_zero());
    CHECK(LaurentPoly::one().to_text() == "1");
    CHECK(LaurentPoly::zero().to_text() == "0");
    CHECK(LaurentPoly::one() == LaurentPoly::monomial(1, 0));
    CHECK(LaurentPoly::variable() == LaurentPoly::monomial(1, 1));
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("from_terms combines duplicates and drops zeros") {
    CHECK(make({{0, 1}, {0, -1}}).is_zero());
    auto p = make({{2, 1}, {-2, 3}, {2, 4}});
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(2) == 5);
    CHECK(p.coeff(-2) == 3);
    CHECK(p.coeff(0) == 0);
}

TEST_CASE("terms stay sorted ascending with no zero coefficients") {
    auto p = make({{5, 1}, {-3, 2}, {1, -7}});
    const auto& ts = p.terms();
    REQUIRE(ts.size() == 3);
    CHECK(ts[0].exp == -3);
    CHECK(ts[1].exp == 1);
    CHECK(ts[2].exp == 5);
    for (const auto& t : ts) CHECK(t.coeff != 0);
}

TEST_CASE("degree accessors") {
    auto p = make({{7, 1}, {3, -1}, {-5, -1}});
    CHECK(p.min_exp() == -5);
    CHECK(p.max_exp() == 7);
    CHECK(p.span() == 12);
    CHECK_THROWS_AS(LaurentPoly::zero().min_exp(), ZeroPolynomial);
    CHECK_THROWS_AS(LaurentPoly::zero().max_exp(), ZeroPolynomial);
    CHECK_THROWS_AS(LaurentPoly::zero().span(), ZeroPolynomial);
}

TEST_CASE("ring arithmetic") {
    auto a = make({{1, 1}, {-1, 1}}); // A + A^-1
    CHECK(a * a == make({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(a + (-a) == LaurentPoly::zero());
    CHECK(a - a == LaurentPoly::zero());
    CHECK(a * LaurentPoly::one() == a);
    CHECK(a * LaurentPoly::zero() == LaurentPoly::zero());
    CHECK(a.pow(0) == LaurentPoly::one());
    CHECK(a.pow(1) == a);
    CHECK(a.pow(3) == make({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
    auto b = a;
    b.mul_monomial(-2, 3);
    CHECK(b == make({{4, -2}, {2, -2}}));
}

TEST_CASE("reversal substitutes A -> A^-1") {
    auto p = make({{7, 1}, {3, -1}, {-5, -1}});
    CHECK(p.reversed() == make({{-7, 1}, {-3, -1}, {5, -1}}));
    CHECK(p.reversed().reversed() == p);
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto x = random_poly(rng), y = random_poly(rng);
        CHECK((x * y).reversed() == x.reversed() * y.reversed());
    }
}

TEST_CASE("exact division") {
    CHECK(quantum_integer(4).div_exact(quantum_integer(2)) ==
          make({{4, 1}, {-4, 1}}));
    CHECK_THROWS_AS(quantum_integer(3).div_exact(quantum_integer(2)),
                    NotDivisible);
    CHECK_THROWS_AS(LaurentPoly::one().div_exact(LaurentPoly::zero()),
                    NotDivisible);
    CHECK(LaurentPoly::zero().div_exact(quantum_integer(2)) ==
          LaurentPoly::zero());
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(rng), q = random_poly(rng);
        if (q.is_zero()) continue;
        CHECK((p * q).div_exact(q) == p);
    }
}

TEST_CASE("text form prints descending exponents") {
    auto tre = make({{7, 1}, {3, -1}, {-5, -1}});
    CHECK(tre.to_text() == "1*A^7 - 1*A^3 - 1*A^-5");
    CHECK(make({{-4, -1}, {-12, 1}}).to_text() == "-1*A^-4 + 1*A^-12");
    CHECK(make({{0, 42}}).to_text() == "42");
    CHECK(tre.to_text("q") == "1*q^7 - 1*q^3 - 1*q^-5");
}

TEST_CASE("JSON round-trip including beyond-64-bit coefficients") {
    auto tre = make({{7, 1}, {3, -1}, {-5, -1}});
    CHECK(LaurentPoly::from_json(tre.to_json()) == tre);
    CHECK(LaurentPoly::from_json(LaurentPoly::zero().to_json()) ==
          LaurentPoly::zero());
    auto big = make({{1, 1}, {0, 1}}).pow(80); // central coefficient ~1.07e23
    CHECK(big.coeff(40) > Int("100000000000000000000"));
    CHECK(LaurentPoly::from_json(big.to_json()) == big);
}

TEST_CASE("loop value and quantum integers") {
    CHECK(bracket_delta() == make({{2, -1}, {-2, -1}}));
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == LaurentPoly::one());
    CHECK(quantum_integer(2) == make({{2, 1}, {-2, 1}}));
    CHECK(quantum_integer(3) == make({{4, 1}, {0, 1}, {-4, 1}}));
    for (unsigned n = 2; n <= 8; ++n) {
        CHECK(quantum_integer(n).span() == 4 * (n - 1));
        // [2][n] = [n+1] + [n-1]
        CHECK(quantum_integer(2) * quantum_integer(n) ==
              quantum_integer(n + 1) + quantum_integer(n - 1));
    }
}

TEST_CASE("Chebyshev expansions") {
    CHECK(chebyshev(0).coeffs ==
          std::vector<std::pair<unsigned, Int>>{{0, 1}});
    CHECK(chebyshev(1).coeffs ==
          std::vector<std::pair<unsigned, Int>>{{1, 1}});
    CHECK(chebyshev(2).coeffs ==
          std::vector<std::pair<unsigned, Int>>{{0, -1}, {2, 1}});
    CHECK(chebyshev(5).coeffs ==
          std::vector<std::pair<unsigned, Int>>{{1, 3}, {3, -4}, {5, 1}});
    for (unsigned n = 0; n <= 8; ++n) {
        // evaluating S_n at the loop value gives [n+1] up to the sign
        // (-1)^n: the loop value is the negative of the quantum 2
        LaurentPoly at_delta;
        for (auto& [k, c] : chebyshev(n).coeffs) {
            auto term = bracket_delta().pow(k);
            term.mul_monomial(c, 0);
            at_delta += term;
        }
        auto expected = quantum_integer(n + 1);
        if (n % 2 == 1) expected = -expected;
        CHECK(at_delta == expected);
        for (auto& [k, c] : chebyshev(n).coeffs) CHECK(k % 2 == n % 2);
    }
}

TEST_CASE("q-form on the A^4 lattice") {
    auto tre_jones = make({{16, -1}, {12, 1}, {4, 1}});
    QForm qf = to_q(tre_jones);
    CHECK(qf.offset == 0);
    CHECK(qf.poly_q == make({{4, -1}, {3, 1}, {1, 1}}));

    QForm q2 = to_q(quantum_integer(2)); // A^2 + A^-2 = A^2 (1 + q^-1)
    CHECK(q2.offset == 2);
    CHECK(q2.poly_q == make({{0, 1}, {-1, 1}}));

    QForm qz = to_q(LaurentPoly::zero());
    CHECK(qz.offset == 0);
    CHECK(qz.poly_q.is_zero());

    CHECK_THROWS_AS(to_q(make({{1, 1}, {2, 1}})), NotOnLattice);

    // reconstruct: A^offset * poly_q(A^4) reproduces the original
    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        auto base = random_poly(rng);
        std::vector<LaurentPoly::Term> lat;
        for (auto& t : base.terms()) lat.push_back({4 * t.exp + 3, t.coeff});
        auto p = LaurentPoly::from_terms(std::move(lat));
        if (p.is_zero()) continue;
        QForm qf2 = to_q(p);
        std::vector<LaurentPoly::Term> back;
        for (auto& t : qf2.poly_q.terms())
            back.push_back({4 * t.exp + qf2.offset, t.coeff});
        CHECK(LaurentPoly::from_terms(std::move(back)) == p);
    }
}
