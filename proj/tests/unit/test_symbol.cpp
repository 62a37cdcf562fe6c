#include "bezout/errors.hpp"
#include "bezout/symbol.hpp"
#include "helpers.hpp"

#include "doctest.h"

using namespace bezout;
using testing::random_poly;

namespace {
NormalizedPair pair_of(const Poly& p1, const Poly& p2, const Rational& a = 1) { return normalize_pair(p1, p2, a); }
} // namespace

TEST_SUITE("symbol-analysis") {

TEST_CASE("symbol V of the worked pairs") {
    CHECK(v_symbol(pair_of(Poly{0, 2}, Poly{1})).is_zero());
    CHECK(v_symbol(pair_of(Poly{0, 2}, Poly{0, 2})).is_zero());
    CHECK(v_symbol(pair_of(Poly{1}, Poly{1})).is_zero());
    CHECK(v_symbol(pair_of(Poly{0, 1, -2, 1}, Poly{0, 0, 1, -1})).is_zero());
}

TEST_CASE("operator L(D) of the worked pairs") {
    const DiffOperator l1 = l_operator(pair_of(Poly{0, 2}, Poly{1}));
    CHECK(l1.order() == 0);
    CHECK(l1.coeffs == Poly{2});
    const DiffOperator l2 = l_operator(pair_of(Poly{0, 2}, Poly{0, 2}));
    CHECK(l2.order() == 0);
    CHECK(l2.coeffs == Poly{4});
    const DiffOperator l0 = l_operator(pair_of(Poly{1}, Poly{1}));
    CHECK(l0.is_zero_operator());
    CHECK(l0.order() == -1);
}

TEST_CASE("symbol requires deg psi1 >= deg psi2") {
    CHECK_THROWS_AS(v_symbol(pair_of(Poly{1}, Poly{0, 2})), OrderViolation);
    CHECK_THROWS_AS(l_operator(pair_of(Poly{1}, Poly{0, 2})), OrderViolation);
}

TEST_CASE("closed-form monomial order") {
    CHECK(monomial_order(1, 0, 0, 0, 1).r == 0);
    const MonomialOrder o = monomial_order(0, 3, 0, 1, 1);
    CHECK(o.r == 2);
    CHECK(o.r_zero_end == 2);
    CHECK(o.r_a_end == -2);
    CHECK_FALSE(o.tie);
    CHECK_THROWS_AS(monomial_order(1, 2, 2, 1, 1), CoincidenceCase);
    CHECK_THROWS_AS(monomial_order(0, 0, 1, 0, 1), OrderViolation);
}

TEST_CASE("closed-form order matches L(D) whenever one boundary dominates") {
    for (unsigned m1 = 0; m1 <= 4; ++m1)
        for (unsigned n1 = 0; n1 <= 4; ++n1)
            for (unsigned m2 = 0; m2 <= 4; ++m2)
                for (unsigned n2 = 0; n2 <= 4; ++n2) {
                    if (m1 + n1 < m2 + n2 || (n1 == m2 && m1 == n2)) continue;
                    const Rational a(3, 2);
                    MonomialOrder mo;
                    try {
                        mo = monomial_order(m1, n1, m2, n2, a);
                    } catch (const InternalConsistency&) {
                        continue;
                    }
                    if (mo.tie) continue;
                    const auto pair = pair_of(monomial_density(m1, n1, a), monomial_density(m2, n2, a), a);
                    CAPTURE(m1);
                    CAPTURE(n1);
                    CAPTURE(m2);
                    CAPTURE(n2);
                    CHECK(l_operator(pair).order() == mo.r);
                }
}

TEST_CASE("monomial densities") {
    CHECK(monomial_density(1, 2, 1) == Poly{0, 1, -2, 1});
    CHECK(monomial_density(0, 0, 5) == Poly{1});
    CHECK(monomial_density(2, 1, 1) == Poly{0, 0, 1, -1});
}

TEST_CASE("verdicts of the worked pairs") {
    const Verdict v = decide(Poly{0, 2}, Poly{1}, 1);
    CHECK(v.outcome == Outcome::NoCommonZeros);
    CHECK(v.criterion == criterion::kNonnegativeOrder);
    CHECK(v.order == 0);
    CHECK(v.no_real_zeros);
    CHECK(v.no_conjugate_pairs);
    CHECK_FALSE(v.swapped);

    const Verdict c = decide(Poly{1}, Poly{1}, 1);
    CHECK(c.outcome == Outcome::ZeroSetsCoincide);
    CHECK(c.criterion == criterion::kCoincidence);
    CHECK_FALSE(c.no_real_zeros);

    const Verdict m = decide(Poly{0, 1, -2, 1}, Poly{0, 0, 1, -1}, 1);
    CHECK(m.outcome == Outcome::ZeroSetsCoincide);

    const Verdict s = decide(Poly{1}, Poly{0, 1}, 1);
    CHECK(s.outcome == Outcome::NoCommonZeros);
    CHECK(s.swapped);
}

TEST_CASE("zero-operator branch") {
    // Equal constants are coincident; a pair with Q = 0 that is not coincident
    // cannot exist (both unit-mass constants equal 1/a), so use the operator
    // directly: order -1 is the zero operator.
    CHECK(l_operator(pair_of(Poly{2}, Poly{5})).is_zero_operator());
}

TEST_CASE("zero mass gives Inconclusive with a reason") {
    const Verdict v = decide(Poly{1, -2}, Poly{0, 1}, 1);
    CHECK(v.outcome == Outcome::Inconclusive);
    CHECK(v.reason.rfind("ZeroMass", 0) == 0);
}

TEST_CASE("coincidence test") {
    const GaussianRational i = GaussianRational::i();
    CHECK(is_coincidence(Poly{1, i}, Poly{1 - i, i}, 1));
    CHECK_FALSE(is_coincidence(Poly{1, i}, Poly{1, i}, 1));
    CHECK(is_coincidence(Poly{1}, Poly{1}, 3));
}

TEST_CASE("swap symmetry and kernel consistency on random pairs") {
    std::mt19937 rng(41);
    int decided = 0;
    for (int k = 0; k < 40; ++k) {
        const Rational a(1 + k % 3, 1 + k % 2);
        const Poly p1 = random_poly(rng, static_cast<int>(rng() % 5));
        const Poly p2 = k % 4 == 0 ? poly_reflect(p1, a) : random_poly(rng, static_cast<int>(rng() % 5));
        const Verdict v12 = decide(p1, p2, a);
        const Verdict v21 = decide(p2, p1, a);
        CHECK(v12.outcome == v21.outcome);
        if (v12.outcome == Outcome::Inconclusive) {
            CHECK(v12.reason.rfind("ZeroMass", 0) == 0);
            continue;
        }
        ++decided;
        const bool zero = build_kernel(normalize_pair(p1, p2, a)).is_zero();
        CHECK(zero == (v12.outcome == Outcome::ZeroSetsCoincide));
    }
    CHECK(decided > 30);
}

TEST_CASE("non-algebraic polynomial pairs are inconclusive") {
    std::mt19937 rng(42);
    int by_symbol = 0;
    int inconclusive = 0;
    for (int k = 0; k < 40; ++k) {
        const Rational a(1 + k % 3, 1 + k % 2);
        const Poly p1 = random_poly(rng, 1 + static_cast<int>(rng() % 4), false);
        const Poly p2 = random_poly(rng, static_cast<int>(rng() % 3), false);
        const Verdict v = decide(p1, p2, a, CoeffClass::NonalgebraicFloat);
        if (v.outcome == Outcome::Inconclusive && v.reason.rfind("ZeroMass", 0) == 0) continue;
        if (v.coincidence) continue;
        REQUIRE(v.v_zero.has_value());
        if (*v.v_zero) {
            CHECK(v.outcome == Outcome::Inconclusive);
            CHECK(v.reason.rfind("SymbolVanishes", 0) == 0);
            ++inconclusive;
        } else {
            CHECK(v.outcome == Outcome::NoCommonZeros);
            CHECK(v.criterion == criterion::kNonvanishingSymbol);
            ++by_symbol;
        }
    }
    // The boundary terms of V telescope for polynomial densities, so V is
    // identically zero on every pair tried.
    CHECK(by_symbol == 0);
    CHECK(inconclusive > 0);
}

TEST_CASE("rational coincidence-free pairs are always decided") {
    std::mt19937 rng(43);
    for (int k = 0; k < 30; ++k) {
        const Rational a(1 + k % 4, 1 + k % 3);
        const Poly p1 = random_poly(rng, static_cast<int>(rng() % 6));
        const Poly p2 = random_poly(rng, static_cast<int>(rng() % 6));
        const Verdict v = decide(p1, p2, a);
        if (v.reason.rfind("ZeroMass", 0) == 0) continue;
        CHECK(v.outcome != Outcome::Inconclusive);
    }
}

TEST_CASE("coefficient class names") {
    CHECK(parse_coeff_class("rational") == CoeffClass::Rational);
    CHECK(parse_coeff_class("nonalgebraic-float") == CoeffClass::NonalgebraicFloat);
    CHECK_THROWS(parse_coeff_class("float"));
    CHECK(to_string(Outcome::NoCommonZeros) == "NoCommonZeros");
}

} // TEST_SUITE
