#include "bezout/errors.hpp"
#include "bezout/poly.hpp"
#include "helpers.hpp"

#include "doctest.h"

using namespace bezout;
using testing::random_poly;
using testing::random_gauss;

namespace {
GaussianRational gq(long re, long im = 0) { return {Rational(re), Rational(im)}; }
GaussianRational frac(long p, long q) { return Rational(p, q); }
} // namespace

TEST_SUITE("poly-core") {

TEST_CASE("rational literals parse canonically") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational(" 5 ") == Rational(5));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(parse_rational("123456789012345678901234567890/3") ==
          Rational(mpz_class("41152263004115226300411522630")));
}

TEST_CASE("malformed rational literals are rejected") {
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("doubles convert exactly") {
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(-3.0) == Rational(-3));
    CHECK(rational_from_double(0.1).get_d() == 0.1);
}

TEST_CASE("gaussian rational arithmetic is exact") {
    const GaussianRational a = gq(1, 2);
    const GaussianRational b = gq(3, -1);
    CHECK(a * b == gq(5, 5));
    CHECK((a / b) * b == a);
    CHECK(a.conj().conj() == a);
    CHECK(a.norm() == Rational(5));
    CHECK(pow(GaussianRational::i(), 4) == gq(1));
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
    GaussianRational c(Rational(2, 4), Rational(-6, 8));
    CHECK(to_string(c.re()) == "1/2");
    CHECK(to_string(c.im()) == "-3/4");
}

TEST_CASE("gaussian rational products commute and associate") {
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto x = random_gauss(rng);
        const auto y = random_gauss(rng);
        const auto z = random_gauss(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("exact evaluation") {
    CHECK(Poly{0, 2}(frac(1, 2)) == gq(1));
    CHECK(Poly{0, -1, 1}(gq(0)) == gq(0));
    const Poly p{0, GaussianRational::i(), 3};
    CHECK(p(frac(1, 3)) == GaussianRational(Rational(1, 3), Rational(1, 3)));
}

TEST_CASE("zero polynomial is trimmed") {
    const Poly z{0, 0, 0};
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK((Poly{1, 2} - Poly{1, 2}).is_zero());
    CHECK(Poly{1, 0, 0}.degree() == 0);
}

TEST_CASE("definite integrals") {
    CHECK(Poly{1}.definite_integral(0, 1) == gq(1));
    CHECK(Poly{0, 1}.definite_integral(0, 1) == frac(1, 2));
    CHECK(Poly{0, 2, -1}.definite_integral(0, 2) == frac(4, 3));
}

TEST_CASE("derivatives") {
    CHECK(Poly{0, 0, 0, 1}.derivative(2) == Poly{0, 6});
    CHECK(Poly{5}.derivative().is_zero());
    CHECK(Poly{0, 1, 2}.derivative() == Poly{1, 4});
    CHECK(Poly{1, 2, 3}.derivative(7).is_zero());
    CHECK(Poly{1, 2, 3}.derivative(0) == Poly{1, 2, 3});
}

TEST_CASE("reflection") {
    CHECK(poly_reflect(Poly{1}, 1) == Poly{1});
    CHECK(poly_reflect(Poly{0, 2}, 1) == Poly{2, -2});
    // conj(i (2 - t)) = -2i + i t
    const GaussianRational i = GaussianRational::i();
    CHECK(poly_reflect(Poly{0, i}, 2) == Poly{-2 * i, i});
    CHECK(poly_reflect(Poly{0, i}, 2, false) == Poly{2 * i, -1 * i});
}

TEST_CASE("integrals are additive over adjacent intervals") {
    std::mt19937 rng(1);
    for (int k = 0; k < 40; ++k) {
        const Poly p = random_poly(rng, k % 7);
        const auto lo = random_gauss(rng);
        const auto mid = random_gauss(rng);
        const auto hi = random_gauss(rng);
        CHECK(p.definite_integral(lo, hi) == p.definite_integral(lo, mid) + p.definite_integral(mid, hi));
    }
}

TEST_CASE("reflection is an involution") {
    std::mt19937 rng(2);
    for (int k = 0; k < 40; ++k) {
        const Poly p = random_poly(rng, k % 8);
        const Rational a = Rational(1 + k % 5, 1 + k % 3);
        CHECK(poly_reflect(poly_reflect(p, a), a) == p);
        CHECK(poly_reflect(poly_reflect(p, a, false), a, false) == p);
    }
}

TEST_CASE("derivative of the integral with variable upper limit is the integrand") {
    std::mt19937 rng(3);
    for (int k = 0; k < 40; ++k) {
        const Poly p = random_poly(rng, k % 9);
        const auto lo = random_gauss(rng);
        // G(x) = \int_lo^x p = P(x) - P(lo)
        const Poly g = p.antiderivative() - Poly::constant(p.antiderivative()(lo));
        CHECK(g(lo).is_zero());
        CHECK(g.derivative() == p);
        const auto x = random_gauss(rng);
        CHECK(g(x) == p.definite_integral(lo, x));
    }
}

TEST_CASE("composition agrees with linear substitution") {
    std::mt19937 rng(4);
    for (int k = 0; k < 20; ++k) {
        const Poly p = random_poly(rng, k % 6);
        const auto c0 = random_gauss(rng);
        const auto c1 = random_gauss(rng);
        CHECK(p.compose_linear(c0, c1) == p.compose(Poly::linear(c0, c1)));
        const auto x = random_gauss(rng);
        CHECK(p.compose_linear(c0, c1)(x) == p(c0 + c1 * x));
    }
}

TEST_CASE("polynomial products evaluate multiplicatively") {
    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        const Poly p = random_poly(rng, k % 5);
        const Poly q = random_poly(rng, (k + 2) % 4);
        const auto x = random_gauss(rng);
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("bivariate calculus is exact") {
    std::mt19937 rng(6);
    const BivariatePoly xt = BivariatePoly::linear(0, 1, 0) * BivariatePoly::linear(0, 0, 1);
    CHECK(xt(frac(1, 2), frac(2, 3)) == frac(1, 3));
    CHECK(xt.partial_x() == BivariatePoly::from_t(Poly{0, 1}));
    CHECK(xt.swapped() == xt);
    for (int k = 0; k < 15; ++k) {
        std::vector<std::vector<GaussianRational>> rows(3, std::vector<GaussianRational>(3));
        for (auto& r : rows)
            for (auto& c : r) c = random_gauss(rng);
        const BivariatePoly b(rows);
        const auto x0 = random_gauss(rng);
        const auto t0 = random_gauss(rng);
        // \int_lo^hi in t, then evaluate at x0, equals integrating the slice.
        const Poly lo{0, 1};
        const Poly hi{1};
        const Poly integrated = b.integrate_t(lo, hi);
        CHECK(integrated(x0) == b.at_x(x0).definite_integral(x0, 1));
        CHECK(b.at_t(t0)(x0) == b(x0, t0));
        CHECK(b.swapped()(t0, x0) == b(x0, t0));
        CHECK(b.conj()(x0.conj(), t0.conj()) == b(x0, t0).conj());
        CHECK(b.substitute_t(Poly{0, 1})(x0) == b(x0, x0));
        CHECK(b.partial_t()(x0, t0) == b.at_x(x0).derivative()(t0));
    }
}

} // TEST_SUITE
