#include "bezout/errors.hpp"
#include "bezout/transform.hpp"
#include "helpers.hpp"

#include "doctest.h"

#include <cmath>

using namespace bezout;
using testing::quad_transform;
using testing::random_poly;
using cplx = std::complex<double>;

namespace {
const GaussianRational kI = GaussianRational::i();
constexpr double kPi = 3.14159265358979323846;

// Densities used throughout: constants, monomials, bumps, complex coefficients.
std::vector<std::pair<Poly, Rational>> corpus() {
    return {
        {Poly{1}, Rational(1)},
        {Poly{0, 1}, Rational(1)},
        {Poly{0, 2}, Rational(1)},
        {Poly{0, 0, 1}, Rational(1)},
        {Poly{0, 0, 0, 1}, Rational(1)},
        {Poly{0, 2, -1}, Rational(2)},
        {Poly{0, 0, 4, -4, 1}, Rational(2)},
        {Poly{1, GaussianRational(Rational(1), Rational(2)), 3}, Rational(3, 2)},
        {Poly{GaussianRational(Rational(1), Rational(-1)), kI}, Rational(1)},
        {Poly{0, 0, 0, 0, 0, 0, 1}, Rational(1, 2)},
    };
}

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }
} // namespace

TEST_SUITE("transform") {

TEST_CASE("constant density: Laurent coefficients and moments") {
    const ClosedTransform f = closed_form(Poly{1}, 1);
    REQUIRE(f.osc().size() == 1);
    REQUIRE(f.plain().size() == 1);
    CHECK(f.osc()[0] == GaussianRational(1) / kI);
    CHECK(f.plain()[0] == GaussianRational(-1) / kI);
    CHECK(f.moments()[0] == GaussianRational(1));
    CHECK(f.moments()[1] == GaussianRational(Rational(1, 2)));
    CHECK(f.moments()[2] == GaussianRational(Rational(1, 3)));
    CHECK(f.moments().size() >= 32);
}

TEST_CASE("linear density matches the twice-integrated form") {
    const ClosedTransform f = closed_form(Poly{0, 1}, 1);
    const cplx z(1.0, 0.0);
    const cplx iz(0.0, 1.0);
    const cplx expected = std::exp(iz * z) / (iz * z) + std::exp(iz * z) / (z * z) - 1.0 / (z * z);
    CHECK(std::abs(f(z) - expected) < 1e-14);
    CHECK(std::abs(f(z) - quad_transform(Poly{0, 1}, 1.0, z)) < 1e-13);
}

TEST_CASE("point values") {
    const ClosedTransform f = closed_form(Poly{1}, 1);
    CHECK(std::abs(f(cplx(2 * kPi, 0))) < 1e-13);
    CHECK(std::abs(f(cplx(0, 0)) - cplx(1, 0)) < 1e-15);
    const ClosedTransform bump = closed_form(Poly{0, 2, -1}, 2);
    const cplx at_pi = bump(cplx(kPi, 0));
    CHECK(std::abs(at_pi - quad_transform(Poly{0, 2, -1}, 2.0, cplx(kPi, 0))) < 1e-12);
    CHECK(std::abs(at_pi - cplx(-4.0 / (kPi * kPi), 0)) < 1e-12);
}

TEST_CASE("reflected transform") {
    CHECK(reflected_transform(Poly{1}, 1) == closed_form(Poly{1}, 1));
    const ClosedTransform f21 = reflected_transform(Poly{0, 2}, 1);
    for (int k = 1; k <= 4; ++k) {
        const cplx want(0.0, 1.0 / (kPi * k));
        CHECK(std::abs(f21(cplx(2 * kPi * k, 0)) - want) < 1e-13);
    }
    // No conjugation under the integral.
    const Poly psi{kI, 1};
    CHECK(std::abs(reflected_transform(psi, 1)(cplx(0.7, 0.2)) -
                   quad_transform(poly_reflect(psi, 1, false), 1.0, cplx(0.7, 0.2), false)) < 1e-13);
}

TEST_CASE("derivative transform") {
    const ClosedTransform d = derivative_transform(Poly{1}, 1);
    CHECK(std::abs(d(cplx(0, 0)) - cplx(0, 0.5)) < 1e-15);
    const ClosedTransform f = closed_form(Poly{1}, 1);
    const double h = 1e-5;
    const cplx z(2 * kPi, 0);
    const cplx fd = (f(z + h) - f(z - h)) / (2 * h);
    CHECK(std::abs(d(z) - fd) < 1e-8);
    CHECK(std::abs(derivative_transform(Poly{0, 2}, 1)(cplx(0, 0)) - cplx(0, 2.0 / 3.0)) < 1e-15);
}

TEST_CASE("Laurent differentiation equals the transform of -i t psi") {
    for (const auto& [psi, a] : corpus()) CHECK(closed_form(psi, a).derivative() == derivative_transform(psi, a));
}

TEST_CASE("trigonometric form of the constant density") {
    const TrigForm tf = trig_form(closed_form(Poly{1}, 1));
    CHECK(tf.scale_power == 1);
    CHECK(tf.p == Poly{-1 * kI});
    CHECK(tf.q == Poly{1});
    CHECK(tf.r == Poly{kI});
}

TEST_CASE("trigonometric form reproduces the transform") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (const auto& [psi, a] : corpus()) {
        const ClosedTransform f = closed_form(psi, a);
        const TrigForm tf = trig_form(f);
        for (int k = 0; k < 10; ++k) {
            const cplx z(u(rng), 0.3 * u(rng));
            const cplx lhs = std::pow(z, tf.scale_power) * f(z);
            // Error measured against the size of the terms that cancel.
            const cplx az = tf.a.get_d() * z;
            const double scale = std::abs(tf.p(z) * std::cos(az)) + std::abs(tf.q(z) * std::sin(az)) +
                                 std::abs(tf.r(z));
            CHECK(std::abs(tf.eval_scaled(z) - lhs) < 1e-12 * scale);
        }
    }
}

TEST_CASE("real densities satisfy F(-conj z) = conj F(z)") {
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (const auto& [psi, a] : corpus()) {
        if (psi.conj() != psi) continue;
        const ClosedTransform f = closed_form(psi, a);
        const TrigForm tf = trig_form(f);
        for (int k = 0; k < 10; ++k) {
            const cplx z(u(rng), 0.25 * u(rng));
            CHECK(std::abs(f(-std::conj(z)) - std::conj(f(z))) <= 1e-13 * std::max(1.0, std::abs(f(z))));
            CHECK(rel_err(tf.eval_scaled(-std::conj(z)), std::conj(tf.eval_scaled(z)) *
                                                             std::pow(-1.0, tf.scale_power)) < 1e-12);
        }
    }
}

TEST_CASE("series and closed form agree across the switching circle") {
    for (const auto& [psi, a] : corpus()) {
        const ClosedTransform f = closed_form(psi, a);
        const double r = f.series_radius();
        for (int k = 0; k < 24; ++k) {
            const cplx z = std::polar(r, 2 * kPi * k / 24.0);
            const cplx s = f.eval_series(z);
            const cplx l = f.eval_laurent(z);
            CHECK(std::abs(s - l) <= 1e-12 * std::max(1.0, std::abs(s)));
        }
    }
}

TEST_CASE("series and closed form agree on the annulus 0.25 <= |z| <= 1 for low degree") {
    for (const auto& [psi, a] : corpus()) {
        if (psi.degree() > 2) continue;
        const ClosedTransform f = closed_form(psi, a);
        for (double r : {0.25, 0.5, 1.0}) {
            for (int k = 0; k < 12; ++k) {
                const cplx z = std::polar(r, 2 * kPi * k / 12.0 + 0.1);
                CHECK(std::abs(f.eval_series(z) - f.eval_laurent(z)) <= 1e-12 * std::max(1.0, std::abs(f(z))));
            }
        }
    }
}

TEST_CASE("closed form matches adaptive quadrature") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> radius(0.0, 30.0);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (const auto& [psi, a] : corpus()) {
        const ClosedTransform f = closed_form(psi, a);
        // Keep e^{a |Im z|} moderate so the quadrature oracle is itself accurate.
        for (int k = 0; k < 50; ++k) {
            cplx z = std::polar(radius(rng), angle(rng));
            z = cplx(z.real(), z.imag() * 0.2);
            const cplx q = quad_transform(psi, a.get_d(), z);
            CHECK(std::abs(f(z) - q) <= 1e-10 * std::max(std::abs(q), 1e-2));
        }
    }
}

TEST_CASE("high-degree densities stay accurate near the switching radius") {
    const Poly psi = Poly::monomial(12);
    const ClosedTransform f = closed_form(psi, 1);
    for (double x : {0.4, 1.0, 2.5, 6.0, 11.0}) {
        const cplx q = quad_transform(psi, 1.0, cplx(x, 0.1));
        CHECK(rel_err(f(cplx(x, 0.1)), q) < 1e-10);
    }
}

TEST_CASE("reflecting twice reproduces the transform") {
    std::mt19937 rng(24);
    for (int k = 0; k < 10; ++k) {
        const Poly g = random_poly(rng, k % 6);
        const Rational a(1 + k % 3, 1 + k % 2);
        CHECK(ClosedTransform::of_integrand(poly_reflect(poly_reflect(g, a, false), a, false), a) ==
              ClosedTransform::of_integrand(g, a));
        CHECK(reflected_transform(poly_reflect(g, a, false), a) == ClosedTransform::of_integrand(g, a));
    }
}

TEST_CASE("normalized densities have F(0) = 1") {
    for (const auto& [psi, a] : corpus()) {
        const auto mass = psi.definite_integral(0, a);
        const ClosedTransform f = closed_form(psi / mass, a);
        CHECK(f.moments()[0].conj() == GaussianRational(1));
        CHECK(std::abs(f(cplx(0, 0)) - std::conj(cplx(1, 0))) < 1e-15);
    }
}

TEST_CASE("evaluation far below the real axis reports overflow") {
    const ClosedTransform f = closed_form(Poly{1}, 1);
    CHECK_THROWS_AS(f(cplx(3.0, -800.0)), EvaluationOverflow);
    CHECK(std::isfinite(std::abs(f(cplx(3.0, 800.0)))));
}

} // TEST_SUITE
