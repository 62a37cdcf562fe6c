#pragma once

#include "bezout/poly.hpp"
#include "bezout/rational.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <complex>
#include <random>

namespace testing {

using bezout::GaussianRational;
using bezout::Poly;
using bezout::Rational;

inline Rational random_rational(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline GaussianRational random_gauss(std::mt19937& rng, bool complex_part = true) {
    return complex_part ? GaussianRational(random_rational(rng), random_rational(rng))
                        : GaussianRational(random_rational(rng));
}

/// Random polynomial of exact degree `deg` (leading coefficient nonzero).
inline Poly random_poly(std::mt19937& rng, int deg, bool complex_part = true) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(random_gauss(rng, complex_part));
    while (c.back().is_zero()) c.back() = random_gauss(rng, complex_part);
    return Poly(std::move(c));
}

/// \int_0^a e^{izt} g(t) dt by adaptive Gauss-Kronrod, independent of the
/// closed form. With `conjugate` the integrand is conj(psi(t)).
inline std::complex<double> quad_transform(const Poly& psi, double a, std::complex<double> z, bool conjugate = true) {
    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [&](double t) {
        std::complex<double> g = psi(std::complex<double>(t, 0.0));
        if (conjugate) g = std::conj(g);
        return std::exp(std::complex<double>(0.0, 1.0) * z * t) * g;
    };
    const double re = gauss_kronrod<double, 61>::integrate([&](double t) { return integrand(t).real(); }, 0.0, a, 15, 1e-14);
    const double im = gauss_kronrod<double, 61>::integrate([&](double t) { return integrand(t).imag(); }, 0.0, a, 15, 1e-14);
    return {re, im};
}

} // namespace testing
