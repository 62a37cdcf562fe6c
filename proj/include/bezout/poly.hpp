#pragma once

#include "bezout/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace bezout {

/// Univariate polynomial with Gaussian-rational coefficients, stored in
/// ascending powers. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs);
    Poly(std::initializer_list<GaussianRational> coeffs);

    static Poly constant(const GaussianRational& c);
    static Poly monomial(unsigned power, const GaussianRational& c = 1);
    /// c0 + c1*t
    static Poly linear(const GaussianRational& c0, const GaussianRational& c1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^power (zero beyond the degree).
    GaussianRational coeff(std::size_t power) const;
    const GaussianRational& leading() const;

    GaussianRational operator()(const GaussianRational& x) const;
    std::complex<double> operator()(std::complex<double> x) const;
    std::complex<long double> operator()(std::complex<long double> x) const;

    Poly derivative(unsigned order = 1) const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    GaussianRational definite_integral(const GaussianRational& lo, const GaussianRational& hi) const;

    /// Coefficient-wise conjugate: t -> conj(p(t)) for real t.
    Poly conj() const;
    /// p(c0 + c1*t), exact.
    Poly compose_linear(const GaussianRational& c0, const GaussianRational& c1) const;
    /// p(q(t)), exact.
    Poly compose(const Poly& inner) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussianRational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * GaussianRational(-1); }
    friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
    friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(Poly a, const GaussianRational& s);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

/// Density polynomial Psi(t) on [0, a]. Same representation as Poly; the
/// alias marks the role.
using DensityPoly = Poly;

/// t -> conj(p(a - t)) when `conjugate`, otherwise t -> p(a - t).
Poly poly_reflect(const Poly& p, const Rational& a, bool conjugate = true);

/// Human-readable form, e.g. "2 - 2t + (1+i)t^2".
std::string to_string(const Poly& p, char var = 't');

/// Bivariate polynomial sum c_ij x^i t^j with Gaussian-rational coefficients.
/// The first variable is x, the second t. Storage is dense and trimmed.
class BivariatePoly {
public:
    BivariatePoly() = default;
    /// rows indexed by power of x, columns by power of t.
    explicit BivariatePoly(std::vector<std::vector<GaussianRational>> coeffs);

    static BivariatePoly constant(const GaussianRational& c);
    /// p(x) as a bivariate polynomial.
    static BivariatePoly from_x(const Poly& p);
    /// p(t) as a bivariate polynomial.
    static BivariatePoly from_t(const Poly& p);
    /// c0 + cx*x + ct*t
    static BivariatePoly linear(const GaussianRational& c0, const GaussianRational& cx,
                                const GaussianRational& ct);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree_x() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_t() const noexcept;
    GaussianRational coeff(std::size_t i, std::size_t j) const;
    const std::vector<std::vector<GaussianRational>>& coeffs() const noexcept { return coeffs_; }

    GaussianRational operator()(const GaussianRational& x, const GaussianRational& t) const;
    std::complex<double> operator()(double x, double t) const;

    BivariatePoly partial_x(unsigned order = 1) const;
    BivariatePoly partial_t(unsigned order = 1) const;
    /// Exchanges the roles of x and t.
    BivariatePoly swapped() const;
    BivariatePoly conj() const;

    /// Substitutes x = x0; result is a polynomial in t.
    Poly at_x(const GaussianRational& x0) const;
    /// Substitutes t = t0; result is a polynomial in x.
    Poly at_t(const GaussianRational& t0) const;
    /// Substitutes t = h(x); result is a polynomial in x.
    Poly substitute_t(const Poly& h) const;
    /// Definite integral over t from lo(x) to hi(x); result is a polynomial in x.
    Poly integrate_t(const Poly& lo, const Poly& hi) const;
    /// Definite integral over x from lo(t) to hi(t); result is a polynomial in t.
    Poly integrate_x(const Poly& lo, const Poly& hi) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const GaussianRational& s);

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const GaussianRational& s) { return a *= s; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<std::vector<GaussianRational>> coeffs_;
};

/// p(L) where L is a bivariate polynomial (typically linear in x and t).
BivariatePoly compose(const Poly& p, const BivariatePoly& inner);

} // namespace bezout
