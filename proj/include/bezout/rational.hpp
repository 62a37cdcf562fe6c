#pragma once

#include <complex>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bezout {

/// Exact rational backed by GMP. Results of arithmetic are always canonical
/// (positive denominator, lowest terms).
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (q != 0). Whitespace around the literal is ignored.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact binary value of a finite double.
Rational rational_from_double(double value);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {} // NOLINT(google-explicit-constructor)
    GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    // Parts are canonicalized; mpq_class built from (num, den) is not.
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); } // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, Rational(-im_)}; }
    /// |q|^2, exact.
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::complex<long double> to_complex_ld() const;

private:
    Rational re_{0};
    Rational im_{0};
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

/// "re" when purely real, otherwise "re+imi" / "re-imi" (human-readable only).
std::string to_string(const GaussianRational& q);
std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

} // namespace bezout
