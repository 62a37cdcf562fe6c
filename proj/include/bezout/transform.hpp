#pragma once

#include "bezout/poly.hpp"

#include <complex>
#include <vector>

namespace bezout {

/// Exact closed form of an exponential transform
///
///     F(z) = \int_0^a e^{izt} g(t) dt
///
/// of a polynomial integrand g. Away from the origin
///
///     F(z) = e^{iaz} sum_j osc[j-1] z^{-j} + sum_j plain[j-1] z^{-j},
///
/// and near the origin the Taylor series sum_n (iz)^n moments[n] / n!
/// with moments[n] = \int_0^a t^n g(t) dt is used instead. For the class
/// transforms the integrand is g = conj(Psi).
class ClosedTransform {
public:
    ClosedTransform() = default;

    /// Builds the transform of the integrand g itself (no conjugation).
    static ClosedTransform of_integrand(const Poly& integrand, const Rational& a);

    const Rational& a() const noexcept { return a_; }
    const Poly& integrand() const noexcept { return integrand_; }
    const std::vector<GaussianRational>& osc() const noexcept { return osc_; }
    const std::vector<GaussianRational>& plain() const noexcept { return plain_; }
    const std::vector<GaussianRational>& moments() const noexcept { return moments_; }
    /// Radius below which evaluation uses the moment series.
    double series_radius() const noexcept { return series_radius_; }
    /// Highest inverse power of z in the Laurent parts (deg g + 1).
    int laurent_order() const noexcept { return static_cast<int>(osc_.size()); }

    /// Dispatches on series_radius(). Throws EvaluationOverflow when
    /// e^{a |Im z|} would leave double range.
    std::complex<double> operator()(std::complex<double> z) const;
    std::complex<double> eval_laurent(std::complex<double> z) const;
    std::complex<double> eval_series(std::complex<double> z) const;

    /// Exact closed form of F'(z), obtained by differentiating the Laurent
    /// parts and shifting the moments.
    ClosedTransform derivative() const;

    friend bool operator==(const ClosedTransform& l, const ClosedTransform& r) {
        return l.a_ == r.a_ && l.osc_ == r.osc_ && l.plain_ == r.plain_ && l.moments_ == r.moments_;
    }

private:
    void cache_floats();

    Rational a_{1};
    Poly integrand_;
    std::vector<GaussianRational> osc_;
    std::vector<GaussianRational> plain_;
    std::vector<GaussianRational> moments_;

    double series_radius_ = 0.5;
    long double a_ld_ = 1.0L;
    std::vector<std::complex<long double>> osc_f_;
    std::vector<std::complex<long double>> plain_f_;
    std::vector<std::complex<long double>> taylor_f_; // i^n mu_n / n!
};

/// z^{N} F(z) = P(z) cos(az) + Q(z) sin(az) + R(z) with N = laurent order.
struct TrigForm {
    Rational a;
    Poly p;
    Poly q;
    Poly r;
    int scale_power = 0;

    std::complex<double> eval_scaled(std::complex<double> z) const;
};

/// Transform of conj(psi) over [0, a].
ClosedTransform closed_form(const DensityPoly& psi, const Rational& a);

/// Transform of psi2(a - t) over [0, a] (no conjugation under the integral).
/// Its zeros are the conjugates of the zeros of closed_form(psi2, a).
ClosedTransform reflected_transform(const DensityPoly& psi2, const Rational& a);

/// Closed form of F' built from the density: F'(z) is the transform of
/// conj(-i t psi(t)).
ClosedTransform derivative_transform(const DensityPoly& psi, const Rational& a);

std::complex<double> eval_transform(const ClosedTransform& f, std::complex<double> z);

TrigForm trig_form(const ClosedTransform& f);

} // namespace bezout
