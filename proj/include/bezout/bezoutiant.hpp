#pragma once

#include "bezout/poly.hpp"

#include <cstddef>
#include <vector>

namespace bezout {

/// Pair of densities rescaled to unit mass on [0, a].
struct NormalizedPair {
    DensityPoly psi1;
    DensityPoly psi2;
    Rational a;
    /// Original masses \int_0^a Psi_k (nonzero).
    GaussianRational r1;
    GaussianRational r2;
    DensityPoly original1;
    DensityPoly original2;
};

/// Divides each density by its mass. Throws ZeroMass when a mass vanishes.
NormalizedPair normalize_pair(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a);

struct MFunctions {
    Rational a;
    Poly phi1; ///< \int_t^a psi1
    Poly phi2; ///< \int_t^a psi2
    Poly m1;
    Poly m2;
    GaussianRational alpha{1};
    GaussianRational beta{0};
};

/// Throws DegenerateChoice when conj(alpha) + beta = 0.
MFunctions build_m_functions(const NormalizedPair& pair, const GaussianRational& alpha = 1,
                             const GaussianRational& beta = 0);

/// Kernel of the Bezoutiant T f(x) = c \int_0^a f(t) U(x,t) dt.
/// `u_lower` holds U on x < t, `u_upper` on x > t.
struct BezoutKernel {
    GaussianRational c;
    BivariatePoly u_lower;
    BivariatePoly u_upper;
    Rational a;

    bool is_zero() const { return u_lower.is_zero() && u_upper.is_zero(); }
    /// Region-dispatched exact value (x == t uses u_lower).
    GaussianRational u(const GaussianRational& x, const GaussianRational& t) const;
    std::complex<double> u(double x, double t) const;
};

/// Exact kernel by symbolic integration over s. (alpha, beta) only enter c.
BezoutKernel build_kernel(const NormalizedPair& pair, const GaussianRational& alpha = 1,
                          const GaussianRational& beta = 0);

/// U(x0, t0) at a rational point, computed by plugging the point into the
/// defining integrand first and integrating the resulting univariate
/// polynomial in s. Independent of build_kernel's bivariate expansion.
GaussianRational kernel_value_direct(const NormalizedPair& pair, const Rational& x0, const Rational& t0);

/// T^* 1 computed symbolically from the kernel.
Poly adjoint_of_one(const BezoutKernel& kernel);

/// T^* 1 == conj(M2(a - x)) as exact polynomials.
bool check_adjoint_identity(const BezoutKernel& kernel, const MFunctions& mf);

/// Phi1(t) - [1 - conj(Phi2(a-t))] == (alpha + conj(beta)) conj(M2(a-t)).
bool check_phi_difference(const MFunctions& mf);

/// Majorant h(u) with |U(x,t)| <= h(x - t), densities extended by zero
/// outside [0, a]. Evaluated by composite Gauss-Legendre quadrature.
class KernelEnvelope {
public:
    explicit KernelEnvelope(const NormalizedPair& pair, int panels = 64);

    double operator()(double u) const;
    /// \int_{-a}^{a} h(u) du
    double integral() const;
    double a() const noexcept { return a_; }

    /// max over an n x n grid of |U(x,t)| - h(x-t); <= 0 when the bound holds.
    double max_violation(const BezoutKernel& kernel, std::size_t n) const;

private:
    Poly psi1_;
    Poly psi2_;
    double a_;
    int panels_;
};

KernelEnvelope kernel_bound(const NormalizedPair& pair);

} // namespace bezout
