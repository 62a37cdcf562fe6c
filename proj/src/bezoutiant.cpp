#include "bezout/bezoutiant.hpp"

#include "bezout/errors.hpp"
#include "gauss_rule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bezout {

namespace {

// Polynomial in s with bivariate (x, t) coefficients.
using SPoly = std::vector<BivariatePoly>;

SPoly mul(const SPoly& a, const SPoly& b) {
    if (a.empty() || b.empty()) return {};
    SPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

SPoly sub(SPoly a, const SPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    return a;
}

SPoly from_s(const Poly& p) {
    SPoly out;
    for (const auto& c : p.coeffs()) out.push_back(BivariatePoly::constant(c));
    return out;
}

// p(inner + sign*s) = sum_k (sign s)^k p^{(k)}(inner) / k!
SPoly shifted(const Poly& p, const BivariatePoly& inner, int sign) {
    SPoly out;
    Poly dk = p;
    for (int k = 0; k <= p.degree(); ++k) {
        GaussianRational scale(Rational(1) / factorial(static_cast<unsigned>(k)));
        if (sign < 0 && k % 2 == 1) scale = -scale;
        out.push_back(compose(dk, inner) * scale);
        dk = dk.derivative();
    }
    return out;
}

SPoly antiderivative(const SPoly& p) {
    SPoly out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] = p[k] * GaussianRational(Rational(1, static_cast<unsigned long>(k + 1)));
    }
    return out;
}

BivariatePoly evaluate_at(const SPoly& p, const BivariatePoly& s) {
    BivariatePoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * s;
        acc += *it;
    }
    return acc;
}

// Integrand of U as a polynomial in s over (x, t):
//   Psi2(a-s) conj(Psi1(a-s-x+t)) - Psi2(s+x-t) conj(Psi1(s)).
SPoly kernel_integrand(const NormalizedPair& pair) {
    const GaussianRational a(pair.a);
    const Poly g1 = pair.psi1.conj();
    const SPoly psi2_reflected = from_s(pair.psi2.compose_linear(a, -1));
    const SPoly g1_shift = shifted(g1, BivariatePoly::linear(a, -1, 1), -1);
    const SPoly psi2_shift = shifted(pair.psi2, BivariatePoly::linear(0, 1, -1), +1);
    const SPoly g1_plain = from_s(g1);
    return sub(mul(psi2_reflected, g1_shift), mul(psi2_shift, g1_plain));
}

GaussianRational conj_alpha_plus_beta(const GaussianRational& alpha, const GaussianRational& beta) {
    const GaussianRational d = alpha.conj() + beta;
    if (d.is_zero()) throw DegenerateChoice("conj(alpha) + beta must be nonzero");
    return d;
}

} // namespace

NormalizedPair normalize_pair(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a) {
    if (sgn(a) <= 0) throw std::invalid_argument("interval length a must be positive");
    const GaussianRational zero;
    const GaussianRational end(a);
    NormalizedPair pair;
    pair.a = a;
    pair.original1 = psi1;
    pair.original2 = psi2;
    pair.r1 = psi1.definite_integral(zero, end);
    pair.r2 = psi2.definite_integral(zero, end);
    if (pair.r1.is_zero()) throw ZeroMass("density 1 has zero mass on [0, a]");
    if (pair.r2.is_zero()) throw ZeroMass("density 2 has zero mass on [0, a]");
    pair.psi1 = psi1 / pair.r1;
    pair.psi2 = psi2 / pair.r2;
    return pair;
}

MFunctions build_m_functions(const NormalizedPair& pair, const GaussianRational& alpha,
                             const GaussianRational& beta) {
    const GaussianRational denom = conj_alpha_plus_beta(alpha, beta);
    const GaussianRational end(pair.a);
    MFunctions mf;
    mf.a = pair.a;
    mf.alpha = alpha;
    mf.beta = beta;
    // Phi_k(t) = \int_t^a psi_k = A(a) - A(t)
    const Poly anti1 = pair.psi1.antiderivative();
    const Poly anti2 = pair.psi2.antiderivative();
    mf.phi1 = Poly::constant(anti1(end)) - anti1;
    mf.phi2 = Poly::constant(anti2(end)) - anti2;
    mf.m2 = (mf.phi2 + poly_reflect(mf.phi1, pair.a) - Poly::constant(1)) / denom;
    mf.m1 = mf.phi2 - mf.m2 * beta;
    return mf;
}

GaussianRational BezoutKernel::u(const GaussianRational& x, const GaussianRational& t) const {
    const bool upper = (x.re() > t.re());
    return upper ? u_upper(x, t) : u_lower(x, t);
}

std::complex<double> BezoutKernel::u(double x, double t) const {
    return x > t ? u_upper(x, t) : u_lower(x, t);
}

BezoutKernel build_kernel(const NormalizedPair& pair, const GaussianRational& alpha,
                          const GaussianRational& beta) {
    const GaussianRational a(pair.a);
    const SPoly anti = antiderivative(kernel_integrand(pair));
    const BivariatePoly at_a = evaluate_at(anti, BivariatePoly::constant(a));
    const BivariatePoly at_t = evaluate_at(anti, BivariatePoly::linear(0, 0, 1));
    const BivariatePoly at_upper = evaluate_at(anti, BivariatePoly::linear(a, -1, 1));

    BezoutKernel k;
    k.a = pair.a;
    k.c = -(GaussianRational(1) / conj_alpha_plus_beta(alpha, beta));
    k.u_lower = at_a - at_t;
    k.u_upper = at_upper - at_t;
    return k;
}

GaussianRational kernel_value_direct(const NormalizedPair& pair, const Rational& x0, const Rational& t0) {
    const GaussianRational a(pair.a);
    const GaussianRational x(x0);
    const GaussianRational t(t0);
    const Poly g1 = pair.psi1.conj();
    // Integrand as a polynomial in s with (x, t) already fixed.
    const Poly first = pair.psi2.compose_linear(a, -1) * g1.compose_linear(a - x + t, -1);
    const Poly second = pair.psi2.compose_linear(x - t, 1) * g1;
    const Poly integrand = first - second;
    const GaussianRational hi = (x0 > t0) ? a + t - x : a;
    return integrand.definite_integral(t, hi);
}

Poly adjoint_of_one(const BezoutKernel& kernel) {
    // (T^* 1)(x) = conj(c) \int_0^a conj(U(t, x)) dt, with U(t, x) on t < x
    // taken from u_lower and on t > x from u_upper.
    const Poly x = Poly::monomial(1);
    const Poly zero;
    const Poly end = Poly::constant(GaussianRational(kernel.a));
    const Poly below = kernel.u_lower.swapped().conj().integrate_t(zero, x);
    const Poly above = kernel.u_upper.swapped().conj().integrate_t(x, end);
    return (below + above) * kernel.c.conj();
}

bool check_adjoint_identity(const BezoutKernel& kernel, const MFunctions& mf) {
    return adjoint_of_one(kernel) == poly_reflect(mf.m2, mf.a);
}

bool check_phi_difference(const MFunctions& mf) {
    const Poly phi21 = Poly::constant(1) - poly_reflect(mf.phi2, mf.a);
    const Poly lhs = mf.phi1 - phi21;
    const Poly rhs = poly_reflect(mf.m2, mf.a) * (mf.alpha + mf.beta.conj());
    return lhs == rhs;
}

KernelEnvelope::KernelEnvelope(const NormalizedPair& pair, int panels)
    : psi1_(pair.psi1), psi2_(pair.psi2), a_(pair.a.get_d()), panels_(panels) {}

double KernelEnvelope::operator()(double u) const {
    if (std::abs(u) > a_) return 0.0;
    // Both terms are supported where s and s+u (resp. a-s-u) stay in [0, a].
    const double lo = std::max(0.0, -u);
    const double hi = std::min(a_, a_ - u);
    if (hi <= lo) return 0.0;
    const auto integrand = [&](double s) {
        using C = std::complex<double>;
        const double first = std::abs(psi2_(C(a_ - s)) * std::conj(psi1_(C(a_ - s - u))));
        const double second = std::abs(psi2_(C(s + u)) * std::conj(psi1_(C(s))));
        return first + second;
    };
    return detail::integrate_composite<20>(integrand, lo, hi, panels_);
}

double KernelEnvelope::integral() const {
    const auto h = [this](double u) { return (*this)(u); };
    return detail::integrate_composite<20>(h, -a_, 0.0, panels_) +
           detail::integrate_composite<20>(h, 0.0, a_, panels_);
}

double KernelEnvelope::max_violation(const BezoutKernel& kernel, std::size_t n) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a_ * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = a_ * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            worst = std::max(worst, std::abs(kernel.u(x, t)) - (*this)(x - t));
        }
    }
    return worst;
}

KernelEnvelope kernel_bound(const NormalizedPair& pair) { return KernelEnvelope(pair); }

} // namespace bezout
