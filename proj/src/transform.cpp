#include "bezout/transform.hpp"

#include "bezout/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bezout {

namespace {

// Exponent beyond which e^{a |Im z|} leaves double range.
constexpr double kMaxExponent = 700.0;

// (-i)^n
GaussianRational minus_i_pow(unsigned n) {
    switch (n % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(-1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(1)};
    }
}

GaussianRational i_pow(unsigned n) { return minus_i_pow(n).conj(); }

// Smallest radius at which the Laurent sum loses at most ~3 digits to
// cancellation: the largest term scales like (Q+1)!/(a|z|)^{Q+1} against
// |F| ~ a^{Q+1}/(Q+1).
double choose_series_radius(int degree, double a) {
    const double n = static_cast<double>(degree + 1);
    const double log_fact = std::lgamma(n + 1.0);
    const double r = std::exp((log_fact - std::log(1e3)) / n) / a;
    return std::max(0.5, r);
}

std::size_t choose_moment_count(int degree, double a, double radius) {
    const auto q = static_cast<std::size_t>(std::max(degree, 0));
    const auto taylor = static_cast<std::size_t>(std::ceil(std::exp(1.0) * a * radius)) + 40;
    return std::max(q + 32, taylor);
}

std::complex<long double> horner_inverse(const std::vector<std::complex<long double>>& c,
                                         std::complex<long double> w) {
    // sum_{j=1..N} c[j-1] w^j
    std::complex<long double> acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc + *it) * w;
    return acc;
}

} // namespace

ClosedTransform ClosedTransform::of_integrand(const Poly& integrand, const Rational& a) {
    if (sgn(a) <= 0) throw std::invalid_argument("transform endpoint a must be positive");
    ClosedTransform f;
    f.a_ = a;
    f.integrand_ = integrand;

    // Repeated integration by parts:
    //   \int e^{izt} g = e^{izt} sum_k (-1)^k g^{(k)}(t) / (iz)^{k+1}.
    const int deg = integrand.degree();
    const GaussianRational end(a);
    Poly dk = integrand;
    for (int k = 0; k <= deg; ++k) {
        const GaussianRational sign = (k % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
        const GaussianRational scale = sign * minus_i_pow(static_cast<unsigned>(k + 1));
        f.osc_.push_back(scale * dk(end));
        f.plain_.push_back(-(scale * dk(GaussianRational(0))));
        dk = dk.derivative();
    }

    f.series_radius_ = choose_series_radius(deg, a.get_d());
    const std::size_t count = choose_moment_count(deg, a.get_d(), f.series_radius_);
    f.moments_.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        // mu_n = sum_p g_p a^{n+p+1} / (n+p+1)
        GaussianRational mu;
        for (std::size_t p = 0; p < integrand.coeffs().size(); ++p) {
            const auto e = static_cast<unsigned long>(n + p + 1);
            Rational apow;
            mpz_class num;
            mpz_class den;
            mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
            mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
            const mpz_class scaled_den = den * e;
            apow = Rational(num, scaled_den);
            apow.canonicalize();
            mu += integrand.coeffs()[p] * GaussianRational(apow);
        }
        f.moments_.push_back(std::move(mu));
    }
    f.cache_floats();
    return f;
}

void ClosedTransform::cache_floats() {
    a_ld_ = GaussianRational(a_).to_complex_ld().real();
    osc_f_.clear();
    plain_f_.clear();
    taylor_f_.clear();
    for (const auto& c : osc_) osc_f_.push_back(c.to_complex_ld());
    for (const auto& c : plain_) plain_f_.push_back(c.to_complex_ld());
    for (std::size_t n = 0; n < moments_.size(); ++n) {
        const GaussianRational c = i_pow(static_cast<unsigned>(n)) * moments_[n] /
                                   GaussianRational(factorial(static_cast<unsigned>(n)));
        taylor_f_.push_back(c.to_complex_ld());
    }
}

std::complex<double> ClosedTransform::operator()(std::complex<double> z) const {
    if (std::abs(z) < series_radius_) return eval_series(z);
    return eval_laurent(z);
}

std::complex<double> ClosedTransform::eval_laurent(std::complex<double> z) const {
    const long double growth = -a_ld_ * static_cast<long double>(z.imag());
    if (growth > kMaxExponent) {
        throw EvaluationOverflow("e^{iaz} overflows double range at Im z = " + std::to_string(z.imag()));
    }
    const std::complex<long double> zl(z.real(), z.imag());
    const std::complex<long double> w = 1.0L / zl;
    const std::complex<long double> phase = std::exp(std::complex<long double>(0.0L, 1.0L) * a_ld_ * zl);
    const std::complex<long double> value = phase * horner_inverse(osc_f_, w) + horner_inverse(plain_f_, w);
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

std::complex<double> ClosedTransform::eval_series(std::complex<double> z) const {
    const std::complex<long double> zl(z.real(), z.imag());
    std::complex<long double> acc{};
    for (auto it = taylor_f_.rbegin(); it != taylor_f_.rend(); ++it) acc = acc * zl + *it;
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

ClosedTransform ClosedTransform::derivative() const {
    // F' is the transform of i t g(t); moments come from that integrand, the
    // Laurent parts from differentiating e^{iaz} sum p_j z^{-j} + sum q_j z^{-j}.
    const Poly new_integrand = Poly::monomial(1, GaussianRational::i()) * integrand_;
    ClosedTransform d = of_integrand(new_integrand, a_);
    if (osc_.empty()) return d;

    const GaussianRational ia = GaussianRational::i() * GaussianRational(a_);
    const std::size_t n = osc_.size();
    std::vector<GaussianRational> osc(n + 1);
    std::vector<GaussianRational> plain(n + 1);
    for (std::size_t j = 1; j <= n + 1; ++j) {
        if (j <= n) osc[j - 1] += ia * osc_[j - 1];
        if (j >= 2) {
            const GaussianRational jm1(static_cast<long>(j - 1));
            osc[j - 1] -= jm1 * osc_[j - 2];
            plain[j - 1] -= jm1 * plain_[j - 2];
        }
    }
    d.osc_ = std::move(osc);
    d.plain_ = std::move(plain);
    d.cache_floats();
    return d;
}

std::complex<double> TrigForm::eval_scaled(std::complex<double> z) const {
    const std::complex<double> az = a.get_d() * z;
    return p(z) * std::cos(az) + q(z) * std::sin(az) + r(z);
}

ClosedTransform closed_form(const DensityPoly& psi, const Rational& a) {
    return ClosedTransform::of_integrand(psi.conj(), a);
}

ClosedTransform reflected_transform(const DensityPoly& psi2, const Rational& a) {
    return ClosedTransform::of_integrand(poly_reflect(psi2, a, /*conjugate=*/false), a);
}

ClosedTransform derivative_transform(const DensityPoly& psi, const Rational& a) {
    const Poly weighted = Poly::monomial(1, -GaussianRational::i()) * psi;
    return closed_form(weighted, a);
}

std::complex<double> eval_transform(const ClosedTransform& f, std::complex<double> z) { return f(z); }

TrigForm trig_form(const ClosedTransform& f) {
    // z^N F = e^{iaz} P0(z) + R(z) with P0 = sum_j p_j z^{N-j};
    // e^{iaz} = cos(az) + i sin(az) gives P = P0, Q = i P0.
    const auto n = static_cast<std::size_t>(f.laurent_order());
    std::vector<GaussianRational> p(n);
    std::vector<GaussianRational> r(n);
    for (std::size_t j = 1; j <= n; ++j) {
        p[n - j] = f.osc()[j - 1];
        r[n - j] = f.plain()[j - 1];
    }
    TrigForm t;
    t.a = f.a();
    t.p = Poly(std::move(p));
    t.q = t.p * GaussianRational::i();
    t.r = Poly(std::move(r));
    t.scale_power = static_cast<int>(n);
    return t;
}

} // namespace bezout
