#include "bezout/rational.hpp"

#include "bezout/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bezout {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t pos = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_literal(s)) {
        throw ParseError("malformed rational literal \"" + std::string(whole) + "\"");
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

long double to_long_double(const Rational& q) {
    // 128-bit float keeps the split hi + lo exact to long double precision.
    mpf_class f(q, 128);
    const double hi = f.get_d();
    mpf_class rest = f - hi;
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("denominator must be an unsigned integer in \"" + std::string(text) + "\"");
    }
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw ParseError("non-finite coefficient");
    Rational q(value); // exact for binary doubles
    return q;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("GaussianRational division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.get_d(), im_.get_d()};
}

std::complex<long double> GaussianRational::to_complex_ld() const {
    return {to_long_double(re_), to_long_double(im_)};
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::string to_string(const GaussianRational& q) {
    if (q.is_real()) return to_string(q.re());
    std::string im = to_string(q.im());
    if (sgn(q.re()) == 0) return im + "i";
    if (im.front() != '-') im = "+" + im;
    return to_string(q.re()) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
    return os << to_string(q);
}

} // namespace bezout
