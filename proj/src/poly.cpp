#include "bezout/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bezout {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const GaussianRational& c) { return Poly(std::vector<GaussianRational>{c}); }

Poly Poly::monomial(unsigned power, const GaussianRational& c) {
    std::vector<GaussianRational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const GaussianRational& c0, const GaussianRational& c1) {
    return Poly(std::vector<GaussianRational>{c0, c1});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : GaussianRational{};
}

const GaussianRational& Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

GaussianRational Poly::operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const {
    std::complex<double> acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::complex<long double> Poly::operator()(std::complex<long double> x) const {
    std::complex<long double> acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex_ld();
    return acc;
}

Poly Poly::derivative(unsigned order) const {
    if (order == 0) return *this;
    if (static_cast<int>(order) > degree()) return {};
    std::vector<GaussianRational> out(coeffs_.size() - order);
    for (std::size_t k = order; k < coeffs_.size(); ++k) {
        // d^order/dt^order t^k = k!/(k-order)! t^(k-order)
        Rational falling(1);
        for (std::size_t m = 0; m < order; ++m) falling *= static_cast<long>(k - m);
        out[k - order] = coeffs_[k] * GaussianRational(falling);
    }
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<GaussianRational> out(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k + 1] = coeffs_[k] / GaussianRational(static_cast<long>(k + 1));
    }
    return Poly(std::move(out));
}

GaussianRational Poly::definite_integral(const GaussianRational& lo, const GaussianRational& hi) const {
    const Poly anti = antiderivative();
    return anti(hi) - anti(lo);
}

Poly Poly::conj() const {
    std::vector<GaussianRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.conj());
    return Poly(std::move(out));
}

Poly Poly::compose_linear(const GaussianRational& c0, const GaussianRational& c1) const {
    return compose(Poly::linear(c0, c1));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly operator/(Poly a, const GaussianRational& s) {
    for (auto& c : a.coeffs_) c /= s;
    return a;
}

Poly poly_reflect(const Poly& p, const Rational& a, bool conjugate) {
    // For real t, conj(p(a - t)) is the conjugate-coefficient polynomial at a - t.
    const Poly base = conjugate ? p.conj() : p;
    return base.compose_linear(GaussianRational(a), GaussianRational(-1));
}

std::string to_string(const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const auto& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        const bool compound = !c.is_real() && sgn(c.re()) != 0;
        if (compound) cs = "(" + cs + ")";
        if (!first) {
            if (cs.front() == '-') {
                os << " - ";
                cs.erase(0, 1);
            } else {
                os << " + ";
            }
        }
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") cs.clear();
            else if (cs == "-1") cs = "-";
            os << cs << var;
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- BivariatePoly

BivariatePoly::BivariatePoly(std::vector<std::vector<GaussianRational>> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

void BivariatePoly::trim() {
    for (auto& row : coeffs_) {
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    }
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

BivariatePoly BivariatePoly::constant(const GaussianRational& c) {
    return BivariatePoly({{c}});
}

BivariatePoly BivariatePoly::from_x(const Poly& p) {
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& c : p.coeffs()) rows.push_back({c});
    return BivariatePoly(std::move(rows));
}

BivariatePoly BivariatePoly::from_t(const Poly& p) { return BivariatePoly({p.coeffs()}); }

BivariatePoly BivariatePoly::linear(const GaussianRational& c0, const GaussianRational& cx,
                                    const GaussianRational& ct) {
    return BivariatePoly({{c0, ct}, {cx}});
}

int BivariatePoly::degree_t() const noexcept {
    int d = -1;
    for (const auto& row : coeffs_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

GaussianRational BivariatePoly::coeff(std::size_t i, std::size_t j) const {
    if (i >= coeffs_.size() || j >= coeffs_[i].size()) return {};
    return coeffs_[i][j];
}

GaussianRational BivariatePoly::operator()(const GaussianRational& x, const GaussianRational& t) const {
    return at_t(t)(x);
}

std::complex<double> BivariatePoly::operator()(double x, double t) const {
    std::complex<double> acc{};
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        std::complex<double> inner{};
        for (auto c = row->rbegin(); c != row->rend(); ++c) inner = inner * t + c->to_complex();
        acc = acc * x + inner;
    }
    return acc;
}

BivariatePoly BivariatePoly::partial_x(unsigned order) const {
    BivariatePoly out = swapped().partial_t(order);
    return out.swapped();
}

BivariatePoly BivariatePoly::partial_t(unsigned order) const {
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(coeffs_.size());
    for (const auto& row : coeffs_) rows.push_back(Poly(row).derivative(order).coeffs());
    return BivariatePoly(std::move(rows));
}

BivariatePoly BivariatePoly::swapped() const {
    const int dt = degree_t();
    if (dt < 0) return {};
    std::vector<std::vector<GaussianRational>> rows(static_cast<std::size_t>(dt) + 1,
                                                    std::vector<GaussianRational>(coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j) rows[j][i] = coeffs_[i][j];
    }
    return BivariatePoly(std::move(rows));
}

BivariatePoly BivariatePoly::conj() const {
    auto rows = coeffs_;
    for (auto& row : rows) {
        for (auto& c : row) c = c.conj();
    }
    return BivariatePoly(std::move(rows));
}

Poly BivariatePoly::at_x(const GaussianRational& x0) const {
    Poly acc;
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        acc *= x0;
        acc += Poly(*row);
    }
    return acc;
}

Poly BivariatePoly::at_t(const GaussianRational& t0) const {
    std::vector<GaussianRational> out;
    out.reserve(coeffs_.size());
    for (const auto& row : coeffs_) out.push_back(Poly(row)(t0));
    return Poly(std::move(out));
}

Poly BivariatePoly::substitute_t(const Poly& h) const {
    Poly acc;
    const Poly x = Poly::monomial(1);
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        acc = acc * x;
        acc += Poly(*row).compose(h);
    }
    return acc;
}

Poly BivariatePoly::integrate_t(const Poly& lo, const Poly& hi) const {
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(coeffs_.size());
    for (const auto& row : coeffs_) rows.push_back(Poly(row).antiderivative().coeffs());
    const BivariatePoly anti(std::move(rows));
    return anti.substitute_t(hi) - anti.substitute_t(lo);
}

Poly BivariatePoly::integrate_x(const Poly& lo, const Poly& hi) const {
    return swapped().integrate_t(lo, hi);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& row = coeffs_[i];
        if (o.coeffs_[i].size() > row.size()) row.resize(o.coeffs_[i].size());
        for (std::size_t j = 0; j < o.coeffs_[i].size(); ++j) row[j] += o.coeffs_[i][j];
    }
    trim();
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    return *this += o * GaussianRational(-1);
}

BivariatePoly& BivariatePoly::operator*=(const GaussianRational& s) {
    for (auto& row : coeffs_) {
        for (auto& c : row) c *= s;
    }
    trim();
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t nx = a.coeffs_.size() + b.coeffs_.size() - 1;
    const std::size_t nt = static_cast<std::size_t>(a.degree_t() + b.degree_t() + 1);
    std::vector<std::vector<GaussianRational>> out(nx, std::vector<GaussianRational>(nt));
    for (std::size_t i1 = 0; i1 < a.coeffs_.size(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.coeffs_[i1].size(); ++j1) {
            const auto& ca = a.coeffs_[i1][j1];
            if (ca.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.coeffs_.size(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.coeffs_[i2].size(); ++j2) {
                    out[i1 + i2][j1 + j2] += ca * b.coeffs_[i2][j2];
                }
            }
        }
    }
    return BivariatePoly(std::move(out));
}

BivariatePoly compose(const Poly& p, const BivariatePoly& inner) {
    BivariatePoly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * inner;
        acc += BivariatePoly::constant(*it);
    }
    return acc;
}

} // namespace bezout
