#include "bezout/symbol.hpp"

#include "bezout/errors.hpp"

#include <algorithm>
#include <utility>

namespace bezout {

namespace {

void require_ordered(const NormalizedPair& pair) {
    if (pair.psi1.degree() < pair.psi2.degree()) {
        throw OrderViolation("deg psi1 must be >= deg psi2 (got " + std::to_string(pair.psi1.degree()) +
                             " < " + std::to_string(pair.psi2.degree()) + ")");
    }
}

GaussianRational sign_pow(unsigned n) { return (n % 2 == 0) ? GaussianRational(1) : GaussianRational(-1); }

Rational rational_pow(const Rational& base, unsigned e) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Poly v_symbol(const NormalizedPair& pair) {
    require_ordered(pair);
    const auto q = static_cast<unsigned>(std::max(pair.psi1.degree(), 0));
    const GaussianRational zero;
    const GaussianRational end(pair.a);
    Poly v;
    for (unsigned p = 0; p <= q; ++p) {
        const unsigned k = q - p;
        // (-1)^{k+1} Psi2^{(p)}(u) conj(Psi1^{(k)}(0))
        const GaussianRational left_const = sign_pow(k + 1) * pair.psi1.derivative(k)(zero).conj();
        v += pair.psi2.derivative(p) * left_const;
        // Psi2^{(k)}(a) conj(Psi1^{(p)}(a - u)) (-1)^p
        const GaussianRational right_const = pair.psi2.derivative(k)(end) * sign_pow(p);
        v += poly_reflect(pair.psi1.derivative(p), pair.a) * right_const;
    }
    return v;
}

DiffOperator l_operator(const NormalizedPair& pair) {
    require_ordered(pair);
    const int q = pair.psi1.degree();
    const GaussianRational zero;
    const GaussianRational end(pair.a);
    std::vector<GaussianRational> coeffs(q > 0 ? static_cast<std::size_t>(q) : 0U);
    // p + k + s = Q - 1
    for (int p = 0; p <= q - 1; ++p) {
        for (int k = 0; p + k <= q - 1; ++k) {
            const int s = q - 1 - p - k;
            const auto up = static_cast<unsigned>(p);
            const auto uk = static_cast<unsigned>(k);
            const GaussianRational at_zero = sign_pow(uk + 1) * pair.psi2.derivative(up)(zero) *
                                             pair.psi1.derivative(uk)(zero).conj();
            const GaussianRational at_end = pair.psi2.derivative(uk)(end) *
                                            pair.psi1.derivative(up)(end).conj() * sign_pow(up);
            coeffs[static_cast<std::size_t>(s)] += at_zero + at_end;
        }
    }
    return DiffOperator{Poly(std::move(coeffs))};
}

MonomialOrder monomial_order(unsigned m1, unsigned n1, unsigned m2, unsigned n2, const Rational& a) {
    if (m1 + n1 < m2 + n2) throw OrderViolation("monomial pair requires m1 + n1 >= m2 + n2");
    if (n1 == m2 && m1 == n2) {
        throw CoincidenceCase("n1 == m2 and m1 == n2: zero sets coincide, order rule does not apply");
    }
    MonomialOrder out;
    out.r_zero_end = static_cast<int>(n1) - static_cast<int>(m2) - 1;
    out.r_a_end = static_cast<int>(m1) - static_cast<int>(n2) - 1;
    out.r = std::max(out.r_zero_end, out.r_a_end);
    out.tie = (out.r_zero_end == out.r_a_end);

    const unsigned q = m1 + n1;
    const Rational b1 = sign_pow(q + 1).re() * rational_pow(a, n1 + n2) * factorial(m2) * factorial(m1);
    const Rational b2 = sign_pow(n2).re() * rational_pow(a, m1 + m2) * factorial(n2) * factorial(n1);
    if (out.tie) {
        out.leading = b1 + b2;
        if (sgn(out.leading) == 0) {
            throw InternalConsistency("tied boundary orders produced B1 + B2 = 0 for (m1,n1,m2,n2) = (" +
                                      std::to_string(m1) + "," + std::to_string(n1) + "," +
                                      std::to_string(m2) + "," + std::to_string(n2) + ")");
        }
    } else {
        out.leading = out.r_zero_end > out.r_a_end ? b1 : b2;
    }
    return out;
}

DensityPoly monomial_density(unsigned m, unsigned n, const Rational& a) {
    Poly p = Poly::monomial(m);
    const Poly factor = Poly::linear(GaussianRational(a), -1);
    for (unsigned k = 0; k < n; ++k) p = p * factor;
    return p;
}

std::string to_string(CoeffClass c) {
    return c == CoeffClass::Rational ? "rational" : "nonalgebraic-float";
}

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::NoCommonZeros: return "NoCommonZeros";
    case Outcome::ZeroSetsCoincide: return "ZeroSetsCoincide";
    default: return "Inconclusive";
    }
}

CoeffClass parse_coeff_class(const std::string& text) {
    if (text == "rational") return CoeffClass::Rational;
    if (text == "nonalgebraic-float") return CoeffClass::NonalgebraicFloat;
    throw ParseError("unknown coeff_class \"" + text + "\" (expected rational or nonalgebraic-float)");
}

bool is_coincidence(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a) {
    return psi1 == poly_reflect(psi2, a);
}

Verdict decide(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a, CoeffClass coeff_class) {
    Verdict v;
    v.coeff_class = coeff_class;
    v.swapped = psi1.degree() < psi2.degree();
    const DensityPoly& first = v.swapped ? psi2 : psi1;
    const DensityPoly& second = v.swapped ? psi1 : psi2;

    NormalizedPair pair;
    try {
        pair = normalize_pair(first, second, a);
    } catch (const ZeroMass& e) {
        v.outcome = Outcome::Inconclusive;
        v.reason = std::string("ZeroMass: ") + e.what();
        return v;
    }
    v.r1 = pair.r1;
    v.r2 = pair.r2;

    // F1 has no real zeros and no conjugate pairs exactly when the pair
    // (Psi1, Psi1) is coincidence-free and itself decidable.
    const bool self_symmetric = is_coincidence(pair.psi1, pair.psi1, a);
    bool self_decidable = !self_symmetric;
    if (self_decidable && coeff_class == CoeffClass::NonalgebraicFloat) {
        NormalizedPair self = pair;
        self.psi2 = pair.psi1;
        self_decidable = !v_symbol(self).is_zero();
    }
    v.no_real_zeros = self_decidable;
    v.no_conjugate_pairs = self_decidable;

    // Tested on unit-mass densities: a constant factor does not move zeros.
    v.coincidence = is_coincidence(pair.psi1, pair.psi2, a);
    if (v.coincidence) {
        v.outcome = Outcome::ZeroSetsCoincide;
        v.criterion = criterion::kCoincidence;
        return v;
    }

    const Poly symbol = v_symbol(pair);
    const DiffOperator op = l_operator(pair);
    v.v_zero = symbol.is_zero();
    v.order = op.order();

    if (coeff_class == CoeffClass::Rational) {
        v.outcome = Outcome::NoCommonZeros;
        v.criterion = op.is_zero_operator() ? criterion::kZeroOperator : criterion::kNonnegativeOrder;
        return v;
    }
    if (!symbol.is_zero()) {
        v.outcome = Outcome::NoCommonZeros;
        v.criterion = criterion::kNonvanishingSymbol;
        return v;
    }
    v.outcome = Outcome::Inconclusive;
    v.reason = "SymbolVanishes: V is identically zero and the coefficients are not declared algebraic";
    return v;
}

} // namespace bezout
