#pragma once

#include "bezout/bezoutiant.hpp"
#include "bezout/poly.hpp"

#include <optional>
#include <string>

namespace bezout {

/// L(D) = sum_s coeffs[s] D^s. An empty coefficient list is the zero operator.
struct DiffOperator {
    Poly coeffs;

    bool is_zero_operator() const { return coeffs.is_zero(); }
    /// Highest s with a nonzero coefficient; -1 for the zero operator.
    int order() const { return coeffs.degree(); }
};

/// Convolution symbol V(u). Requires deg psi1 >= deg psi2 (OrderViolation).
Poly v_symbol(const NormalizedPair& pair);

/// Differential part L(D) of the (Q+1)-th derivative of T f.
/// Requires deg psi1 >= deg psi2 (OrderViolation).
DiffOperator l_operator(const NormalizedPair& pair);

/// Order of L(D) for the monomial family Psi_k = x^{m_k} (a-x)^{n_k} as given
/// by the closed-form order rule.
struct MonomialOrder {
    int r = 0;
    int r_zero_end = 0; ///< n1 - m2 - 1, from the x = 0 boundary terms
    int r_a_end = 0;    ///< m1 - n2 - 1, from the x = a boundary terms
    bool tie = false;
    /// Predicted D^r coefficient: B1 + B2 on a tie, otherwise the dominant B.
    Rational leading;
};

/// Throws CoincidenceCase when n1 == m2 and m1 == n2, OrderViolation when
/// m1 + n1 < m2 + n2, InternalConsistency when a tie yields B1 + B2 == 0.
MonomialOrder monomial_order(unsigned m1, unsigned n1, unsigned m2, unsigned n2, const Rational& a);

/// x^m (a - x)^n
DensityPoly monomial_density(unsigned m, unsigned n, const Rational& a);

enum class CoeffClass { Rational, NonalgebraicFloat };
enum class Outcome { NoCommonZeros, ZeroSetsCoincide, Inconclusive };

std::string to_string(CoeffClass c);
std::string to_string(Outcome o);
CoeffClass parse_coeff_class(const std::string& text);

/// Criterion identifiers carried by a Verdict.
namespace criterion {
inline constexpr const char* kCoincidence = "reflection-coincidence";
inline constexpr const char* kNonnegativeOrder = "algebraic-coefficients-nonnegative-order";
inline constexpr const char* kZeroOperator = "algebraic-coefficients-zero-operator";
inline constexpr const char* kNonvanishingSymbol = "nonvanishing-symbol";
inline constexpr const char* kNone = "none";
} // namespace criterion

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::string criterion = criterion::kNone;
    /// Claims about F1 of the (possibly swapped) pair.
    bool no_real_zeros = false;
    bool no_conjugate_pairs = false;

    // diagnostics
    CoeffClass coeff_class = CoeffClass::Rational;
    bool swapped = false;
    bool coincidence = false;
    std::optional<int> order;           ///< order r of L(D); -1 means zero operator
    std::optional<bool> v_zero;         ///< V identically zero
    std::optional<GaussianRational> r1; ///< masses of the (swapped) pair
    std::optional<GaussianRational> r2;
    std::string reason; ///< machine-readable reason for Inconclusive
};

/// Exact test psi1(x) == conj(psi2(a - x)).
bool is_coincidence(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a);

Verdict decide(const DensityPoly& psi1, const DensityPoly& psi2, const Rational& a,
               CoeffClass coeff_class = CoeffClass::Rational);

} // namespace bezout
