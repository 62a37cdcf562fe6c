#pragma once

#include "bezout/bezoutiant.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace bezout {

/// Quadrature grid on [0, a]; weights sum to a.
struct Grid {
    enum class Rule { Midpoint, Trapezoid };

    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 1.0;
    Rule rule = Rule::Midpoint;

    std::size_t size() const noexcept { return nodes.size(); }
    /// n cell midpoints, all interior to [0, a].
    static Grid midpoint(double a, std::size_t n);
    /// n uniform nodes with both endpoints.
    static Grid trapezoid(double a, std::size_t n);
};

/// Nystrom matrix acting on values at the grid nodes.
struct DiscretizedOperator {
    std::string label;
    Eigen::MatrixXcd matrix;
};

struct OperatorSet {
    Grid grid;
    DiscretizedOperator t;         ///< Bezoutiant, c U(x_i, t_j) w_j
    DiscretizedOperator a;         ///< i \int_0^x
    DiscretizedOperator b1;        ///< A + Pi P1^*
    DiscretizedOperator b2;        ///< A + Pi P2^*
    DiscretizedOperator b2_adjoint; ///< A^* + P2 Pi^*, assembled directly
    DiscretizedOperator n2n1;      ///< rank-one N2 N1^*
    Eigen::VectorXcd n1;           ///< conj(M2(a - x))
    Eigen::VectorXcd n2;           ///< -i (conj(alpha) + beta) M2(x)
};

/// Kernel and M-functions must come from the same pair and (alpha, beta).
OperatorSet discretize_all(const NormalizedPair& pair, const BezoutKernel& kernel, const MFunctions& mf,
                           const Grid& grid);

/// L^2(0,a)-consistent norms of a Nystrom matrix: Hilbert-Schmidt
/// sqrt(sum w_i |M_ij|^2 / w_j) and the spectral norm of W^{1/2} M W^{-1/2}.
double hilbert_schmidt_norm(const Eigen::MatrixXcd& m, const Grid& grid);
double spectral_norm(const Eigen::MatrixXcd& m, const Grid& grid);

struct IdentityResidual {
    std::size_t n = 0;
    double hilbert_schmidt = 0.0;
    double spectral = 0.0;
};

/// Norms of T B1 - B2^* T - N2 N1^*.
IdentityResidual identity_residual(const OperatorSet& ops);

struct ResidualStudy {
    std::string norm_type = "hilbert-schmidt";
    std::vector<IdentityResidual> runs;
    /// residual(n_k) / residual(n_{k+1}) in the reported norm.
    std::vector<double> ratios;
};

/// Identity residual across grid sizes (default alpha = 1, beta = 0).
ResidualStudy residual_study(const NormalizedPair& pair, const std::vector<std::size_t>& sizes,
                             Grid::Rule rule = Grid::Rule::Midpoint);

/// Weighted grid 2-norm of T applied to x -> e^{izx}.
double apply_to_exponential(const BezoutKernel& kernel, std::complex<double> z, const Grid& grid);

} // namespace bezout
