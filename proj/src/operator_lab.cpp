#include "bezout/operator_lab.hpp"

#include <cmath>
#include <stdexcept>

namespace bezout {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI(0.0, 1.0);

Eigen::MatrixXcd weighted(const Eigen::MatrixXcd& m, const Grid& grid) {
    Eigen::MatrixXcd out = m;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            out(i, j) *= std::sqrt(grid.weights[static_cast<std::size_t>(i)] /
                                   grid.weights[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

Eigen::MatrixXcd kernel_matrix(const BezoutKernel& kernel, const Grid& grid) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    const cplx c = kernel.c.to_complex();
    Eigen::MatrixXcd t(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            t(i, j) = c * kernel.u(grid.nodes[ui], grid.nodes[uj]) * grid.weights[uj];
        }
    }
    return t;
}

} // namespace

Grid Grid::midpoint(double a, std::size_t n) {
    if (n < 1) throw std::invalid_argument("midpoint grid needs at least one node");
    if (!(a > 0.0)) throw std::invalid_argument("grid length must be positive");
    Grid g;
    g.a = a;
    g.rule = Rule::Midpoint;
    const double h = a / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        g.nodes.push_back(h * (static_cast<double>(k) + 0.5));
        g.weights.push_back(h);
    }
    return g;
}

Grid Grid::trapezoid(double a, std::size_t n) {
    if (n < 2) throw std::invalid_argument("trapezoid grid needs at least two nodes");
    if (!(a > 0.0)) throw std::invalid_argument("grid length must be positive");
    Grid g;
    g.a = a;
    g.rule = Rule::Trapezoid;
    const double h = a / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        g.nodes.push_back(k + 1 == n ? a : h * static_cast<double>(k));
        g.weights.push_back((k == 0 || k + 1 == n) ? 0.5 * h : h);
    }
    return g;
}

OperatorSet discretize_all(const NormalizedPair& pair, const BezoutKernel& kernel, const MFunctions& mf,
                           const Grid& grid) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    const double a = pair.a.get_d();

    OperatorSet ops;
    ops.grid = grid;
    ops.t = {"T", kernel_matrix(kernel, grid)};

    // Cumulative rules for \int_0^{x_i} and \int_{x_i}^a.
    Eigen::MatrixXcd cum_lower = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd cum_upper = Eigen::MatrixXcd::Zero(n, n);
    if (grid.rule == Grid::Rule::Trapezoid) {
        const double h = a / static_cast<double>(n - 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j <= i && i > 0; ++j) cum_lower(i, j) = (j == 0 || j == i) ? 0.5 * h : h;
            for (Eigen::Index j = i; j < n && i < n - 1; ++j)
                cum_upper(i, j) = (j == i || j == n - 1) ? 0.5 * h : h;
        }
    } else {
        // Whole cells by the midpoint rule, the half cell at x_i by a one-point rule.
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const double w = grid.weights[static_cast<std::size_t>(j)];
                if (j < i) cum_lower(i, j) = w;
                else if (j > i) cum_upper(i, j) = w;
                else cum_lower(i, j) = cum_upper(i, j) = 0.5 * w;
            }
        }
    }
    ops.a = {"A", kI * cum_lower};
    const Eigen::MatrixXcd a_adjoint = -kI * cum_upper;

    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(n);
    Eigen::RowVectorXcd p1_star(n);
    Eigen::RowVectorXcd p2_star(n);
    Eigen::RowVectorXcd pi_star(n);
    Eigen::VectorXcd p2(n);
    ops.n1.resize(n);
    ops.n2.resize(n);
    Eigen::RowVectorXcd n1_star(n);
    const cplx scale = -kI * (mf.alpha.conj() + mf.beta).to_complex();
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const cplx x(grid.nodes[uj]);
        const double w = grid.weights[uj];
        p1_star(j) = -kI * w * std::conj(mf.phi1(x));
        p2_star(j) = -kI * w * std::conj(mf.phi2(x));
        pi_star(j) = w;
        p2(j) = kI * mf.phi2(x);
        const cplx m2_reflected = mf.m2(cplx(a) - x);
        ops.n1(j) = std::conj(m2_reflected);
        ops.n2(j) = scale * mf.m2(x);
        n1_star(j) = w * m2_reflected;
    }
    ops.b1 = {"B1", ops.a.matrix + ones * p1_star};
    ops.b2 = {"B2", ops.a.matrix + ones * p2_star};
    ops.b2_adjoint = {"B2*", a_adjoint + p2 * pi_star};
    ops.n2n1 = {"N2N1*", ops.n2 * n1_star};
    return ops;
}

double hilbert_schmidt_norm(const Eigen::MatrixXcd& m, const Grid& grid) {
    return weighted(m, grid).norm();
}

double spectral_norm(const Eigen::MatrixXcd& m, const Grid& grid) {
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(weighted(m, grid));
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

IdentityResidual identity_residual(const OperatorSet& ops) {
    const Eigen::MatrixXcd r =
        ops.t.matrix * ops.b1.matrix - ops.b2_adjoint.matrix * ops.t.matrix - ops.n2n1.matrix;
    IdentityResidual out;
    out.n = ops.grid.size();
    out.hilbert_schmidt = hilbert_schmidt_norm(r, ops.grid);
    out.spectral = spectral_norm(r, ops.grid);
    return out;
}

ResidualStudy residual_study(const NormalizedPair& pair, const std::vector<std::size_t>& sizes, Grid::Rule rule) {
    const MFunctions mf = build_m_functions(pair);
    const BezoutKernel kernel = build_kernel(pair);
    ResidualStudy study;
    for (std::size_t n : sizes) {
        const double a = pair.a.get_d();
        const Grid grid = rule == Grid::Rule::Midpoint ? Grid::midpoint(a, n) : Grid::trapezoid(a, n);
        study.runs.push_back(identity_residual(discretize_all(pair, kernel, mf, grid)));
    }
    for (std::size_t k = 0; k + 1 < study.runs.size(); ++k) {
        const double next = study.runs[k + 1].hilbert_schmidt;
        study.ratios.push_back(next > 0.0 ? study.runs[k].hilbert_schmidt / next : 0.0);
    }
    return study;
}

double apply_to_exponential(const BezoutKernel& kernel, std::complex<double> z, const Grid& grid) {
    const auto n = static_cast<Eigen::Index>(grid.size());
    Eigen::VectorXcd f(n);
    for (Eigen::Index j = 0; j < n; ++j) f(j) = std::exp(kI * z * grid.nodes[static_cast<std::size_t>(j)]);
    const Eigen::VectorXcd v = kernel_matrix(kernel, grid) * f;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += grid.weights[static_cast<std::size_t>(i)] * std::norm(v(i));
    return std::sqrt(acc);
}

} // namespace bezout
