#include "swapengine/collision.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace swapengine {

namespace {

using cd = std::complex<double>;

void require_swap_parameter(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::XOutOfRange, "swap parameter must lie in [0, 1], got " + std::to_string(x));
    }
}

void require_oracle_levels(std::size_t n) {
    if (n < 2 || n > kMaxOracleLevels) {
        throw Error(ErrorCode::DimMismatch,
                    "unitary oracle supports 2..16 levels, got " + std::to_string(n));
    }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw Error(ErrorCode::InvalidDensityMatrix, "density matrix must be square and non-empty");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kMatrixTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, "density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cd(1.0, 0.0)) > kMatrixTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, "density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kMatrixTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, "density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::diagonal(const Population& p) {
    ComplexMatrix rho = ComplexMatrix::Zero(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) rho(i, i) = p[i];
    return DensityMatrix(std::move(rho));
}

Population DensityMatrix::populations() const {
    std::vector<double> d(dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = rho_(i, i).real();
    return Population(std::move(d));
}

TwoParticleUnitary::TwoParticleUnitary(ComplexMatrix u, std::size_t levels, GeneratorKind kind,
                                       Eigen::MatrixXd phi)
    : u_(std::move(u)), levels_(levels), kind_(kind), phi_(std::move(phi)) {
    const auto dim = static_cast<Eigen::Index>(levels_ * levels_);
    if (u_.rows() != dim || u_.cols() != dim) {
        throw Error(ErrorCode::DimMismatch, "two-particle unitary must be N^2 x N^2");
    }
    const ComplexMatrix defect = u_ * u_.adjoint() - ComplexMatrix::Identity(dim, dim);
    if (defect.cwiseAbs().maxCoeff() > kMatrixTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, "collision operator is not unitary");
    }
}

std::pair<DensityMatrix, DensityMatrix> density_swap(double x, const DensityMatrix& rho_s,
                                                     const DensityMatrix& rho_b) {
    require_swap_parameter(x);
    if (rho_s.dim() != rho_b.dim()) throw Error(ErrorCode::DimMismatch, "density swap dimensions differ");
    const ComplexMatrix change = x * (rho_b.matrix() - rho_s.matrix());
    return {DensityMatrix(rho_s.matrix() + change), DensityMatrix(rho_b.matrix() - change)};
}

std::pair<Population, Population> population_swap(double x, const Population& p_s,
                                                  const Population& p_b) {
    require_swap_parameter(x);
    if (p_s.size() != p_b.size()) throw Error(ErrorCode::DimMismatch, "population swap lengths differ");
    std::vector<double> s(p_s.size());
    std::vector<double> b(p_s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double change = x * (p_b[i] - p_s[i]);
        s[i] = p_s[i] + change;
        b[i] = p_b[i] - change;
    }
    return {Population(std::move(s)), Population(std::move(b))};
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
    // Scale until the 1-norm is below 1/2, Taylor-expand, square back.
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);

    const auto n = a.rows();
    ComplexMatrix result = ComplexMatrix::Identity(n, n);
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    for (int k = 1; k <= 24; ++k) {
        term = term * scaled / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& joint, std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            for (Eigen::Index k = 0; k < m; ++k) out(i, j) += joint(i * m + k, j * m + k);
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& joint, std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            for (Eigen::Index k = 0; k < m; ++k) out(i, j) += joint(k * m + i, k * m + j);
    return out;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double lambda : eig.eigenvalues()) {
        if (lambda > 1e-300) s -= lambda * std::log(lambda);
    }
    return std::max(s, 0.0);
}

TwoParticleUnitary qubit_swap_unitary(double phi) {
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, cd(0, -1), cd(0, 1), 0;
    sz << 1, 0, 0, -1;
    const ComplexMatrix generator = kron(sx, sx) + kron(sy, sy) + kron(sz, sz);
    ComplexMatrix u = matrix_exponential(cd(0.0, -0.5 * phi) * generator);
    Eigen::MatrixXd angle(1, 1);
    angle(0, 0) = phi;
    return TwoParticleUnitary(std::move(u), 2, GeneratorKind::QubitSigma, std::move(angle));
}

TwoParticleUnitary multilevel_swap_unitary(std::size_t n, const Eigen::MatrixXd& phi) {
    require_oracle_levels(n);
    const auto m = static_cast<Eigen::Index>(n);
    if (phi.rows() != m || phi.cols() != m) {
        throw Error(ErrorCode::DimMismatch, "phi must be N x N");
    }
    if ((phi - phi.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw Error(ErrorCode::AsymmetricPhi, "phi must be symmetric");
    }
    ComplexMatrix u = ComplexMatrix::Zero(m * m, m * m);
    for (Eigen::Index i = 0; i < m; ++i) {
        u(i * m + i, i * m + i) = std::exp(cd(0.0, -phi(i, i)));
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const Eigen::Index a = i * m + j;
            const Eigen::Index b = j * m + i;
            const double c = std::cos(phi(i, j));
            const cd s(0.0, -std::sin(phi(i, j)));
            u(a, a) = c;
            u(b, b) = c;
            u(a, b) = s;
            u(b, a) = s;
        }
    }
    return TwoParticleUnitary(std::move(u), n, GeneratorKind::MultilevelPhase, phi);
}

TwoParticleUnitary multilevel_swap_unitary(std::size_t n, double phi) {
    require_oracle_levels(n);
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd angles = Eigen::MatrixXd::Constant(m, m, phi);
    angles.diagonal().setZero();
    return multilevel_swap_unitary(n, angles);
}

CollisionResult collide(const TwoParticleUnitary& u, const DensityMatrix& rho1,
                        const DensityMatrix& rho2) {
    const std::size_t n = u.levels();
    if (rho1.dim() != n || rho2.dim() != n) {
        throw Error(ErrorCode::DimMismatch, "collision input dimensions do not match the unitary");
    }
    const ComplexMatrix joint = u.matrix() * kron(rho1.matrix(), rho2.matrix()) * u.matrix().adjoint();
    ComplexMatrix r1 = partial_trace_second(joint, n);
    ComplexMatrix r2 = partial_trace_first(joint, n);
    // Symmetrize away rounding before validation.
    r1 = 0.5 * (r1 + r1.adjoint()).eval();
    r2 = 0.5 * (r2 + r2.adjoint()).eval();
    const double s_in = von_neumann_entropy(rho1.matrix()) + von_neumann_entropy(rho2.matrix());
    return CollisionResult{DensityMatrix(std::move(r1)), DensityMatrix(std::move(r2)),
                           JointState{joint, n, s_in}};
}

CollisionCorrelations collision_correlations(const JointState& joint) {
    const double s1 = von_neumann_entropy(partial_trace_second(joint.rho, joint.levels));
    const double s2 = von_neumann_entropy(partial_trace_first(joint.rho, joint.levels));
    const double s12 = von_neumann_entropy(joint.rho);
    return CollisionCorrelations{s1 + s2 - s12, s1 + s2 - joint.input_entropy};
}

}  // namespace swapengine
