#pragma once

// Partial-swap collision rules and the exact two-particle unitary collision
// used to verify them.

#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "swapengine/statekit.hpp"

namespace swapengine {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kMatrixTolerance = 1e-10;
inline constexpr std::size_t kMaxOracleLevels = 16;

/// Hermitian, unit-trace, positive semidefinite N x N matrix.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix rho);

    static DensityMatrix diagonal(const Population& p);

    const ComplexMatrix& matrix() const { return rho_; }
    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
    /// Real diagonal as a Population.
    Population populations() const;

private:
    ComplexMatrix rho_;
};

enum class GeneratorKind { QubitSigma, MultilevelPhase };

/// Unitary acting on two N-level particles, basis |ij> at index i*N + j.
class TwoParticleUnitary {
public:
    TwoParticleUnitary(ComplexMatrix u, std::size_t levels, GeneratorKind kind,
                       Eigen::MatrixXd phi);

    const ComplexMatrix& matrix() const { return u_; }
    std::size_t levels() const { return levels_; }
    GeneratorKind kind() const { return kind_; }
    /// Swap angles: 1x1 for the qubit generator, N x N for the phase generator.
    const Eigen::MatrixXd& phi() const { return phi_; }

private:
    ComplexMatrix u_;
    std::size_t levels_;
    GeneratorKind kind_;
    Eigen::MatrixXd phi_;
};

/// Post-collision joint state of the two particles.
struct JointState {
    ComplexMatrix rho;
    std::size_t levels;
    /// S(rho_1) + S(rho_2) of the product input.
    double input_entropy;
};

struct CollisionResult {
    DensityMatrix first;
    DensityMatrix second;
    JointState joint;
};

struct CollisionCorrelations {
    double mutual_information;
    double reduced_entropy_gain;
};

/// rho_s' = (1-x) rho_s + x rho_b and rho_b' = (1-x) rho_b + x rho_s.
std::pair<DensityMatrix, DensityMatrix> density_swap(double x, const DensityMatrix& rho_s,
                                                     const DensityMatrix& rho_b);

/// Same rule on level populations.
std::pair<Population, Population> population_swap(double x, const Population& p_s,
                                                  const Population& p_b);

/// exp(-i phi/2 sum_k sigma_k (x) sigma_k), by scaling and squaring.
TwoParticleUnitary qubit_swap_unitary(double phi);

/// exp(-i H) with H = sum_ij phi_ij |ij><ji|, assembled from the exact
/// 2x2 rotations on each {|ij>, |ji>} block. phi must be symmetric.
TwoParticleUnitary multilevel_swap_unitary(std::size_t n, const Eigen::MatrixXd& phi);

/// Uniform phi_ij = phi off the diagonal, phi_ii = 0.
TwoParticleUnitary multilevel_swap_unitary(std::size_t n, double phi);

CollisionResult collide(const TwoParticleUnitary& u, const DensityMatrix& rho1,
                        const DensityMatrix& rho2);

CollisionCorrelations collision_correlations(const JointState& joint);

// Linear-algebra helpers exposed for tests and the oracle.
ComplexMatrix matrix_exponential(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace_second(const ComplexMatrix& joint, std::size_t n);
ComplexMatrix partial_trace_first(const ComplexMatrix& joint, std::size_t n);
double von_neumann_entropy(const ComplexMatrix& rho);

}  // namespace swapengine
