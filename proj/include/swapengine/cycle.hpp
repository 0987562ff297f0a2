#pragma once

// Steady state of the four-stroke cycle, in closed form and as the fixed
// point of the per-stroke Markov operators.

#include <cstddef>

#include <Eigen/Dense>

#include "swapengine/collision.hpp"
#include "swapengine/statekit.hpp"

namespace swapengine {

/// Engine populations after the cold stroke (A) and after the hot stroke (C).
struct SteadyState {
    Population p_a;
    Population p_c;
    /// p_c - p_a, the average change over the hot stroke.
    DeltaPopulation dp;
};

/// x_tilde must lie in (0, 1]; zero throws DegenerateCycle.
SteadyState steady_populations(const Population& p_cold, const Population& p_hot, double x_tilde);
SteadyState steady_populations(const Population& p_cold, const Population& p_hot,
                               const CycleParams& params);

/// Column-stochastic square matrix acting on population column vectors.
class StochasticMatrix {
public:
    explicit StochasticMatrix(Eigen::MatrixXd k);

    const Eigen::MatrixXd& matrix() const { return k_; }
    std::size_t size() const { return static_cast<std::size_t>(k_.rows()); }
    Population apply(const Population& p) const;
    StochasticMatrix then(const StochasticMatrix& next) const;

private:
    Eigen::MatrixXd k_;
};

/// K = x_tilde |p_target><1,...,1| + (1 - x_tilde) I.
StochasticMatrix markov_cycle_operator(const Population& p_target, double x_tilde);

struct IterationResult {
    Population p_a;
    Population p_c;
    std::size_t applications_a;
    std::size_t applications_c;
};

/// Power iteration from the uniform population for the fixed points of
/// K_cold K_hot (stage A) and K_hot K_cold (stage C). Stops once successive
/// iterates differ by less than tol in L1; for a contraction rate q the
/// remaining error is at most tol * q / (1 - q).
IterationResult steady_state_by_iteration(const StochasticMatrix& k_cold,
                                          const StochasticMatrix& k_hot, double tol,
                                          std::size_t max_iterations = 1'000'000);

struct DensityFixedPoint {
    DensityMatrix rho_a;
    DensityMatrix rho_c;
    std::size_t cycles;
};

/// Runs density-swap cycles from an arbitrary initial state (coherences
/// allowed). Adiabatic strokes keep the density matrix as is.
DensityFixedPoint density_cycle_fixed_point(const DensityMatrix& rho0, const DensityMatrix& rho_cold,
                                            const DensityMatrix& rho_hot, double x_tilde, double tol,
                                            std::size_t max_cycles = 1'000'000);

}  // namespace swapengine
