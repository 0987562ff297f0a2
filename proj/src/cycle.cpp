#include "swapengine/cycle.hpp"

#include <cmath>
#include <string>

namespace swapengine {

namespace {

double l1_distance(const Population& a, const Population& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

}  // namespace

SteadyState steady_populations(const Population& p_cold, const Population& p_hot, double x_tilde) {
    require_same_length(p_cold.size(), p_hot.size(), "steady state");
    if (!(x_tilde >= 0.0 && x_tilde <= 1.0)) {
        throw Error(ErrorCode::XOutOfRange, "effective swap must lie in [0, 1]");
    }
    if (x_tilde == 0.0) {
        throw Error(ErrorCode::DegenerateCycle, "x*R = 0 leaves every population stationary");
    }
    const std::size_t n = p_cold.size();
    const double denom = 2.0 - x_tilde;
    const double k = x_tilde / denom;
    std::vector<double> a(n), c(n), dp(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = (p_hot[i] + p_cold[i] - x_tilde * p_hot[i]) / denom;
        c[i] = (p_hot[i] + p_cold[i] - x_tilde * p_cold[i]) / denom;
        dp[i] = k * (p_hot[i] - p_cold[i]);
    }
    return SteadyState{Population(std::move(a)), Population(std::move(c)),
                       DeltaPopulation(std::move(dp))};
}

SteadyState steady_populations(const Population& p_cold, const Population& p_hot,
                               const CycleParams& params) {
    return steady_populations(p_cold, p_hot, params.x_tilde());
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd k) : k_(std::move(k)) {
    if (k_.rows() != k_.cols() || k_.rows() == 0) {
        throw Error(ErrorCode::DimMismatch, "stochastic matrix must be square");
    }
    if (k_.minCoeff() < -kNormTolerance) {
        throw Error(ErrorCode::InvalidParams, "stochastic matrix has a negative entry");
    }
    for (Eigen::Index j = 0; j < k_.cols(); ++j) {
        if (std::abs(k_.col(j).sum() - 1.0) > kDriftTolerance) {
            throw Error(ErrorCode::InvalidParams,
                        "column " + std::to_string(j) + " of the stochastic matrix does not sum to 1");
        }
    }
}

Population StochasticMatrix::apply(const Population& p) const {
    require_same_length(size(), p.size(), "stochastic matrix application");
    const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(p.probs().data(), p.size());
    const Eigen::VectorXd out = k_ * v;
    return Population(std::vector<double>(out.data(), out.data() + out.size()));
}

StochasticMatrix StochasticMatrix::then(const StochasticMatrix& next) const {
    require_same_length(size(), next.size(), "stochastic matrix product");
    return StochasticMatrix(next.k_ * k_);
}

StochasticMatrix markov_cycle_operator(const Population& p_target, double x_tilde) {
    if (!(x_tilde >= 0.0 && x_tilde <= 1.0)) {
        throw Error(ErrorCode::XOutOfRange, "effective swap must lie in [0, 1]");
    }
    const auto n = static_cast<Eigen::Index>(p_target.size());
    const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(p_target.probs().data(), n);
    Eigen::MatrixXd k = x_tilde * target * Eigen::RowVectorXd::Ones(n);
    k.diagonal().array() += 1.0 - x_tilde;
    return StochasticMatrix(std::move(k));
}

namespace {

std::pair<Population, std::size_t> power_fixed_point(const StochasticMatrix& k, double tol,
                                                     std::size_t max_iterations) {
    Population p = Population::uniform(k.size());
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        Population next = k.apply(p);
        const double diff = l1_distance(next, p);
        p = std::move(next);
        if (diff < tol) return {std::move(p), it - 1};
    }
    throw Error(ErrorCode::NoConvergence,
                "power iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

}  // namespace

IterationResult steady_state_by_iteration(const StochasticMatrix& k_cold,
                                          const StochasticMatrix& k_hot, double tol,
                                          std::size_t max_iterations) {
    require_same_length(k_cold.size(), k_hot.size(), "cycle operators");
    // Stage A: hot stroke then cold stroke. Stage C: cold then hot.
    auto [p_a, n_a] = power_fixed_point(k_hot.then(k_cold), tol, max_iterations);
    auto [p_c, n_c] = power_fixed_point(k_cold.then(k_hot), tol, max_iterations);
    return IterationResult{std::move(p_a), std::move(p_c), n_a, n_c};
}

DensityFixedPoint density_cycle_fixed_point(const DensityMatrix& rho0, const DensityMatrix& rho_cold,
                                            const DensityMatrix& rho_hot, double x_tilde, double tol,
                                            std::size_t max_cycles) {
    if (x_tilde == 0.0) {
        throw Error(ErrorCode::DegenerateCycle, "x*R = 0 leaves every state stationary");
    }
    DensityMatrix rho_a = rho0;
    for (std::size_t cycle = 1; cycle <= max_cycles; ++cycle) {
        DensityMatrix rho_c = density_swap(x_tilde, rho_a, rho_hot).first;
        DensityMatrix next_a = density_swap(x_tilde, rho_c, rho_cold).first;
        const double diff = (next_a.matrix() - rho_a.matrix()).cwiseAbs().sum();
        rho_a = std::move(next_a);
        if (diff < tol) {
            DensityMatrix final_c = density_swap(x_tilde, rho_a, rho_hot).first;
            return DensityFixedPoint{std::move(rho_a), std::move(final_c), cycle};
        }
    }
    throw Error(ErrorCode::NoConvergence, "density cycle did not converge");
}

}  // namespace swapengine
