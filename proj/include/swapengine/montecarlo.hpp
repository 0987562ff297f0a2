#pragma once

// Stochastic cycle-by-cycle simulation: each thermal stroke attempts one
// (or more) collisions, each succeeding with probability R.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "swapengine/statekit.hpp"

namespace swapengine {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

struct SimConfig {
    BathSpec cold;
    BathSpec hot;
    CycleParams params;
    std::uint64_t n_cycles = 100'000;
    /// Cycles discarded before measuring; automatic when unset.
    std::optional<std::uint64_t> burn_in;
    std::uint64_t seed = 0;
    int collisions_per_stroke = 1;
    bool record_work_series = false;
    /// Batches used for batch-means standard errors.
    std::size_t batches = 100;

    void validate() const;
};

struct Trajectory {
    std::vector<double> mean_p_a;
    std::vector<double> mean_p_c;
    double mean_work = 0.0;
    double mean_q_hot = 0.0;
    double mean_q_cold = 0.0;
    /// Mean engine energy change per measured cycle; the first law reads
    /// mean_q_hot + mean_q_cold = mean_work + mean_energy_drift.
    double mean_energy_drift = 0.0;
    double stderr_work = 0.0;
    std::vector<double> stderr_p_a;
    std::vector<double> stderr_p_c;
    std::uint64_t burn_in = 0;
    std::uint64_t measured_cycles = 0;
    std::string_view rng_algorithm = kRngAlgorithm;
    std::optional<std::vector<double>> per_cycle_work;
};

Trajectory simulate(const SimConfig& config);

/// Automatic burn-in: at least 1000 cycles, and until the mean work of two
/// consecutive 100-cycle windows differs by less than 1%. Never exceeds cap.
class BurnInDetector {
public:
    explicit BurnInDetector(std::uint64_t cap) : cap_(cap) {}

    /// Feeds one cycle's work; returns true once burn-in is complete.
    bool push(double work);
    std::uint64_t cycles() const { return cycles_; }

private:
    std::uint64_t cap_;
    std::uint64_t cycles_ = 0;
    double window_sum_ = 0.0;
    std::optional<double> previous_window_;
    bool done_ = false;
};

struct Backreaction {
    /// Running estimate of the total bath purity change per cycle after each
    /// measured cycle, from the purity of the averaged scattered-particle state.
    std::vector<double> purity_drift;
    double total = 0.0;
    double stderr_total = 0.0;
    /// Average of the realized per-particle purity changes, summed over both baths.
    double mean_particle_purity_change = 0.0;
    /// Last `bath_particles` scattered hot and cold particle populations.
    std::vector<std::vector<double>> recent_hot;
    std::vector<std::vector<double>> recent_cold;
};

Backreaction simulate_bath_backreaction(const SimConfig& config, std::size_t bath_particles);

}  // namespace swapengine
