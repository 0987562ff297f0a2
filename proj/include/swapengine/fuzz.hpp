#pragma once

// Randomized invariant campaign over the steady-state cycle.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swapengine/statekit.hpp"
#include "swapengine/thermo.hpp"

namespace swapengine {

struct FuzzInstance {
    std::size_t index;
    std::vector<double> cold_energies;
    std::vector<double> hot_energies;
    double beta_c;
    double beta_h;
    double x_tilde;
};

struct Counterexample {
    FuzzInstance instance;
    double value;
    double reference;
    std::string detail;
};

struct InvariantTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<Counterexample> first_failure;

    std::size_t failed() const { return checked - passed; }
};

/// Least-squares fit of total = -c * x(1-x)/(2-x)^2 * |p_h - p_c|^2.
struct PurityFit {
    double c = 0.0;
    std::size_t samples = 0;
    double max_abs_residual = 0.0;
};

struct FuzzSummary {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t max_levels = 0;
    std::vector<InvariantTally> invariants;
    std::map<std::string, std::size_t> modes;
    PurityFit purity_fit;

    bool all_passed() const;
};

/// N uniform in [2, max_levels], energies uniform in [0, 5], two betas
/// uniform in [0.1, 10] with the larger one assigned to the cold bath,
/// x_tilde uniform in (0, 1].
FuzzInstance draw_instance(std::uint64_t seed, std::size_t index, std::size_t max_levels);

FuzzSummary run_fuzz(std::size_t n, std::uint64_t seed, std::size_t max_levels = 6);

}  // namespace swapengine
