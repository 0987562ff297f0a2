#pragma once

// Necessary operating conditions and upper bounds on work and efficiency.
//
// Bounds tagged Local are evaluated from LocalScalars alone, one struct per
// bath, so they cannot see the level-by-level correspondence between the
// baths. Non-local bounds also use the mutual coincidence, divergences, or
// the Wootters distance.

#include <optional>
#include <string>
#include <vector>

#include "swapengine/statekit.hpp"
#include "swapengine/thermo.hpp"

namespace swapengine {

enum class Locality { Local, NonLocal };
enum class BoundKind { UpperBound, Exact, NecessaryCondition };

std::string_view to_string(Locality locality);

struct BoundReport {
    std::string name;
    double value = 0.0;
    double actual = 0.0;
    bool satisfied = false;
    Locality locality = Locality::Local;
    BoundKind kind = BoundKind::UpperBound;
    /// Set when the variant's precondition fails; value and actual are then unused.
    std::optional<std::string> skipped;
};

/// Scalars computable from a single bath's spectrum and temperature.
struct LocalScalars {
    std::size_t levels;
    double temperature;
    double entropy;
    double purity;
    double centered_norm;   // |E - mean(E)|
    double energy_norm_sq;  // |E|^2
};

LocalScalars local_scalars(const BathSpec& bath);

namespace local {
// Work bounds without the x_tilde/(2-x_tilde) prefactor.
double purity_free_energy(const LocalScalars& cold, const LocalScalars& hot);
double entropy_purity(const LocalScalars& cold, const LocalScalars& hot);
/// sqrt(P_c + P_h - 2/N) sqrt(|E_h|^2 - |E_c|^2).
double compression(const LocalScalars& cold, const LocalScalars& hot);
double carnot(const LocalScalars& cold, const LocalScalars& hot);
double purity_efficiency(const LocalScalars& cold, const LocalScalars& hot);
}  // namespace local

/// P_ch >= exp(-(T_c S_c + T_h S_h) / (T_c + T_h)); holds in every engine.
BoundReport engine_necessary_condition(const BathSpec& cold, const BathSpec& hot);
/// P_ch >= exp(-S_c); holds in every refrigerator.
BoundReport refrigerator_necessary_condition(const BathSpec& cold, const BathSpec& hot);
/// S_h - S_c >= (T_c D(p_h|p_c) + T_h D(p_c|p_h)) / (T_h - T_c); holds in every engine.
BoundReport entropy_difference_condition(const BathSpec& cold, const BathSpec& hot);

/// True when the two populations are similarly ordered over level pairs.
bool similarly_ordered(const Population& p, const Population& q);
/// E_c,i = E_h,i / C_i with C_i >= 1 on every level.
bool is_compression(const BathSpec& cold, const BathSpec& hot);

std::vector<BoundReport> work_bounds(const BathSpec& cold, const BathSpec& hot,
                                     const CycleParams& params);

/// Throws NotAnEngine unless the cycle runs as an engine.
std::vector<BoundReport> efficiency_bounds(const BathSpec& cold, const BathSpec& hot,
                                           const CycleParams& params);

}  // namespace swapengine
