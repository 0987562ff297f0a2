#pragma once

// First-law observables, Clausius numbers and purity bookkeeping of the
// steady-state cycle.

#include <cstddef>
#include <optional>
#include <string_view>

#include "swapengine/cycle.hpp"
#include "swapengine/statekit.hpp"

namespace swapengine {

inline constexpr double kModeTolerance = 1e-12;

enum class Mode { Engine, Refrigerator, Heater, Degenerate };

std::string_view to_string(Mode mode);

/// Per-cycle steady-state averages. Heat is positive into the engine and
/// work is positive when extracted.
struct CycleReport {
    Population p_cold;
    Population p_hot;
    double x_tilde;
    SteadyState steady;
    double q_hot;
    double q_cold;
    double work;
    /// Present only in Engine mode.
    std::optional<double> efficiency;
    Mode mode;
    /// Entropy delivered to the baths per cycle, -Q_h/T_h - Q_c/T_c.
    double clausius;
};

CycleReport cycle_observables(const BathSpec& cold, const BathSpec& hot, const CycleParams& params);

/// Per-level Clausius factor D_i = beta_h E_h,i - beta_c E_c,i.
std::vector<double> clausius_factors(const BathSpec& cold, const BathSpec& hot);

/// Generalized Clausius sum R_{2m-1} = sum_i dq_i D_i^(2m-1), with dq the
/// average population change handed to the hot bath per cycle (-dp). For
/// m = 1 this is the total entropy production of the baths.
double clausius_number(const BathSpec& cold, const BathSpec& hot, const CycleParams& params, int m);

struct ClausiusLevel {
    std::size_t index;
    double factor;       // D at the dominated level
    double bath_change;  // -dp at the dominated level
    bool sign_match;     // sign(bath_change) == sign(factor)
};

/// Level with the largest |D_i|. Throws ZeroChange when the cycle moves no
/// population there, AmbiguousMaximum when the maximum is not unique.
ClausiusLevel clausius_dominated_level(const BathSpec& cold, const BathSpec& hot,
                                       const CycleParams& params);

struct PurityChange {
    double delta_p_hot;
    double delta_p_cold;
    double total;
};

/// Purity change of both baths over one steady-state cycle, using the
/// bath-side changes dp_hot = -dp and dp_cold = +dp.
PurityChange purity_change(const Population& p_cold, const Population& p_hot, double x_tilde);
PurityChange purity_change(const BathSpec& cold, const BathSpec& hot, const CycleParams& params);

struct PurityBound {
    double coefficient;  // -total / |p_h - p_c|^2, from the direct computation
    double bound;        // coefficient * (sqrt(P_h) - sqrt(P_c))^2
    double actual;       // |total|
    bool satisfied;
};

/// Local lower bound on the total purity loss. Valid for any diagonal
/// bath populations, thermal or not.
PurityBound purity_change_lower_bound(const Population& p_cold, const Population& p_hot,
                                      double x_tilde);
PurityBound purity_change_lower_bound(const BathSpec& cold, const BathSpec& hot,
                                      const CycleParams& params);

}  // namespace swapengine
