#pragma once

// Ultra-hot (first order in inverse temperature) analysis, uniform
// compression, work optimization and the weak-swap entropy relation.

#include <cstdint>
#include <functional>
#include <optional>

#include "swapengine/statekit.hpp"
#include "swapengine/thermo.hpp"

namespace swapengine {

/// max(beta_b * gap_b) above which the first-order expansion is flagged.
inline constexpr double kUltraHotValidity = 0.1;

/// max over both baths of beta * (E_max - E_min).
double ultra_hot_smallness(const BathSpec& cold, const BathSpec& hot);

/// First-order work in (beta_c, beta_h), using centered energies.
double ultra_hot_work(const BathSpec& cold, const BathSpec& hot, const CycleParams& params);

struct UltraHotCondition {
    bool sufficient;          // W_ultra_hot > 0
    bool necessary_ratio_ok;  // 1 < |E_h| / |E_c| < T_h / T_c
};

/// Requires beta_c > beta_h > 0.
UltraHotCondition ultra_hot_engine_condition(const BathSpec& cold, const BathSpec& hot);

/// Per-level Clausius terms of the expansion with the constant part of the
/// factor removed; each is a square and therefore non-negative.
std::vector<double> ultra_hot_clausius_terms(const BathSpec& cold, const BathSpec& hot,
                                             const CycleParams& params);

/// C such that centered E_h = C * centered E_c, if the spectra are proportional.
std::optional<double> uniform_compression_ratio(const BathSpec& cold, const BathSpec& hot);

Mode uniform_compression_classify(double c, double t_c, double t_h);

struct UltraHotReport {
    double w_first_order;
    bool engine_condition;
    bool warning;  // smallness parameter exceeds kUltraHotValidity
    std::optional<double> compression_ratio;
    std::optional<double> eta;
    std::optional<double> w_max;
};

UltraHotReport ultra_hot_report(const BathSpec& cold, const BathSpec& hot, const CycleParams& params);

enum class NormConstraint { FixHotNorm, FixColdNorm };

std::string_view to_string(NormConstraint constraint);

struct UltraHotOptimum {
    NormConstraint constraint;
    double compression_analytic;
    double compression_numeric;
    double eta_analytic;
    double eta_numeric;
    double w_max_analytic;
    double w_max_numeric;
    /// Random non-parallel perturbations at fixed norms that were tried.
    std::size_t perturbation_trials;
    /// Largest W(perturbed) - W(parallel) seen; <= 0 when parallel is optimal.
    double max_perturbation_gain;
    /// report.w_first_order evaluated at the analytic optimum.
    UltraHotReport report;
};

/// Optimizes the ultra-hot work over the compression ratio. The hot
/// spectrum fixes the shape of both centered spectra; the constraint picks
/// whose norm stays fixed. Throws DegenerateSpectrum for a flat spectrum.
UltraHotOptimum ultra_hot_optimize(const BathSpec& hot, double t_c, NormConstraint constraint,
                                   const CycleParams& params, std::uint64_t seed = 0,
                                   std::size_t perturbation_trials = 2000);

/// Maximizes f on [lo, hi] by golden-section search; returns the argmax.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol = 1e-12);

struct NcaComparison {
    double eta_half_carnot;
    double eta_nca;
    double eta_sym;
    bool ordered;
};

NcaComparison nca_comparison(double t_c, double t_h);

struct QuasiStaticCheck {
    double ds_exact;
    double dq_over_t;
    double rel_err;
};

/// Single weak collision of a thermal bath particle with an engine in
/// population engine_pop: exact entropy change vs heat over temperature.
QuasiStaticCheck quasi_static_check(const BathSpec& bath, const Population& engine_pop, double x);

struct EntropyWorkCheck {
    double work;              // steady-state work per cycle
    double work_from_entropy; // -(T_h sum dS_h + T_c sum dS_c) over the scattered particles
};

/// Steady-state cycle with n collisions of swap strength x per thermal
/// stroke; compares work with the bath entropy changes.
EntropyWorkCheck multi_collision_entropy_work(const BathSpec& cold, const BathSpec& hot, double x,
                                              int collisions);

}  // namespace swapengine
