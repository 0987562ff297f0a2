#include "swapengine/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swapengine {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Engine: return "Engine";
        case Mode::Refrigerator: return "Refrigerator";
        case Mode::Heater: return "Heater";
        case Mode::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

namespace {

void require_matching_baths(const BathSpec& cold, const BathSpec& hot) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
}

double odd_power(double v, int exponent) {
    double out = 1.0;
    for (int k = 0; k < exponent; ++k) out *= v;
    return out;
}

}  // namespace

CycleReport cycle_observables(const BathSpec& cold, const BathSpec& hot, const CycleParams& params) {
    require_matching_baths(cold, hot);
    Population p_cold = gibbs_population(cold);
    Population p_hot = gibbs_population(hot);
    SteadyState steady = steady_populations(p_cold, p_hot, params);

    const auto dp = steady.dp.values();
    const double q_hot = dot(hot.energies(), dp);
    const double q_cold = -dot(cold.energies(), dp);
    const double work = q_hot + q_cold;

    double clausius = 0.0;
    const auto d = clausius_factors(cold, hot);
    for (std::size_t i = 0; i < d.size(); ++i) clausius -= dp[i] * d[i];

    const double largest = std::abs(*std::max_element(dp.begin(), dp.end(), [](double a, double b) {
        return std::abs(a) < std::abs(b);
    }));

    Mode mode = Mode::Heater;
    std::optional<double> efficiency;
    const bool engine = work > kModeTolerance;
    const bool fridge = q_cold > kModeTolerance;
    // Excluded by the Clausius inequality whenever the cold bath is not the hotter one.
    if (engine && fridge && cold.beta() >= hot.beta()) {
        throw std::logic_error("cycle both produces work and extracts cold-bath heat");
    }
    if (largest <= 1e-14) {
        mode = Mode::Degenerate;
    } else if (engine) {
        mode = Mode::Engine;
        if (q_hot > 0.0) efficiency = 1.0 - std::abs(q_cold / q_hot);
    } else if (fridge) {
        mode = Mode::Refrigerator;
    }

    const double x_tilde = params.x_tilde();
    return CycleReport{std::move(p_cold), std::move(p_hot), x_tilde, std::move(steady),
                       q_hot, q_cold, work, efficiency, mode, clausius};
}

std::vector<double> clausius_factors(const BathSpec& cold, const BathSpec& hot) {
    require_matching_baths(cold, hot);
    std::vector<double> d(cold.levels());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = hot.beta() * hot.energies()[i] - cold.beta() * cold.energies()[i];
    }
    return d;
}

double clausius_number(const BathSpec& cold, const BathSpec& hot, const CycleParams& params, int m) {
    if (cold.beta() == 0.0 || hot.beta() == 0.0) {
        throw Error(ErrorCode::UltraHotTemperature, "Clausius number needs finite temperatures");
    }
    if (m < 1) throw Error(ErrorCode::InvalidParams, "Clausius order m must be >= 1");
    const SteadyState steady =
        steady_populations(gibbs_population(cold), gibbs_population(hot), params);
    const auto d = clausius_factors(cold, hot);
    double r = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) r -= steady.dp[i] * odd_power(d[i], 2 * m - 1);
    return r;
}

ClausiusLevel clausius_dominated_level(const BathSpec& cold, const BathSpec& hot,
                                       const CycleParams& params) {
    const SteadyState steady =
        steady_populations(gibbs_population(cold), gibbs_population(hot), params);
    const auto dp = steady.dp.values();
    if (std::all_of(dp.begin(), dp.end(), [](double v) { return v == 0.0; })) {
        throw Error(ErrorCode::ZeroChange, "the cycle moves no population");
    }
    const auto d = clausius_factors(cold, hot);
    std::size_t best = 0;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (std::abs(d[i]) > std::abs(d[best])) best = i;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i != best && std::abs(std::abs(d[i]) - std::abs(d[best])) <= 1e-12) {
            throw Error(ErrorCode::AmbiguousMaximum, "|D_i| has more than one maximizer");
        }
    }
    if (dp[best] == 0.0) {
        throw Error(ErrorCode::ZeroChange, "no population change at the dominated level");
    }
    const double change = -dp[best];
    return ClausiusLevel{best, d[best], change, (change > 0.0) == (d[best] > 0.0)};
}

PurityChange purity_change(const Population& p_cold, const Population& p_hot, double x_tilde) {
    const SteadyState steady = steady_populations(p_cold, p_hot, x_tilde);
    const auto dp = steady.dp.values();
    const double dp_sq = dot(dp, dp);
    // Hot bath receives -dp, cold bath receives +dp.
    const double delta_hot = dp_sq - 2.0 * dot(p_hot.probs(), dp);
    const double delta_cold = dp_sq + 2.0 * dot(p_cold.probs(), dp);
    return PurityChange{delta_hot, delta_cold, delta_hot + delta_cold};
}

PurityChange purity_change(const BathSpec& cold, const BathSpec& hot, const CycleParams& params) {
    require_matching_baths(cold, hot);
    return purity_change(gibbs_population(cold), gibbs_population(hot), params.x_tilde());
}

PurityBound purity_change_lower_bound(const Population& p_cold, const Population& p_hot,
                                      double x_tilde) {
    const PurityChange change = purity_change(p_cold, p_hot, x_tilde);
    const auto diff = difference(p_hot.probs(), p_cold.probs());
    const double dist_sq = dot(diff, diff);
    const double coefficient = dist_sq > 0.0 ? -change.total / dist_sq : 0.0;
    const double gap = std::sqrt(purity(p_hot)) - std::sqrt(purity(p_cold));
    const double bound = coefficient * gap * gap;
    const double actual = std::abs(change.total);
    return PurityBound{coefficient, bound, actual, actual >= bound - 1e-15};
}

PurityBound purity_change_lower_bound(const BathSpec& cold, const BathSpec& hot,
                                      const CycleParams& params) {
    require_matching_baths(cold, hot);
    return purity_change_lower_bound(gibbs_population(cold), gibbs_population(hot),
                                     params.x_tilde());
}

}  // namespace swapengine
