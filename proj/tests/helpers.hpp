#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "swapengine/statekit.hpp"

namespace testing {

using namespace swapengine;

inline BathSpec cold_bath(std::vector<double> e, double t) {
    return BathSpec::from_temperature(std::move(e), t, BathLabel::Cold);
}

inline BathSpec hot_bath(std::vector<double> e, double t) {
    return BathSpec::from_temperature(std::move(e), t, BathLabel::Hot);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline std::vector<double> random_energies(std::mt19937_64& rng, std::size_t n, double lo = 0.0,
                                           double hi = 5.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> e(n);
    for (double& v : e) v = u(rng);
    return e;
}

inline Population random_population(std::mt19937_64& rng, std::size_t n) {
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> p(n);
    double s = 0.0;
    for (double& v : p) s += (v = ex(rng));
    for (double& v : p) v /= s;
    return Population(p);
}

// Independent hand-rolled Gibbs weights, no max-shift.
inline std::vector<double> naive_gibbs(const std::vector<double>& e, double beta) {
    std::vector<double> w(e.size());
    double z = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) z += (w[i] = std::exp(-beta * e[i]));
    for (double& v : w) v /= z;
    return w;
}

}  // namespace testing
