#include "swapengine/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "swapengine/bounds.hpp"

namespace swapengine {

namespace {

constexpr double kExact = 1e-10;
constexpr double kSign = 1e-12;

class Uniform {
public:
    Uniform(std::uint64_t seed, std::size_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        rng_.seed(seq);
    }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t integer(std::size_t lo, std::size_t hi) { return lo + rng_() % (hi - lo + 1); }

private:
    std::mt19937_64 rng_;
};

class Campaign {
public:
    InvariantTally& tally(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return tallies_[it->second];
        index_.emplace(name, tallies_.size());
        tallies_.push_back(InvariantTally{name, 0, 0, std::nullopt});
        return tallies_.back();
    }

    void check(const std::string& name, bool ok, const FuzzInstance& inst, double value, double reference,
               std::string detail = {}) {
        InvariantTally& t = tally(name);
        ++t.checked;
        if (ok) {
            ++t.passed;
        } else if (!t.first_failure) {
            t.first_failure = Counterexample{inst, value, reference, std::move(detail)};
        }
    }

    std::vector<InvariantTally> release() { return std::move(tallies_); }

private:
    std::vector<InvariantTally> tallies_;
    std::map<std::string, std::size_t> index_;
};

double generalized_clausius_scale(const std::vector<double>& d, std::span<const double> dp, int m) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) s += std::abs(dp[i] * std::pow(d[i], 2 * m - 1));
    return s;
}

void check_instance(Campaign& campaign, PurityFit& fit, double& fit_num, double& fit_den,
                    std::vector<std::pair<double, double>>& fit_points, std::map<std::string, std::size_t>& modes,
                    const FuzzInstance& inst) {
    const BathSpec cold(inst.cold_energies, inst.beta_c, BathLabel::Cold);
    const BathSpec hot(inst.hot_energies, inst.beta_h, BathLabel::Hot);
    const CycleParams params(inst.x_tilde, 1.0);
    const CycleReport r = cycle_observables(cold, hot, params);
    ++modes[std::string(to_string(r.mode))];

    const double xt = inst.x_tilde;
    const double k = xt / (2.0 - xt);
    const auto dp = r.steady.dp.values();

    campaign.check("first_law", std::abs(r.q_hot + r.q_cold - r.work) <= kExact, inst,
                   r.q_hot + r.q_cold, r.work);

    const auto d = clausius_factors(cold, hot);
    for (int m : {1, 2, 3, 5}) {
        const double value = clausius_number(cold, hot, params, m);
        // Rounding in a sum of terms of size D^(2m-1) scales with their magnitude.
        const double tol = kSign * std::max(1.0, generalized_clausius_scale(d, dp, m));
        campaign.check("clausius_nonnegative_m" + std::to_string(m), value >= -tol, inst, value, -tol);
    }

    const double kj = k * jeffreys_divergence(r.p_cold, r.p_hot);
    campaign.check("clausius_equals_k_jeffreys",
                   std::abs(r.clausius - kj) <= kSign * std::max(1.0, kj), inst, r.clausius, kj);

    try {
        const ClausiusLevel level = clausius_dominated_level(cold, hot, params);
        campaign.check("dominated_level_sign", level.sign_match, inst, level.bath_change, level.factor,
                       "level " + std::to_string(level.index));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroChange && e.code() != ErrorCode::AmbiguousMaximum) throw;
    }

    const PurityChange pc = purity_change(r.p_cold, r.p_hot, xt);
    campaign.check("purity_change_nonpositive", pc.total <= kSign, inst, pc.total, 0.0);
    const auto delta = difference(r.p_hot.probs(), r.p_cold.probs());
    const double g = xt * (1.0 - xt) / ((2.0 - xt) * (2.0 - xt)) * dot(delta, delta);
    fit_num += -pc.total * g;
    fit_den += g * g;
    fit_points.emplace_back(g, pc.total);
    ++fit.samples;

    const PurityBound pb = purity_change_lower_bound(r.p_cold, r.p_hot, xt);
    campaign.check("purity_change_lower_bound", pb.satisfied, inst, pb.actual, pb.bound);

    for (const Population* p : {&r.p_cold, &r.p_hot}) {
        const double floor = std::exp(-shannon_entropy(*p));
        campaign.check("purity_exceeds_exp_minus_entropy", purity(*p) >= floor * (1.0 - kSign), inst, purity(*p),
                       floor);
    }

    auto record = [&](const std::string& prefix, const BoundReport& b) {
        if (b.skipped) return;
        campaign.check(prefix + b.name, b.satisfied, inst, b.actual, b.value);
    };

    if (r.mode == Mode::Engine) {
        record("engine_necessary:", engine_necessary_condition(cold, hot));
        record("engine_necessary:", entropy_difference_condition(cold, hot));
        for (const auto& b : efficiency_bounds(cold, hot, params)) record("efficiency_bound:", b);
        const double carnot = 1.0 - inst.beta_h / inst.beta_c;
        campaign.check("efficiency_below_carnot", *r.efficiency <= carnot + kSign, inst, *r.efficiency, carnot);
        if (cold.levels() == 2) {
            const double expected = 1.0 - (inst.cold_energies[1] - inst.cold_energies[0]) /
                                              (inst.hot_energies[1] - inst.hot_energies[0]);
            // eta is a ratio of heats; when Q_h is tiny its rounding error is amplified by 1/Q_h.
            const double gap_h = std::abs(inst.hot_energies[1] - inst.hot_energies[0]);
            const double miss = std::abs(*r.efficiency - expected);
            const bool ok = miss <= kExact || miss * std::abs(r.q_hot) <= 1e-14 * std::max(1.0, gap_h);
            campaign.check("two_level_efficiency", ok, inst, *r.efficiency, expected);
        }
    }
    if (r.mode == Mode::Refrigerator) {
        record("refrigerator_necessary:", refrigerator_necessary_condition(cold, hot));
    }
    for (const auto& b : work_bounds(cold, hot, params)) record("work_bound:", b);
}

}  // namespace

bool FuzzSummary::all_passed() const {
    return std::all_of(invariants.begin(), invariants.end(),
                       [](const InvariantTally& t) { return t.failed() == 0; });
}

FuzzInstance draw_instance(std::uint64_t seed, std::size_t index, std::size_t max_levels) {
    Uniform u(seed, index);
    FuzzInstance inst{};
    inst.index = index;
    const std::size_t n = u.integer(2, std::max<std::size_t>(2, max_levels));
    for (std::size_t i = 0; i < n; ++i) inst.cold_energies.push_back(u.in(0.0, 5.0));
    for (std::size_t i = 0; i < n; ++i) inst.hot_energies.push_back(u.in(0.0, 5.0));
    const double b1 = u.in(0.1, 10.0);
    const double b2 = u.in(0.1, 10.0);
    inst.beta_c = std::max(b1, b2);
    inst.beta_h = std::min(b1, b2);
    inst.x_tilde = 1.0 - u.unit();
    return inst;
}

FuzzSummary run_fuzz(std::size_t n, std::uint64_t seed, std::size_t max_levels) {
    if (n == 0) throw Error(ErrorCode::InvalidParams, "fuzz needs n >= 1");
    if (max_levels < 2) throw Error(ErrorCode::InvalidParams, "max-levels must be >= 2");
    FuzzSummary s;
    s.n = n;
    s.seed = seed;
    s.max_levels = max_levels;
    Campaign campaign;
    double num = 0.0;
    double den = 0.0;
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < n; ++i) {
        check_instance(campaign, s.purity_fit, num, den, points, s.modes, draw_instance(seed, i, max_levels));
    }
    if (den > 0.0) s.purity_fit.c = num / den;
    // Every instance must sit on the single fitted line through the origin.
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [g, total] = points[i];
        const double residual = std::abs(total + s.purity_fit.c * g);
        s.purity_fit.max_abs_residual = std::max(s.purity_fit.max_abs_residual, residual);
        campaign.check("purity_change_proportional", residual <= kSign, draw_instance(seed, i, max_levels), total,
                       -s.purity_fit.c * g);
    }
    s.invariants = campaign.release();
    return s;
}

}  // namespace swapengine
