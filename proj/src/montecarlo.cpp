#include "swapengine/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <string>

namespace swapengine {

namespace {

constexpr std::uint64_t kMinBurnIn = 1000;
constexpr std::uint64_t kWindow = 100;

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double dot_raw(const std::vector<double>& a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct CycleOutcome {
    double work = 0.0;
    double q_hot = 0.0;
    double q_cold = 0.0;
    double energy_change = 0.0;
    // Bath-side population change summed over this cycle's collisions.
    std::vector<double> bath_hot;
    std::vector<double> bath_cold;
    double particle_purity_change = 0.0;
};

// Engine population evolving through the four strokes.
class CycleRunner {
public:
    explicit CycleRunner(const SimConfig& cfg)
        : cfg_(cfg),
          p_cold_(gibbs_population(cfg.cold)),
          p_hot_(gibbs_population(cfg.hot)),
          rng_(cfg.seed),
          engine_(cfg.cold.levels(), 1.0 / static_cast<double>(cfg.cold.levels())) {
        const auto eh = cfg.hot.energies();
        const auto ec = cfg.cold.energies();
        lift_.resize(eh.size());
        for (std::size_t i = 0; i < lift_.size(); ++i) lift_[i] = eh[i] - ec[i];
    }

    const std::vector<double>& engine() const { return engine_; }
    const std::vector<double>& stage_c() const { return stage_c_; }
    const Population& p_cold() const { return p_cold_; }
    const Population& p_hot() const { return p_hot_; }

    // Runs one A -> A cycle; `on_particle` sees every scattered particle.
    template <typename ParticleSink>
    void run(CycleOutcome& out, ParticleSink&& on_particle) {
        const std::size_t n = engine_.size();
        out.bath_hot.assign(n, 0.0);
        out.bath_cold.assign(n, 0.0);
        out.particle_purity_change = 0.0;

        const double u_start = dot_raw(engine_, cfg_.cold.energies());
        // Stroke A: levels move from cold to hot energies, populations fixed.
        out.work = -dot_raw(engine_, lift_);
        out.q_hot = thermal_stroke(p_hot_, cfg_.hot.energies(), out.bath_hot, out, on_particle, true);
        stage_c_ = engine_;
        // Stroke C: levels return to the cold energies.
        out.work += dot_raw(engine_, lift_);
        out.q_cold = thermal_stroke(p_cold_, cfg_.cold.energies(), out.bath_cold, out, on_particle, false);
        out.energy_change = dot_raw(engine_, cfg_.cold.energies()) - u_start;
    }

private:
    template <typename ParticleSink>
    double thermal_stroke(const Population& bath, std::span<const double> energies,
                          std::vector<double>& bath_change, CycleOutcome& out, ParticleSink& on_particle,
                          bool hot) {
        const double x = cfg_.params.x();
        const double r = cfg_.params.r();
        double heat = 0.0;
        for (int c = 0; c < cfg_.collisions_per_stroke; ++c) {
            if (!(unit_uniform(rng_) < r)) continue;
            double purity_before = 0.0;
            double purity_after = 0.0;
            particle_.resize(engine_.size());
            for (std::size_t i = 0; i < engine_.size(); ++i) {
                const double change = x * (bath[i] - engine_[i]);
                engine_[i] += change;
                heat += energies[i] * change;
                bath_change[i] -= change;
                particle_[i] = bath[i] - change;
                purity_before += bath[i] * bath[i];
                purity_after += particle_[i] * particle_[i];
            }
            out.particle_purity_change += purity_after - purity_before;
            on_particle(particle_, hot);
        }
        return heat;
    }

    const SimConfig& cfg_;
    Population p_cold_;
    Population p_hot_;
    std::mt19937_64 rng_;
    std::vector<double> engine_;
    std::vector<double> stage_c_;
    std::vector<double> lift_;
    std::vector<double> particle_;
};

// Accumulates per-cycle samples into batch means.
class BatchStats {
public:
    BatchStats(std::size_t dims, std::uint64_t samples, std::size_t batches)
        : dims_(dims),
          batches_(std::max<std::size_t>(1, std::min<std::uint64_t>(batches, samples))),
          batch_size_(std::max<std::uint64_t>(1, samples / batches_)),
          total_(dims, 0.0),
          current_(dims, 0.0) {}

    void add(std::span<const double> sample) {
        for (std::size_t d = 0; d < dims_; ++d) {
            total_[d] += sample[d];
            current_[d] += sample[d];
        }
        ++count_;
        if (++in_batch_ == batch_size_ && means_.size() < batches_) {
            std::vector<double> m(dims_);
            for (std::size_t d = 0; d < dims_; ++d) m[d] = current_[d] / static_cast<double>(batch_size_);
            means_.push_back(std::move(m));
            std::fill(current_.begin(), current_.end(), 0.0);
            in_batch_ = 0;
        }
    }

    double mean(std::size_t d) const { return total_[d] / static_cast<double>(count_); }
    const std::vector<std::vector<double>>& batch_means() const { return means_; }

    double standard_error(std::size_t d) const {
        const std::size_t b = means_.size();
        if (b < 2) return 0.0;
        double avg = 0.0;
        for (const auto& m : means_) avg += m[d];
        avg /= static_cast<double>(b);
        double var = 0.0;
        for (const auto& m : means_) var += (m[d] - avg) * (m[d] - avg);
        var /= static_cast<double>(b - 1);
        return std::sqrt(var / static_cast<double>(b));
    }

private:
    std::size_t dims_;
    std::size_t batches_;
    std::uint64_t batch_size_;
    std::vector<double> total_;
    std::vector<double> current_;
    std::vector<std::vector<double>> means_;
    std::uint64_t count_ = 0;
    std::uint64_t in_batch_ = 0;
};

template <typename ParticleSink>
std::uint64_t run_burn_in(const SimConfig& config, CycleRunner& runner, CycleOutcome& outcome,
                          ParticleSink&& sink) {
    if (config.burn_in) {
        for (std::uint64_t i = 0; i < *config.burn_in; ++i) runner.run(outcome, sink);
        return *config.burn_in;
    }
    BurnInDetector detector(config.n_cycles / 2);
    bool done = false;
    while (!done) {
        runner.run(outcome, sink);
        done = detector.push(outcome.work);
    }
    return detector.cycles();
}

}  // namespace

void SimConfig::validate() const {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    if (n_cycles == 0) throw Error(ErrorCode::InvalidConfig, "n_cycles must be positive");
    if (burn_in && *burn_in >= n_cycles) {
        throw Error(ErrorCode::InvalidConfig, "burn_in must be smaller than n_cycles");
    }
    if (collisions_per_stroke < 1) {
        throw Error(ErrorCode::InvalidConfig, "collisions_per_stroke must be >= 1");
    }
    if (batches < 2) throw Error(ErrorCode::InvalidConfig, "need at least two batches");
}

bool BurnInDetector::push(double work) {
    if (done_) return true;
    ++cycles_;
    window_sum_ += work;
    if (cycles_ % kWindow == 0) {
        const double mean = window_sum_ / static_cast<double>(kWindow);
        window_sum_ = 0.0;
        if (previous_window_ && cycles_ >= kMinBurnIn) {
            const double prev = *previous_window_;
            const double scale = std::max(std::abs(prev), std::abs(mean));
            if (scale < 1e-15 || std::abs(mean - prev) < 0.01 * std::abs(prev)) done_ = true;
        }
        previous_window_ = mean;
    }
    if (cycles_ >= cap_ && cycles_ >= std::min(cap_, kMinBurnIn)) done_ = true;
    return done_;
}

Trajectory simulate(const SimConfig& config) {
    config.validate();
    CycleRunner runner(config);
    CycleOutcome outcome;
    auto ignore = [](const std::vector<double>&, bool) {};

    Trajectory t;
    t.burn_in = run_burn_in(config, runner, outcome, ignore);
    t.measured_cycles = config.n_cycles - t.burn_in;

    const std::size_t n = config.cold.levels();
    // Sample layout: work, q_hot, q_cold, energy change, p_a[n], p_c[n].
    const std::size_t dims = 4 + 2 * n;
    BatchStats stats(dims, t.measured_cycles, config.batches);
    std::vector<double> sample(dims);
    if (config.record_work_series) t.per_cycle_work.emplace().reserve(t.measured_cycles);

    for (std::uint64_t i = 0; i < t.measured_cycles; ++i) {
        std::copy(runner.engine().begin(), runner.engine().end(), sample.begin() + 4);
        runner.run(outcome, ignore);
        sample[0] = outcome.work;
        sample[1] = outcome.q_hot;
        sample[2] = outcome.q_cold;
        sample[3] = outcome.energy_change;
        std::copy(runner.stage_c().begin(), runner.stage_c().end(), sample.begin() + 4 + n);
        stats.add(sample);
        if (t.per_cycle_work) t.per_cycle_work->push_back(outcome.work);
    }

    t.mean_work = stats.mean(0);
    t.mean_q_hot = stats.mean(1);
    t.mean_q_cold = stats.mean(2);
    t.mean_energy_drift = stats.mean(3);
    t.stderr_work = stats.standard_error(0);
    for (std::size_t i = 0; i < n; ++i) {
        t.mean_p_a.push_back(stats.mean(4 + i));
        t.mean_p_c.push_back(stats.mean(4 + n + i));
        t.stderr_p_a.push_back(stats.standard_error(4 + i));
        t.stderr_p_c.push_back(stats.standard_error(4 + n + i));
    }
    return t;
}

Backreaction simulate_bath_backreaction(const SimConfig& config, std::size_t bath_particles) {
    config.validate();
    if (bath_particles == 0) throw Error(ErrorCode::InvalidConfig, "bath_particles must be positive");
    CycleRunner runner(config);
    CycleOutcome outcome;
    std::deque<std::vector<double>> recent_hot;
    std::deque<std::vector<double>> recent_cold;
    auto keep = [&](const std::vector<double>& particle, bool hot) {
        auto& store = hot ? recent_hot : recent_cold;
        store.push_back(particle);
        if (store.size() > bath_particles) store.pop_front();
    };

    const std::uint64_t burn = run_burn_in(config, runner, outcome, keep);
    const std::uint64_t measured = config.n_cycles - burn;
    const std::size_t n = config.cold.levels();
    const auto ph = runner.p_hot().probs();
    const auto pc = runner.p_cold().probs();
    const double purity_h = dot(ph, ph);
    const double purity_c = dot(pc, pc);

    // Sample layout: bath_hot[n], bath_cold[n], realized particle purity change.
    BatchStats stats(2 * n + 1, measured, config.batches);
    std::vector<double> sample(2 * n + 1);
    std::vector<double> sum_hot(n, 0.0);
    std::vector<double> sum_cold(n, 0.0);

    auto ensemble_total = [&](std::span<const double> mean_hot, std::span<const double> mean_cold) {
        double total = -purity_h - purity_c;
        for (std::size_t i = 0; i < n; ++i) {
            total += (ph[i] + mean_hot[i]) * (ph[i] + mean_hot[i]);
            total += (pc[i] + mean_cold[i]) * (pc[i] + mean_cold[i]);
        }
        return total;
    };

    Backreaction out;
    out.purity_drift.reserve(measured);
    std::vector<double> mean_hot(n);
    std::vector<double> mean_cold(n);
    for (std::uint64_t c = 0; c < measured; ++c) {
        runner.run(outcome, keep);
        for (std::size_t i = 0; i < n; ++i) {
            sample[i] = outcome.bath_hot[i];
            sample[n + i] = outcome.bath_cold[i];
            sum_hot[i] += outcome.bath_hot[i];
            sum_cold[i] += outcome.bath_cold[i];
            mean_hot[i] = sum_hot[i] / static_cast<double>(c + 1);
            mean_cold[i] = sum_cold[i] / static_cast<double>(c + 1);
        }
        sample[2 * n] = outcome.particle_purity_change;
        stats.add(sample);
        out.purity_drift.push_back(ensemble_total(mean_hot, mean_cold));
    }
    out.total = out.purity_drift.empty() ? 0.0 : out.purity_drift.back();
    out.mean_particle_purity_change = stats.mean(2 * n);

    // Delta-method standard error of the ensemble estimate from batch means.
    const auto& batches = stats.batch_means();
    if (batches.size() >= 2) {
        std::vector<double> lin;
        for (const auto& b : batches) {
            double v = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                v += 2.0 * (ph[i] + mean_hot[i]) * b[i];
                v += 2.0 * (pc[i] + mean_cold[i]) * b[n + i];
            }
            lin.push_back(v);
        }
        double avg = 0.0;
        for (double v : lin) avg += v;
        avg /= static_cast<double>(lin.size());
        double var = 0.0;
        for (double v : lin) var += (v - avg) * (v - avg);
        var /= static_cast<double>(lin.size() - 1);
        out.stderr_total = std::sqrt(var / static_cast<double>(lin.size()));
    }
    out.recent_hot.assign(recent_hot.begin(), recent_hot.end());
    out.recent_cold.assign(recent_cold.begin(), recent_cold.end());
    return out;
}

}  // namespace swapengine
