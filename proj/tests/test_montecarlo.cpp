#include <doctest.h>

#include "helpers.hpp"
#include "swapengine/montecarlo.hpp"
#include "swapengine/thermo.hpp"

using namespace swapengine;
using namespace testing;

namespace {

SimConfig engine_config(double x, double r, std::uint64_t n, std::uint64_t seed) {
    return SimConfig{cold_bath({0.0, 0.8, 1.5}, 1.0), hot_bath({0.0, 1.4, 2.4}, 2.5), CycleParams(x, r), n,
                     std::nullopt, seed};
}

}  // namespace

TEST_CASE("config validation") {
    SimConfig c = engine_config(0.5, 1.0, 100, 1);
    c.burn_in = 100;
    CHECK_THROWS_AS(simulate(c), Error);
    c.burn_in = 10;
    c.collisions_per_stroke = 0;
    CHECK_THROWS_AS(simulate(c), Error);
    SimConfig m{cold_bath({0.0, 1.0}, 1.0), hot_bath({0.0, 1.0, 2.0}, 2.0), CycleParams(1, 1), 100, 0, 1};
    CHECK_THROWS_AS(simulate(m), Error);
}

TEST_CASE("no collisions means no change") {
    SimConfig c = engine_config(0.7, 0.0, 5000, 3);
    c.burn_in = 0;
    const Trajectory t = simulate(c);
    CHECK(t.mean_work == 0.0);
    for (double p : t.mean_p_a) CHECK(p == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("seed determinism") {
    SimConfig c = engine_config(0.6, 0.7, 20000, 99);
    c.record_work_series = true;
    const Trajectory a = simulate(c);
    const Trajectory b = simulate(c);
    CHECK(a.mean_work == b.mean_work);
    CHECK(a.mean_p_a == b.mean_p_a);
    CHECK(*a.per_cycle_work == *b.per_cycle_work);
    CHECK(a.burn_in == b.burn_in);
    c.seed = 100;
    CHECK(simulate(c).mean_work != a.mean_work);
    CHECK(a.rng_algorithm == "mt19937_64");
}

TEST_CASE("first law bookkeeping with energy drift") {
    const Trajectory t = simulate(engine_config(0.6, 0.7, 30000, 5));
    CHECK(std::abs(t.mean_q_hot + t.mean_q_cold - t.mean_work - t.mean_energy_drift) < 1e-12);
    CHECK(std::abs(t.mean_energy_drift) < 5e-4);
}

TEST_CASE("monte carlo matches the closed form") {
    const SimConfig c = engine_config(0.9, 0.6, 100000, 17);
    const Trajectory t = simulate(c);
    const CycleReport r = cycle_observables(c.cold, c.hot, c.params);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(t.mean_p_a[i] - r.steady.p_a[i]) <= 4 * t.stderr_p_a[i]);
        CHECK(std::abs(t.mean_p_c[i] - r.steady.p_c[i]) <= 4 * t.stderr_p_c[i]);
    }
    CHECK(std::abs(t.mean_work - r.work) <= 4 * t.stderr_work);
    CHECK(t.burn_in >= 1000);
    CHECK(t.burn_in <= 50000);
}

TEST_CASE("fitted dp is parallel to p_h - p_c") {
    const SimConfig c = engine_config(0.8, 0.5, 100000, 23);
    const Trajectory t = simulate(c);
    const Population pc = gibbs_population(c.cold), ph = gibbs_population(c.hot);
    const auto dp = difference(t.mean_p_c, t.mean_p_a);
    const auto dir = difference(ph.probs(), pc.probs());
    const double cosine = dot(dp, dir) / (norm2(dp) * norm2(dir));
    CHECK(cosine > 0.999);
}

TEST_CASE("x and R enter as a product") {
    const Trajectory a = simulate(engine_config(1.0, 0.5, 100000, 31));
    const Trajectory b = simulate(engine_config(0.5, 1.0, 100000, 37));
    const double se = std::sqrt(a.stderr_work * a.stderr_work + b.stderr_work * b.stderr_work);
    CHECK(std::abs(a.mean_work - b.mean_work) <= 3 * se);
}

TEST_CASE("burn-in detector") {
    BurnInDetector flat(100000);
    std::uint64_t i = 0;
    while (!flat.push(1.0)) ++i;
    CHECK(flat.cycles() == 1000);
    BurnInDetector capped(1500);
    double w = 1.0;
    while (!capped.push(w)) w *= 1.01;  // never settles
    CHECK(capped.cycles() == 1500);
}

TEST_CASE("bath backreaction") {
    SUBCASE("full swap leaves bath purity unchanged") {
        const Backreaction b = simulate_bath_backreaction(engine_config(1.0, 1.0, 5000, 1), 10);
        CHECK(std::abs(b.total) < 1e-12);
    }
    SUBCASE("equal baths") {
        SimConfig c = engine_config(0.5, 1.0, 5000, 1);
        c.hot = hot_bath({0.0, 0.8, 1.5}, 1.0);
        const Backreaction b = simulate_bath_backreaction(c, 10);
        CHECK(std::abs(b.total) < 1e-12);
    }
    SUBCASE("engine drift matches the direct computation") {
        const SimConfig c = engine_config(0.5, 1.0, 100000, 41);
        const Backreaction b = simulate_bath_backreaction(c, 16);
        const double expected = purity_change(c.cold, c.hot, c.params).total;
        CHECK(expected < 0.0);
        CHECK(std::abs(b.total - expected) <= 3 * b.stderr_total + 1e-12);
        CHECK(b.recent_hot.size() == 16);
        CHECK(b.purity_drift.size() == 100000 - 1000);
    }
    SUBCASE("partial collision probability") {
        const SimConfig c = engine_config(0.9, 0.5, 100000, 43);
        const Backreaction b = simulate_bath_backreaction(c, 4);
        const double expected = purity_change(c.cold, c.hot, c.params).total;
        CHECK(std::abs(b.total - expected) <= 3 * b.stderr_total + 1e-12);
    }
}
