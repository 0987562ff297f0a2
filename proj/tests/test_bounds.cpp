#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "swapengine/bounds.hpp"

using namespace swapengine;
using namespace testing;

namespace {

const BoundReport& find(const std::vector<BoundReport>& v, const std::string& name) {
    for (const auto& b : v)
        if (b.name == name) return b;
    throw std::runtime_error("no bound " + name);
}

}  // namespace

TEST_CASE("identical baths") {
    const BathSpec c = cold_bath({0.0, 1.0, 2.0}, 1.0);
    const BathSpec h = hot_bath({0.0, 1.0, 2.0}, 1.0);
    const auto w = work_bounds(c, h, CycleParams(0.5, 1.0));
    CHECK(find(w, "kl_exact").value == doctest::Approx(0.0).scale(1.0));
    for (const auto& b : w) {
        if (!b.skipped && b.kind == BoundKind::UpperBound) CHECK(b.value >= -1e-12);
    }
    const BoundReport e = engine_necessary_condition(c, h);
    CHECK(e.satisfied);
    CHECK(e.actual == doctest::Approx(purity(gibbs_population(c))));
    CHECK(refrigerator_necessary_condition(c, h).satisfied);
    CHECK_THROWS_AS(efficiency_bounds(c, h, CycleParams(0.5, 1.0)), Error);
}

TEST_CASE("kl exact form reproduces the work") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> beta(0.1, 10.0);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 2 + t % 5;
        const double b1 = beta(rng), b2 = beta(rng);
        const BathSpec c(random_energies(rng, n), std::max(b1, b2), BathLabel::Cold);
        const BathSpec h(random_energies(rng, n), std::min(b1, b2), BathLabel::Hot);
        const auto w = work_bounds(c, h, CycleParams(0.3 + 0.7 * (t % 10) / 10.0, 1.0));
        const BoundReport& kl = find(w, "kl_exact");
        CHECK(kl.value == doctest::Approx(kl.actual).scale(1.0).epsilon(1e-10));
        for (const auto& b : w) CHECK(b.satisfied);
    }
}

TEST_CASE("two-level efficiency bounds") {
    const BathSpec c = cold_bath({0.0, 1.5}, 1.0);
    const BathSpec h = hot_bath({0.0, 2.0}, 2.0);
    const auto eff = efficiency_bounds(c, h, CycleParams(0.4, 1.0));
    CHECK(find(eff, "exact").value == doctest::Approx(1.0 - 1.5 / 2.0).epsilon(1e-10));
    const double carnot = find(eff, "carnot").value;
    CHECK(carnot == doctest::Approx(0.5));
    for (const auto& b : eff) {
        CHECK(b.satisfied);
        CHECK(b.value <= carnot + 1e-15);
    }
    CHECK(find(eff, "l2_mutual_coincidence").value <= find(eff, "purity").value + 1e-15);
}

TEST_CASE("locality labels") {
    const BathSpec c = cold_bath({0.0, 1.0, 1.5}, 1.0);
    const BathSpec h = hot_bath({0.0, 2.0, 3.0}, 2.0);
    const auto w = work_bounds(c, h, CycleParams(1.0, 1.0));
    CHECK(find(w, "purity_free_energy").locality == Locality::Local);
    CHECK(find(w, "entropy_purity").locality == Locality::Local);
    CHECK(find(w, "compression").locality == Locality::Local);
    CHECK(find(w, "mutual_coincidence").locality == Locality::NonLocal);
    CHECK(find(w, "cauchy_schwarz").locality == Locality::NonLocal);
    // Local bounds depend on nothing but per-bath scalars.
    const LocalScalars lc = local_scalars(c);
    const LocalScalars lh = local_scalars(h);
    CHECK(find(w, "purity_free_energy").value == doctest::Approx(1.0 / 1.0 * local::purity_free_energy(lc, lh)));
    CHECK(find(w, "compression").value == doctest::Approx(local::compression(lc, lh)));
}

TEST_CASE("skipped preconditions") {
    // Level 0 and 1 cross: cold prefers level 0, hot prefers level 1.
    const BathSpec c = cold_bath({0.0, 1.0, 2.0}, 1.0);
    const BathSpec h = hot_bath({1.0, 0.0, 2.0}, 2.0);
    const auto w = work_bounds(c, h, CycleParams(1.0, 1.0));
    CHECK(find(w, "chebyshev").skipped);
    CHECK(find(w, "compression").skipped);
    // Ordered but expanded rather than compressed.
    const auto v = work_bounds(cold_bath({0.0, 3.0}, 1.0), hot_bath({0.0, 2.0}, 2.0), CycleParams(1.0, 1.0));
    CHECK(!find(v, "chebyshev").skipped);
    CHECK(find(v, "compression").skipped);
    CHECK(find(v, "compression").skipped->find("compression") != std::string::npos);
}

TEST_CASE("nonlocal bounds are tighter than their local relaxations") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> beta(0.1, 10.0);
    int engines = 0;
    for (int t = 0; t < 5000; ++t) {
        const std::size_t n = 2 + t % 5;
        const double b1 = beta(rng), b2 = beta(rng);
        const BathSpec c(random_energies(rng, n), std::max(b1, b2), BathLabel::Cold);
        const BathSpec h(random_energies(rng, n), std::min(b1, b2), BathLabel::Hot);
        const Population pc = gibbs_population(c), ph = gibbs_population(h);
        CHECK(norm2(difference(pc.probs(), ph.probs())) >= std::abs(std::sqrt(purity(pc)) - std::sqrt(purity(ph))) - 1e-15);
        const CycleParams p(1.0, 1.0);
        const auto w = work_bounds(c, h, p);
        CHECK(find(w, "mutual_coincidence").value <= find(w, "purity_free_energy").value + 1e-12);
        const auto r = cycle_observables(c, h, p);
        if (r.mode == Mode::Engine) {
            ++engines;
            const auto eff = efficiency_bounds(c, h, p);
            CHECK(find(eff, "l2_mutual_coincidence").value <= find(eff, "purity").value + 1e-12);
            CHECK(engine_necessary_condition(c, h).satisfied);
            CHECK(entropy_difference_condition(c, h).satisfied);
        }
        if (!engine_necessary_condition(c, h).satisfied) CHECK(r.work <= 1e-12);
        if (!refrigerator_necessary_condition(c, h).satisfied) CHECK(r.mode != Mode::Refrigerator);
    }
    CHECK(engines > 100);
}

TEST_CASE("bounds need finite temperatures") {
    const BathSpec c = cold_bath({0.0, 1.0}, 1.0);
    const BathSpec h({0.0, 2.0}, 0.0, BathLabel::Hot);
    CHECK_THROWS_AS(work_bounds(c, h, CycleParams(1.0, 1.0)), Error);
    CHECK_THROWS_AS(engine_necessary_condition(c, h), Error);
}
