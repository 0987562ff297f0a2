#include "swapengine/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swapengine {

std::string_view to_string(Locality locality) {
    return locality == Locality::Local ? "local" : "nonlocal";
}

namespace {

constexpr double kBoundSlack = 1e-9;

void require_finite_temperatures(const BathSpec& cold, const BathSpec& hot) {
    if (cold.beta() == 0.0 || hot.beta() == 0.0) {
        throw Error(ErrorCode::UltraHotTemperature, "bounds need finite bath temperatures");
    }
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
}

BoundReport upper(std::string name, double value, double actual, Locality locality) {
    BoundReport r;
    r.name = std::move(name);
    r.value = value;
    r.actual = actual;
    r.satisfied = actual <= value + kBoundSlack;
    r.locality = locality;
    return r;
}

BoundReport exact(std::string name, double value, double actual, Locality locality) {
    BoundReport r = upper(std::move(name), value, actual, locality);
    r.kind = BoundKind::Exact;
    r.satisfied = std::abs(value - actual) <= 1e-10 * std::max(1.0, std::abs(actual));
    return r;
}

BoundReport skipped(std::string name, std::string reason, Locality locality) {
    BoundReport r;
    r.name = std::move(name);
    r.locality = locality;
    r.satisfied = true;
    r.skipped = std::move(reason);
    return r;
}

BoundReport necessary(std::string name, double threshold, double actual) {
    BoundReport r;
    r.name = std::move(name);
    r.value = threshold;
    r.actual = actual;
    r.satisfied = actual >= threshold * (1.0 - 1e-12);
    r.locality = Locality::NonLocal;
    r.kind = BoundKind::NecessaryCondition;
    return r;
}

double prefactor(const CycleParams& params) {
    const double xt = params.x_tilde();
    return xt / (2.0 - xt);
}

}  // namespace

LocalScalars local_scalars(const BathSpec& bath) {
    const Population p = gibbs_population(bath);
    const auto centered = centered_energy(bath);
    return LocalScalars{bath.levels(),        bath.temperature(),   shannon_entropy(p),
                        purity(p),            norm2(centered),      dot(bath.energies(), bath.energies())};
}

namespace local {

double purity_free_energy(const LocalScalars& c, const LocalScalars& h) {
    return h.temperature * h.entropy + c.temperature * c.entropy +
           0.5 * (h.temperature + c.temperature) * std::log(c.purity * h.purity);
}

double entropy_purity(const LocalScalars& c, const LocalScalars& h) {
    const double gap = std::sqrt(c.purity) - std::sqrt(h.purity);
    return (h.temperature - c.temperature) * (h.entropy - c.entropy) -
           0.5 * (c.temperature + h.temperature) * gap * gap;
}

double compression(const LocalScalars& c, const LocalScalars& h) {
    const double spread = c.purity + h.purity - 2.0 / static_cast<double>(c.levels);
    return std::sqrt(std::max(spread, 0.0)) *
           std::sqrt(std::max(h.energy_norm_sq - c.energy_norm_sq, 0.0));
}

double carnot(const LocalScalars& c, const LocalScalars& h) { return 1.0 - c.temperature / h.temperature; }

double purity_efficiency(const LocalScalars& c, const LocalScalars& h) {
    return carnot(c, h) -
           c.temperature / h.centered_norm * std::abs(std::sqrt(c.purity) - std::sqrt(h.purity));
}

}  // namespace local

BoundReport engine_necessary_condition(const BathSpec& cold, const BathSpec& hot) {
    require_finite_temperatures(cold, hot);
    const LocalScalars c = local_scalars(cold);
    const LocalScalars h = local_scalars(hot);
    const double threshold = std::exp(-(c.temperature * c.entropy + h.temperature * h.entropy) /
                                      (c.temperature + h.temperature));
    return necessary("engine_mutual_coincidence", threshold,
                     mutual_coincidence(gibbs_population(cold), gibbs_population(hot)));
}

BoundReport refrigerator_necessary_condition(const BathSpec& cold, const BathSpec& hot) {
    require_finite_temperatures(cold, hot);
    const Population pc = gibbs_population(cold);
    return necessary("refrigerator_mutual_coincidence", std::exp(-shannon_entropy(pc)),
                     mutual_coincidence(pc, gibbs_population(hot)));
}

BoundReport entropy_difference_condition(const BathSpec& cold, const BathSpec& hot) {
    require_finite_temperatures(cold, hot);
    const double tc = cold.temperature();
    const double th = hot.temperature();
    if (!(th > tc)) return skipped("entropy_difference", "requires T_h > T_c", Locality::NonLocal);
    const Population pc = gibbs_population(cold);
    const Population ph = gibbs_population(hot);
    const double threshold = (tc * kl_divergence(ph, pc) + th * kl_divergence(pc, ph)) / (th - tc);
    BoundReport r = necessary("entropy_difference", threshold, shannon_entropy(ph) - shannon_entropy(pc));
    r.satisfied = r.actual >= r.value - kBoundSlack;
    return r;
}

bool similarly_ordered(const Population& p, const Population& q) {
    require_same_length(p.size(), q.size(), "ordering check");
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if ((p[i] - p[j]) * (q[i] - q[j]) < 0.0) return false;
        }
    }
    return true;
}

bool is_compression(const BathSpec& cold, const BathSpec& hot) {
    require_same_length(cold.levels(), hot.levels(), "compression check");
    for (std::size_t i = 0; i < cold.levels(); ++i) {
        const double ec = cold.energies()[i];
        const double eh = hot.energies()[i];
        if (ec * eh < 0.0 || std::abs(ec) > std::abs(eh)) return false;
    }
    return true;
}

std::vector<BoundReport> work_bounds(const BathSpec& cold, const BathSpec& hot,
                                     const CycleParams& params) {
    require_finite_temperatures(cold, hot);
    const CycleReport report = cycle_observables(cold, hot, params);
    const double k = prefactor(params);
    const double w = report.work;
    const LocalScalars c = local_scalars(cold);
    const LocalScalars h = local_scalars(hot);
    const Population& pc = report.p_cold;
    const Population& ph = report.p_hot;
    const double pch = mutual_coincidence(pc, ph);

    std::vector<BoundReport> out;
    out.push_back(exact("kl_exact",
                        k * ((h.temperature - c.temperature) * (h.entropy - c.entropy) -
                             c.temperature * kl_divergence(ph, pc) -
                             h.temperature * kl_divergence(pc, ph)),
                        w, Locality::NonLocal));
    out.push_back(upper("mutual_coincidence",
                        k * (c.temperature * c.entropy + h.temperature * h.entropy +
                             (h.temperature + c.temperature) * std::log(pch)),
                        w, Locality::NonLocal));
    out.push_back(upper("purity_free_energy", k * local::purity_free_energy(c, h), w, Locality::Local));
    out.push_back(upper("entropy_purity", k * local::entropy_purity(c, h), w, Locality::Local));

    const auto energy_gap = difference(centered_energy(cold), centered_energy(hot));
    // P_c + P_h - 2 P_ch, evaluated as |p_c - p_h| to avoid cancellation.
    const double spread = norm2(difference(pc.probs(), ph.probs()));
    out.push_back(upper("cauchy_schwarz", k * spread * norm2(energy_gap), std::abs(w), Locality::NonLocal));

    const bool ordered = similarly_ordered(pc, ph);
    if (ordered) {
        const double loose = std::sqrt(std::max(c.purity + h.purity - 2.0 / static_cast<double>(c.levels), 0.0));
        out.push_back(upper("chebyshev", k * loose * norm2(energy_gap), std::abs(w), Locality::NonLocal));
    } else {
        out.push_back(skipped("chebyshev", "populations are not similarly ordered (levels cross)",
                              Locality::NonLocal));
    }
    if (ordered && is_compression(cold, hot)) {
        out.push_back(upper("compression", k * local::compression(c, h), std::abs(w), Locality::Local));
    } else {
        out.push_back(skipped("compression",
                              ordered ? "cold spectrum is not a level-wise compression of the hot one"
                                      : "populations are not similarly ordered (levels cross)",
                              Locality::Local));
    }
    return out;
}

std::vector<BoundReport> efficiency_bounds(const BathSpec& cold, const BathSpec& hot,
                                           const CycleParams& params) {
    require_finite_temperatures(cold, hot);
    const CycleReport report = cycle_observables(cold, hot, params);
    if (report.mode != Mode::Engine || !report.efficiency) {
        throw Error(ErrorCode::NotAnEngine, std::string("cycle runs as ") + std::string(to_string(report.mode)));
    }
    const double eta = *report.efficiency;
    const LocalScalars c = local_scalars(cold);
    const LocalScalars h = local_scalars(hot);
    const Population& pc = report.p_cold;
    const Population& ph = report.p_hot;
    const double carnot = local::carnot(c, h);

    const double q_hot = std::abs(dot(report.steady.dp.values(), hot.energies()));
    const double distance = norm2(difference(pc.probs(), ph.probs()));
    const double lw = wootters_distance(pc, ph);
    const double l2 = distance;

    std::vector<BoundReport> out;
    out.push_back(exact("exact", carnot - c.temperature * report.clausius / q_hot, eta, Locality::NonLocal));
    out.push_back(upper("l2_mutual_coincidence", carnot - c.temperature / h.centered_norm * l2, eta,
                        Locality::NonLocal));
    out.push_back(upper("purity", local::purity_efficiency(c, h), eta, Locality::Local));
    out.push_back(upper("wootters",
                        carnot - c.temperature * (16.0 / (std::numbers::pi * std::numbers::pi)) * lw * lw /
                                     (distance * h.centered_norm),
                        eta, Locality::NonLocal));
    out.push_back(upper("carnot", carnot, eta, Locality::Local));
    return out;
}

}  // namespace swapengine
