#include "swapengine/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "swapengine/collision.hpp"

namespace swapengine {

namespace {

double prefactor(double x_tilde) { return x_tilde / (2.0 - x_tilde); }

// First-order work for given centered spectra, without the x_tilde prefactor.
double first_order_bracket(std::span<const double> ec, std::span<const double> eh, double beta_c,
                           double beta_h) {
    const double n = static_cast<double>(ec.size());
    return ((beta_c + beta_h) * dot(ec, eh) - beta_c * dot(ec, ec) - beta_h * dot(eh, eh)) / n;
}

std::vector<double> scaled(std::span<const double> v, double s) {
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x *= s;
    return out;
}

}  // namespace

double ultra_hot_smallness(const BathSpec& cold, const BathSpec& hot) {
    return std::max(cold.beta() * cold.gap(), hot.beta() * hot.gap());
}

double ultra_hot_work(const BathSpec& cold, const BathSpec& hot, const CycleParams& params) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    return prefactor(params.x_tilde()) *
           first_order_bracket(centered_energy(cold), centered_energy(hot), cold.beta(), hot.beta());
}

UltraHotCondition ultra_hot_engine_condition(const BathSpec& cold, const BathSpec& hot) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    const double bc = cold.beta();
    const double bh = hot.beta();
    if (!(bc > bh && bh > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "ultra-hot engine condition needs beta_c > beta_h > 0");
    }
    const auto ec = centered_energy(cold);
    const auto eh = centered_energy(hot);
    const double nc2 = dot(ec, ec);
    const double nh2 = dot(eh, eh);
    const bool sufficient = dot(ec, eh) > (bc * nc2 + bh * nh2) / (bc + bh);
    bool ratio_ok = false;
    if (nc2 > 0.0) {
        const double ratio = std::sqrt(nh2 / nc2);
        ratio_ok = ratio > 1.0 && ratio < bc / bh;
    }
    return UltraHotCondition{sufficient, ratio_ok};
}

std::vector<double> ultra_hot_clausius_terms(const BathSpec& cold, const BathSpec& hot,
                                             const CycleParams& params) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    const auto ec = centered_energy(cold);
    const auto eh = centered_energy(hot);
    const double k = prefactor(params.x_tilde()) / static_cast<double>(ec.size());
    std::vector<double> terms(ec.size());
    for (std::size_t i = 0; i < ec.size(); ++i) {
        const double f = hot.beta() * eh[i] - cold.beta() * ec[i];
        terms[i] = k * f * f;
    }
    return terms;
}

std::optional<double> uniform_compression_ratio(const BathSpec& cold, const BathSpec& hot) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    const auto ec = centered_energy(cold);
    const auto eh = centered_energy(hot);
    const double nc2 = dot(ec, ec);
    if (nc2 == 0.0) return std::nullopt;
    const double c = dot(ec, eh) / nc2;
    double residual = 0.0;
    for (std::size_t i = 0; i < ec.size(); ++i) residual = std::max(residual, std::abs(eh[i] - c * ec[i]));
    const double scale = std::max(1.0, std::sqrt(dot(eh, eh)));
    if (residual > 1e-9 * scale) return std::nullopt;
    return c;
}

Mode uniform_compression_classify(double c, double t_c, double t_h) {
    if (!(c > 0.0) || !(t_c > 0.0) || !(t_h > t_c)) {
        throw Error(ErrorCode::InvalidParams, "classification needs C > 0 and 0 < T_c < T_h");
    }
    if (c == 1.0) return Mode::Degenerate;
    if (c < 1.0) return Mode::Refrigerator;
    if (c >= t_h / t_c) return Mode::Heater;
    return Mode::Engine;
}

UltraHotReport ultra_hot_report(const BathSpec& cold, const BathSpec& hot, const CycleParams& params) {
    UltraHotReport r{};
    r.w_first_order = ultra_hot_work(cold, hot, params);
    r.engine_condition = r.w_first_order > 0.0;
    r.warning = ultra_hot_smallness(cold, hot) > kUltraHotValidity;
    r.compression_ratio = uniform_compression_ratio(cold, hot);
    if (r.compression_ratio && r.engine_condition) r.eta = 1.0 - 1.0 / *r.compression_ratio;
    return r;
}

std::string_view to_string(NormConstraint constraint) {
    return constraint == NormConstraint::FixHotNorm ? "fix_hot_norm" : "fix_cold_norm";
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

UltraHotOptimum ultra_hot_optimize(const BathSpec& hot, double t_c, NormConstraint constraint,
                                   const CycleParams& params, std::uint64_t seed,
                                   std::size_t perturbation_trials) {
    const double t_h = hot.temperature();
    if (!(t_c > 0.0 && t_c < t_h)) {
        throw Error(ErrorCode::InvalidParams, "optimization needs 0 < T_c < T_h");
    }
    const auto shape = centered_energy(hot);
    const double shape_norm2 = dot(shape, shape);
    if (shape_norm2 <= 0.0) throw Error(ErrorCode::DegenerateSpectrum, "hot spectrum is flat");

    const double bc = 1.0 / t_c;
    const double bh = hot.beta();
    const double k = prefactor(params.x_tilde());
    const bool fix_hot = constraint == NormConstraint::FixHotNorm;

    // Uniform compression E_h = C E_c with the constrained side equal to `shape`.
    auto spectra = [&](double c) {
        return fix_hot ? std::pair{scaled(shape, 1.0 / c), shape} : std::pair{shape, scaled(shape, c)};
    };
    auto work_at = [&](double c) {
        auto [ec, eh] = spectra(c);
        return k * first_order_bracket(ec, eh, bc, bh);
    };

    UltraHotOptimum out{};
    out.constraint = constraint;
    const double n = static_cast<double>(shape.size());
    if (fix_hot) {
        out.compression_analytic = t_h / (0.5 * (t_h + t_c));
        out.w_max_analytic = k / n * (t_h - t_c) * (t_h - t_c) / (4.0 * t_c * t_h * t_h) * shape_norm2;
    } else {
        out.compression_analytic = 0.5 * (t_h + t_c) / t_c;
        out.w_max_analytic = k / n * (t_h - t_c) * (t_h - t_c) / (4.0 * t_c * t_c * t_h) * shape_norm2;
    }
    out.eta_analytic = 1.0 - 1.0 / out.compression_analytic;

    out.compression_numeric = golden_section_maximize(work_at, 1.0, t_h / t_c);
    out.eta_numeric = 1.0 - 1.0 / out.compression_numeric;
    out.w_max_numeric = work_at(out.compression_numeric);

    // Parallel spectra should beat any rotated spectrum of the same norms.
    auto [ec_opt, eh_opt] = spectra(out.compression_analytic);
    const double w_parallel = k * first_order_bracket(ec_opt, eh_opt, bc, bh);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> amplitude(0.0, 2.0);
    double max_gain = -std::numeric_limits<double>::infinity();
    std::vector<double>& moving = fix_hot ? ec_opt : eh_opt;
    const std::vector<double> base = moving;
    const double base_norm = norm2(base);
    for (std::size_t t = 0; t < perturbation_trials; ++t) {
        std::vector<double> v(base.size());
        double mean = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            mean += x;
        }
        mean /= static_cast<double>(v.size());
        const double eps = amplitude(rng) * base_norm;
        std::vector<double> trial(base.size());
        for (std::size_t i = 0; i < v.size(); ++i) trial[i] = base[i] + eps * (v[i] - mean);
        const double trial_norm = norm2(trial);
        if (trial_norm == 0.0) continue;
        for (double& x : trial) x *= base_norm / trial_norm;
        moving = trial;
        max_gain = std::max(max_gain, k * first_order_bracket(ec_opt, eh_opt, bc, bh) - w_parallel);
    }
    moving = base;
    out.perturbation_trials = perturbation_trials;
    out.max_perturbation_gain = perturbation_trials > 0 ? max_gain : 0.0;

    const BathSpec cold_opt(ec_opt, bc, BathLabel::Cold);
    const BathSpec hot_opt(eh_opt, bh, BathLabel::Hot);
    out.report = ultra_hot_report(cold_opt, hot_opt, params);
    out.report.w_max = out.w_max_analytic;
    return out;
}

NcaComparison nca_comparison(double t_c, double t_h) {
    if (!(t_c > 0.0 && t_h >= t_c)) {
        throw Error(ErrorCode::InvalidParams, "NCA comparison needs 0 < T_c <= T_h");
    }
    const double carnot = 1.0 - t_c / t_h;
    NcaComparison r{0.5 * carnot, 1.0 - std::sqrt(t_c / t_h), carnot / (2.0 - carnot), false};
    r.ordered = r.eta_half_carnot <= r.eta_nca + 1e-15 && r.eta_nca <= r.eta_sym + 1e-15;
    return r;
}

QuasiStaticCheck quasi_static_check(const BathSpec& bath, const Population& engine_pop, double x) {
    require_same_length(bath.levels(), engine_pop.size(), "bath and engine populations");
    const double t = bath.temperature();
    const Population pb = gibbs_population(bath);
    const Population after = population_swap(x, engine_pop, pb).second;
    const auto delta = difference(after.probs(), pb.probs());
    QuasiStaticCheck r{};
    r.ds_exact = shannon_entropy(after) - shannon_entropy(pb);
    r.dq_over_t = dot(delta, bath.energies()) / t;
    r.rel_err = r.ds_exact != 0.0 ? std::abs(r.ds_exact - r.dq_over_t) / std::abs(r.ds_exact) : 0.0;
    return r;
}

EntropyWorkCheck multi_collision_entropy_work(const BathSpec& cold, const BathSpec& hot, double x,
                                              int collisions) {
    require_same_length(cold.levels(), hot.levels(), "cold and hot spectra");
    if (collisions < 1) throw Error(ErrorCode::InvalidParams, "need at least one collision per stroke");
    const Population pc = gibbs_population(cold);
    const Population ph = gibbs_population(hot);
    const double x_stroke = 1.0 - std::pow(1.0 - x, collisions);
    const SteadyState steady = steady_populations(pc, ph, x_stroke);

    double ds_hot = 0.0;
    double ds_cold = 0.0;
    Population engine = steady.p_a;
    auto stroke = [&](const Population& bath_pop, double& ds) {
        for (int i = 0; i < collisions; ++i) {
            auto [e, b] = population_swap(x, engine, bath_pop);
            ds += shannon_entropy(b) - shannon_entropy(bath_pop);
            engine = std::move(e);
        }
    };
    stroke(ph, ds_hot);
    const Population p_c_stage = engine;
    stroke(pc, ds_cold);

    EntropyWorkCheck r{};
    r.work = dot(difference(p_c_stage.probs(), steady.p_a.probs()),
                 difference(hot.energies(), cold.energies()));
    r.work_from_entropy = -(hot.temperature() * ds_hot + cold.temperature() * ds_cold);
    return r;
}

}  // namespace swapengine
