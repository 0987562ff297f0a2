#include "swapengine/statekit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace swapengine {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidBath: return "InvalidBath";
        case ErrorCode::InvalidPopulation: return "InvalidPopulation";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SupportMismatch: return "SupportMismatch";
        case ErrorCode::XOutOfRange: return "XOutOfRange";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::AsymmetricPhi: return "AsymmetricPhi";
        case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
        case ErrorCode::DegenerateCycle: return "DegenerateCycle";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::UltraHotTemperature: return "UltraHotTemperature";
        case ErrorCode::AmbiguousMaximum: return "AmbiguousMaximum";
        case ErrorCode::ZeroChange: return "ZeroChange";
        case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorCode::NotAnEngine: return "NotAnEngine";
        case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

std::string_view to_string(BathLabel label) {
    return label == BathLabel::Cold ? "cold" : "hot";
}

BathSpec::BathSpec(std::vector<double> energies, double beta, BathLabel label)
    : energies_(std::move(energies)), beta_(beta), label_(label) {
    if (energies_.size() < 2) {
        throw Error(ErrorCode::InvalidBath, "a bath needs at least two levels");
    }
    for (double e : energies_) {
        if (!std::isfinite(e)) throw Error(ErrorCode::InvalidBath, "non-finite level energy");
    }
    if (!std::isfinite(beta_) || beta_ < 0.0) {
        throw Error(ErrorCode::InvalidBath, "inverse temperature must be finite and >= 0");
    }
}

BathSpec BathSpec::from_temperature(std::vector<double> energies, double temperature,
                                    BathLabel label) {
    if (!(temperature > 0.0)) {
        throw Error(ErrorCode::InvalidBath, "temperature must be > 0");
    }
    return BathSpec(std::move(energies), 1.0 / temperature, label);
}

double BathSpec::temperature() const {
    if (beta_ == 0.0) {
        throw Error(ErrorCode::UltraHotTemperature, "temperature is infinite at beta = 0");
    }
    return 1.0 / beta_;
}

double BathSpec::gap() const {
    auto [lo, hi] = std::minmax_element(energies_.begin(), energies_.end());
    return *hi - *lo;
}

double BathSpec::free_energy() const {
    const double t = temperature();
    const double shift = *std::min_element(energies_.begin(), energies_.end());
    double z = 0.0;
    for (double e : energies_) z += std::exp(-beta_ * (e - shift));
    return shift - t * std::log(z);
}

BathSpec BathSpec::with_energies(std::vector<double> energies) const {
    return BathSpec(std::move(energies), beta_, label_);
}

BathSpec BathSpec::with_beta(double beta) const { return BathSpec(energies_, beta, label_); }

Population::Population(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorCode::InvalidPopulation, "empty population");
    double sum = 0.0;
    for (double& p : probs_) {
        if (!std::isfinite(p) || p < -kNormTolerance || p > 1.0 + kNormTolerance) {
            throw Error(ErrorCode::InvalidPopulation,
                        "entry outside [0, 1]: " + std::to_string(p));
        }
        p = std::clamp(p, 0.0, 1.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDriftTolerance) {
        throw Error(ErrorCode::InvalidPopulation,
                    "entries sum to " + std::to_string(sum) + ", expected 1");
    }
    for (double& p : probs_) p /= sum;
}

Population Population::uniform(std::size_t n) {
    return Population(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DeltaPopulation::DeltaPopulation(std::vector<double> delta) : delta_(std::move(delta)) {
    double sum = 0.0;
    double scale = 0.0;
    for (double d : delta_) {
        sum += d;
        scale = std::max(scale, std::abs(d));
    }
    if (std::abs(sum) > kNormTolerance * std::max(1.0, scale)) {
        throw Error(ErrorCode::InvalidPopulation, "population change does not sum to zero");
    }
}

DeltaPopulation DeltaPopulation::between(const Population& from, const Population& to) {
    require_same_length(from.size(), to.size(), "population change");
    return DeltaPopulation(difference(to.probs(), from.probs()));
}

CycleParams::CycleParams(double x, double r) : x_(x), r_(r) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::XOutOfRange, "swap parameter x must lie in [0, 1]");
    if (!(r >= 0.0 && r <= 1.0)) {
        throw Error(ErrorCode::InvalidParams, "collision probability r must lie in [0, 1]");
    }
}

Population gibbs_population(const BathSpec& bath) {
    const auto e = bath.energies();
    std::vector<double> logw(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) logw[i] = -bath.beta() * e[i];
    const double top = *std::max_element(logw.begin(), logw.end());
    double z = 0.0;
    for (double& w : logw) {
        w = std::exp(w - top);
        z += w;
    }
    for (double& w : logw) w /= z;
    return Population(std::move(logw));
}

double shannon_entropy(const Population& p) {
    double s = 0.0;
    for (double v : p.probs()) {
        if (v > 0.0) s -= v * std::log(v);
    }
    return std::max(s, 0.0);
}

double purity(const Population& p) { return dot(p.probs(), p.probs()); }

double mutual_coincidence(const Population& p, const Population& q) {
    require_same_length(p.size(), q.size(), "mutual coincidence");
    return dot(p.probs(), q.probs());
}

double kl_divergence(const Population& p, const Population& q) {
    require_same_length(p.size(), q.size(), "KL divergence");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) {
            throw Error(ErrorCode::SupportMismatch,
                        "q vanishes at level " + std::to_string(i) + " where p does not");
        }
        d += p[i] * std::log(p[i] / q[i]);
    }
    return std::max(d, 0.0);
}

double jeffreys_divergence(const Population& p, const Population& q) {
    return kl_divergence(p, q) + kl_divergence(q, p);
}

double fidelity(const Population& p, const Population& q) {
    require_same_length(p.size(), q.size(), "fidelity");
    double f = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) f += std::sqrt(p[i] * q[i]);
    return f;
}

double wootters_distance(const Population& p, const Population& q) {
    return std::acos(std::clamp(fidelity(p, q), -1.0, 1.0));
}

std::vector<double> centered_energy(const BathSpec& bath) {
    const auto e = bath.energies();
    const double mean = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
    std::vector<double> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] - mean;
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    require_same_length(a.size(), b.size(), "dot product");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
    require_same_length(a.size(), b.size(), "difference");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

void require_same_length(std::size_t a, std::size_t b, std::string_view what) {
    if (a != b) {
        throw Error(ErrorCode::LengthMismatch, std::string(what) + ": lengths " +
                                                   std::to_string(a) + " and " + std::to_string(b));
    }
}

}  // namespace swapengine
