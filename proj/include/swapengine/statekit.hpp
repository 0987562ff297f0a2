#pragma once

// Value types shared by every module plus the statistical functionals
// (entropy, purity, divergences, distances) used throughout.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "swapengine/error.hpp"

namespace swapengine {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kDriftTolerance = 1e-9;

enum class BathLabel { Cold, Hot };

std::string_view to_string(BathLabel label);

/// Energy spectrum of a bath particle plus its inverse temperature.
///
/// Level index is an identity label shared with the engine; it is never
/// sorted, so levels may cross between the cold and hot spectra.
/// beta == 0 encodes an infinitely hot bath.
class BathSpec {
public:
    BathSpec(std::vector<double> energies, double beta, BathLabel label);

    static BathSpec from_temperature(std::vector<double> energies, double temperature,
                                     BathLabel label);

    std::span<const double> energies() const { return energies_; }
    std::size_t levels() const { return energies_.size(); }
    double beta() const { return beta_; }
    BathLabel label() const { return label_; }

    /// Throws UltraHotTemperature when beta == 0.
    double temperature() const;
    /// E_max - E_min.
    double gap() const;
    /// F = -T ln Z. Throws UltraHotTemperature when beta == 0.
    double free_energy() const;

    BathSpec with_energies(std::vector<double> energies) const;
    BathSpec with_beta(double beta) const;

private:
    std::vector<double> energies_;
    double beta_;
    BathLabel label_;
};

/// Probability vector over energy levels, indexed by level identity.
class Population {
public:
    /// Validates entries and normalization (drift up to 1e-9 is renormalized away).
    explicit Population(std::vector<double> probs);

    static Population uniform(std::size_t n);

    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

/// Signed population change; entries sum to zero.
class DeltaPopulation {
public:
    explicit DeltaPopulation(std::vector<double> delta);

    static DeltaPopulation between(const Population& from, const Population& to);

    std::span<const double> values() const { return delta_; }
    std::size_t size() const { return delta_.size(); }
    double operator[](std::size_t i) const { return delta_[i]; }

private:
    std::vector<double> delta_;
};

/// Swap strength x and per-stroke collision probability r.
class CycleParams {
public:
    CycleParams(double x, double r);

    double x() const { return x_; }
    double r() const { return r_; }
    /// x * r, the only combination entering steady-state averages.
    double x_tilde() const { return x_ * r_; }

private:
    double x_;
    double r_;
};

Population gibbs_population(const BathSpec& bath);

double shannon_entropy(const Population& p);
double purity(const Population& p);
double mutual_coincidence(const Population& p, const Population& q);
double kl_divergence(const Population& p, const Population& q);
double jeffreys_divergence(const Population& p, const Population& q);
/// Bhattacharyya overlap sum_i sqrt(p_i q_i).
double fidelity(const Population& p, const Population& q);
double wootters_distance(const Population& p, const Population& q);
std::vector<double> centered_energy(const BathSpec& bath);

// Small vector helpers used across modules.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
std::vector<double> difference(std::span<const double> a, std::span<const double> b);

void require_same_length(std::size_t a, std::size_t b, std::string_view what);

}  // namespace swapengine
