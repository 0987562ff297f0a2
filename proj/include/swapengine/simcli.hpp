#pragma once

// Command-line front end: config parsing and the steady | sweep | fuzz | mc |
// ultrahot commands. Each command renders its output to a string so the
// same code backs the binary, the tests and the Python module.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swapengine/fuzz.hpp"
#include "swapengine/montecarlo.hpp"
#include "swapengine/regimes.hpp"
#include "swapengine/statekit.hpp"

namespace swapengine::cli {

enum ExitCode : int { kOk = 0, kInvariantViolation = 1, kConfigError = 2, kDomainError = 3 };

/// Config error anchored at a line of the source (line 0: whole file).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

enum class SweepParameter { ColdScale, Compression, X, R, BetaCold, BetaHot };

std::string_view to_string(SweepParameter p);

struct SweepSpec {
    SweepParameter parameter;
    double lo;
    double hi;
    int steps;

    double value(int i) const;
};

struct McSection {
    std::uint64_t n_cycles = 100'000;
    std::optional<std::uint64_t> burn_in;
    std::uint64_t seed = 0;
    int collisions_per_stroke = 1;
    std::size_t batches = 100;
};

struct UltraHotSection {
    std::optional<NormConstraint> constraint;
    std::uint64_t seed = 0;
    std::size_t trials = 2000;
};

struct Config {
    BathSpec cold;
    BathSpec hot;
    CycleParams params;
    std::optional<SweepSpec> sweep;
    McSection mc;
    UltraHotSection ultrahot;
};

/// Format:
///   # comment
///   [cold]            energies = 0, 1    temperature = 1  (or beta = 1)
///   [hot]             energies = 0, 2    temperature = 2
///   [params]          x = 1              r = 1
///   [sweep]           parameter = cold_scale|compression|x|r|beta_c|beta_h
///                     lo = 0.1  hi = 3  steps = 200
///   [mc]              n_cycles, burn_in, seed, collisions_per_stroke, batches
///   [ultrahot]        constraint = fix_hot_norm|fix_cold_norm, seed, trials
/// [sweep], [mc] and [ultrahot] are optional; [params] defaults to x = r = 1.
Config parse_config(std::istream& in, const std::string& source = "<config>");
Config load_config(const std::string& path);

/// Instance at one sweep point; cold_scale multiplies the cold energies,
/// compression sets E_c = E_h / C.
struct SweepPoint {
    BathSpec cold;
    BathSpec hot;
    CycleParams params;
};
SweepPoint sweep_point(const Config& config, double value);

/// JSON with every float printed to 17 significant digits.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);
std::string format_double(double v);

nlohmann::ordered_json steady_report(const BathSpec& cold, const BathSpec& hot, const CycleParams& params);
nlohmann::ordered_json mc_report(const Config& config);
nlohmann::ordered_json ultrahot_report(const Config& config);
nlohmann::ordered_json fuzz_report(const FuzzSummary& summary);

/// Header: value,W,Q_h,Q_c,eta,mode,R1,entropy_production
std::string sweep_csv(const Config& config);

/// Full CLI; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swapengine::cli
