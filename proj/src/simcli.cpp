#include "swapengine/simcli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "swapengine/bounds.hpp"
#include "swapengine/thermo.hpp"

namespace swapengine::cli {

using nlohmann::ordered_json;

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

std::string_view to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::ColdScale: return "cold_scale";
        case SweepParameter::Compression: return "compression";
        case SweepParameter::X: return "x";
        case SweepParameter::R: return "r";
        case SweepParameter::BetaCold: return "beta_c";
        case SweepParameter::BetaHot: return "beta_h";
    }
    return "unknown";
}

double SweepSpec::value(int i) const {
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

// ---- config parsing ----

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Entry {
    std::string value;
    int line;
};

using Section = std::map<std::string, Entry>;

class RawConfig {
public:
    RawConfig(std::istream& in, std::string source) : source_(std::move(source)) {
        static const std::map<std::string, std::set<std::string>> schema{
            {"cold", {"energies", "temperature", "beta"}},
            {"hot", {"energies", "temperature", "beta"}},
            {"params", {"x", "r"}},
            {"sweep", {"parameter", "lo", "hi", "steps"}},
            {"mc", {"n_cycles", "burn_in", "seed", "collisions_per_stroke", "batches"}},
            {"ultrahot", {"constraint", "seed", "trials"}},
        };
        std::string line;
        std::string current;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            const auto hash = line.find('#');
            const std::string text = trim(hash == std::string::npos ? line : line.substr(0, hash));
            if (text.empty()) continue;
            if (text.front() == '[') {
                if (text.back() != ']') fail(number, "unterminated section header");
                current = trim(text.substr(1, text.size() - 2));
                if (!schema.count(current)) fail(number, "unknown section [" + current + "]");
                if (sections_.count(current)) fail(number, "duplicate section [" + current + "]");
                sections_[current];
                section_lines_[current] = number;
                continue;
            }
            const auto eq = text.find('=');
            if (eq == std::string::npos) fail(number, "expected key = value");
            if (current.empty()) fail(number, "key outside of any section");
            const std::string key = trim(text.substr(0, eq));
            const std::string value = trim(text.substr(eq + 1));
            if (!schema.at(current).count(key)) fail(number, "unknown key '" + key + "' in [" + current + "]");
            if (value.empty()) fail(number, "empty value for '" + key + "'");
            auto& section = sections_[current];
            if (section.count(key)) fail(number, "duplicate key '" + key + "'");
            section[key] = Entry{value, number};
        }
        last_line_ = number;
    }

    [[noreturn]] void fail(int line, const std::string& message) const {
        throw ConfigError(source_, line, message);
    }

    const Section* section(const std::string& name) const {
        auto it = sections_.find(name);
        return it == sections_.end() ? nullptr : &it->second;
    }

    int section_line(const std::string& name) const {
        auto it = section_lines_.find(name);
        return it == section_lines_.end() ? last_line_ : it->second;
    }

    const Entry& require(const std::string& sec, const std::string& key) const {
        const Section* s = section(sec);
        if (!s) fail(last_line_, "missing section [" + sec + "]");
        auto it = s->find(key);
        if (it == s->end()) fail(section_line(sec), "missing key '" + key + "' in [" + sec + "]");
        return it->second;
    }

    const Entry* find(const std::string& sec, const std::string& key) const {
        const Section* s = section(sec);
        if (!s) return nullptr;
        auto it = s->find(key);
        return it == s->end() ? nullptr : &it->second;
    }

    double number(const Entry& e) const {
        double v = 0.0;
        const char* b = e.value.data();
        const char* end = b + e.value.size();
        auto [ptr, ec] = std::from_chars(b, end, v);
        if (ec != std::errc{} || ptr != end || !std::isfinite(v)) fail(e.line, "not a number: '" + e.value + "'");
        return v;
    }

    std::uint64_t count(const Entry& e) const {
        std::uint64_t v = 0;
        const char* b = e.value.data();
        const char* end = b + e.value.size();
        auto [ptr, ec] = std::from_chars(b, end, v);
        if (ec != std::errc{} || ptr != end) fail(e.line, "not a non-negative integer: '" + e.value + "'");
        return v;
    }

    std::vector<double> list(const Entry& e) const {
        std::vector<double> out;
        std::stringstream ss(e.value);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(number(Entry{trim(item), e.line}));
        return out;
    }

    // Wraps library validation so bad values are reported at their line.
    template <typename F>
    auto at_line(int line, F&& make) const {
        try {
            return make();
        } catch (const Error& err) {
            fail(line, err.what());
        }
    }

private:
    std::string source_;
    std::map<std::string, Section> sections_;
    std::map<std::string, int> section_lines_;
    int last_line_ = 0;
};

BathSpec parse_bath(const RawConfig& raw, const std::string& name, BathLabel label) {
    const Entry& energies = raw.require(name, "energies");
    const Entry* t = raw.find(name, "temperature");
    const Entry* b = raw.find(name, "beta");
    if ((t == nullptr) == (b == nullptr)) {
        raw.fail(raw.section_line(name), "[" + name + "] needs exactly one of temperature or beta");
    }
    auto levels = raw.list(energies);
    if (t) {
        const double temp = raw.number(*t);
        return raw.at_line(t->line, [&] { return BathSpec::from_temperature(levels, temp, label); });
    }
    const double beta = raw.number(*b);
    return raw.at_line(b->line, [&] { return BathSpec(levels, beta, label); });
}

SweepParameter parse_sweep_parameter(const RawConfig& raw, const Entry& e) {
    static const std::map<std::string, SweepParameter> names{
        {"cold_scale", SweepParameter::ColdScale}, {"compression", SweepParameter::Compression},
        {"x", SweepParameter::X},                  {"r", SweepParameter::R},
        {"beta_c", SweepParameter::BetaCold},      {"beta_h", SweepParameter::BetaHot},
    };
    auto it = names.find(e.value);
    if (it == names.end()) raw.fail(e.line, "unknown sweep parameter '" + e.value + "'");
    return it->second;
}

}  // namespace

Config parse_config(std::istream& in, const std::string& source) {
    const RawConfig raw(in, source);
    BathSpec cold = parse_bath(raw, "cold", BathLabel::Cold);
    BathSpec hot = parse_bath(raw, "hot", BathLabel::Hot);
    if (cold.levels() != hot.levels()) {
        raw.fail(raw.require("hot", "energies").line, "hot and cold spectra have different lengths");
    }

    double x = 1.0;
    double r = 1.0;
    int params_line = raw.section_line("params");
    if (const Entry* e = raw.find("params", "x")) {
        x = raw.number(*e);
        params_line = e->line;
    }
    if (const Entry* e = raw.find("params", "r")) r = raw.number(*e);
    const CycleParams params = raw.at_line(params_line, [&] { return CycleParams(x, r); });

    Config config{std::move(cold), std::move(hot), params, std::nullopt, {}, {}};

    if (raw.section("sweep")) {
        SweepSpec s{};
        s.parameter = parse_sweep_parameter(raw, raw.require("sweep", "parameter"));
        s.lo = raw.number(raw.require("sweep", "lo"));
        const Entry& hi = raw.require("sweep", "hi");
        s.hi = raw.number(hi);
        if (!(s.lo < s.hi)) raw.fail(hi.line, "sweep needs lo < hi");
        const Entry& steps = raw.require("sweep", "steps");
        const std::uint64_t n = raw.count(steps);
        if (n < 2 || n > 10'000'000) raw.fail(steps.line, "sweep needs 2 <= steps <= 1e7");
        s.steps = static_cast<int>(n);
        config.sweep = s;
    }

    if (const Entry* e = raw.find("mc", "n_cycles")) config.mc.n_cycles = raw.count(*e);
    if (const Entry* e = raw.find("mc", "burn_in")) config.mc.burn_in = raw.count(*e);
    if (const Entry* e = raw.find("mc", "seed")) config.mc.seed = raw.count(*e);
    if (const Entry* e = raw.find("mc", "collisions_per_stroke")) {
        const auto c = raw.count(*e);
        if (c < 1 || c > 1'000'000) raw.fail(e->line, "collisions_per_stroke must lie in [1, 1e6]");
        config.mc.collisions_per_stroke = static_cast<int>(c);
    }
    if (const Entry* e = raw.find("mc", "batches")) config.mc.batches = raw.count(*e);
    if (raw.section("mc")) {
        const SimConfig probe{config.cold,         config.hot,  config.params, config.mc.n_cycles,
                              config.mc.burn_in,   config.mc.seed, config.mc.collisions_per_stroke, false,
                              config.mc.batches};
        raw.at_line(raw.section_line("mc"), [&] {
            probe.validate();
            return 0;
        });
    }

    if (const Entry* e = raw.find("ultrahot", "constraint")) {
        if (e->value == "fix_hot_norm") {
            config.ultrahot.constraint = NormConstraint::FixHotNorm;
        } else if (e->value == "fix_cold_norm") {
            config.ultrahot.constraint = NormConstraint::FixColdNorm;
        } else {
            raw.fail(e->line, "constraint must be fix_hot_norm or fix_cold_norm");
        }
    }
    if (const Entry* e = raw.find("ultrahot", "seed")) config.ultrahot.seed = raw.count(*e);
    if (const Entry* e = raw.find("ultrahot", "trials")) config.ultrahot.trials = raw.count(*e);
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    return parse_config(in, path);
}

SweepPoint sweep_point(const Config& config, double value) {
    const auto& cold = config.cold;
    const auto& hot = config.hot;
    auto scaled = [](std::span<const double> e, double s) {
        std::vector<double> out(e.begin(), e.end());
        for (double& v : out) v *= s;
        return out;
    };
    switch (config.sweep ? config.sweep->parameter : SweepParameter::ColdScale) {
        case SweepParameter::ColdScale:
            return {cold.with_energies(scaled(cold.energies(), value)), hot, config.params};
        case SweepParameter::Compression:
            return {cold.with_energies(scaled(hot.energies(), 1.0 / value)), hot, config.params};
        case SweepParameter::X:
            return {cold, hot, CycleParams(value, config.params.r())};
        case SweepParameter::R:
            return {cold, hot, CycleParams(config.params.x(), value)};
        case SweepParameter::BetaCold:
            return {cold.with_beta(value), hot, config.params};
        case SweepParameter::BetaHot:
            return {cold, hot.with_beta(value), config.params};
    }
    throw std::logic_error("unhandled sweep parameter");
}

// ---- output ----

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_json(std::string& out, const ordered_json& j, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += ordered_json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                write_json(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                write_json(out, v, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

ordered_json vec(std::span<const double> v) { return ordered_json(std::vector<double>(v.begin(), v.end())); }

ordered_json bound_json(const BoundReport& b) {
    ordered_json j;
    j["name"] = b.name;
    j["locality"] = std::string(to_string(b.locality));
    j["kind"] = b.kind == BoundKind::UpperBound ? "upper_bound" : b.kind == BoundKind::Exact ? "exact" : "necessary_condition";
    if (b.skipped) {
        j["skipped"] = *b.skipped;
        return j;
    }
    j["value"] = b.value;
    j["actual"] = b.actual;
    j["satisfied"] = b.satisfied;
    return j;
}

ordered_json bath_json(const BathSpec& b) {
    ordered_json j;
    j["energies"] = vec(b.energies());
    j["beta"] = b.beta();
    return j;
}

std::string compact_row(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    s += '\n';
    return s;
}

}  // namespace

std::string dump_json(const ordered_json& j, int indent) {
    std::string out;
    write_json(out, j, indent, 0);
    out += '\n';
    return out;
}

ordered_json steady_report(const BathSpec& cold, const BathSpec& hot, const CycleParams& params) {
    const CycleReport r = cycle_observables(cold, hot, params);
    ordered_json j;
    j["mode"] = std::string(to_string(r.mode));
    j["cold"] = bath_json(cold);
    j["hot"] = bath_json(hot);
    j["x"] = params.x();
    j["r"] = params.r();
    j["x_tilde"] = r.x_tilde;
    j["p_cold"] = vec(r.p_cold.probs());
    j["p_hot"] = vec(r.p_hot.probs());
    j["p_a"] = vec(r.steady.p_a.probs());
    j["p_c"] = vec(r.steady.p_c.probs());
    j["dp"] = vec(r.steady.dp.values());
    j["q_hot"] = r.q_hot;
    j["q_cold"] = r.q_cold;
    j["work"] = r.work;
    j["efficiency"] = r.efficiency ? ordered_json(*r.efficiency) : ordered_json(nullptr);
    j["entropy_production"] = r.clausius;

    ordered_json clausius;
    for (int m : {1, 2, 3}) clausius["R" + std::to_string(2 * m - 1)] = clausius_number(cold, hot, params, m);
    j["clausius"] = clausius;
    try {
        const ClausiusLevel level = clausius_dominated_level(cold, hot, params);
        j["clausius_dominated_level"] = {{"index", level.index},
                                         {"factor", level.factor},
                                         {"bath_change", level.bath_change},
                                         {"sign_match", level.sign_match}};
    } catch (const Error& e) {
        j["clausius_dominated_level"] = {{"unavailable", std::string(to_string(e.code()))}};
    }

    const PurityChange pc = purity_change(cold, hot, params);
    j["purity_change"] = {{"delta_p_hot", pc.delta_p_hot}, {"delta_p_cold", pc.delta_p_cold}, {"total", pc.total}};
    const PurityBound pb = purity_change_lower_bound(cold, hot, params);
    j["purity_change_lower_bound"] = {
        {"coefficient", pb.coefficient}, {"bound", pb.bound}, {"actual", pb.actual}, {"satisfied", pb.satisfied}};

    ordered_json necessary = ordered_json::array();
    necessary.push_back(bound_json(engine_necessary_condition(cold, hot)));
    necessary.push_back(bound_json(entropy_difference_condition(cold, hot)));
    necessary.push_back(bound_json(refrigerator_necessary_condition(cold, hot)));
    j["necessary_conditions"] = necessary;

    ordered_json work = ordered_json::array();
    for (const auto& b : work_bounds(cold, hot, params)) work.push_back(bound_json(b));
    j["work_bounds"] = work;
    ordered_json eff = ordered_json::array();
    if (r.mode == Mode::Engine) {
        for (const auto& b : efficiency_bounds(cold, hot, params)) eff.push_back(bound_json(b));
    }
    j["efficiency_bounds"] = eff;
    return j;
}

std::string sweep_csv(const Config& config) {
    if (!config.sweep) throw ConfigError("<config>", 0, "missing section [sweep]");
    const SweepSpec& s = *config.sweep;
    std::string out = "value,W,Q_h,Q_c,eta,mode,R1,entropy_production\n";
    for (int i = 0; i < s.steps; ++i) {
        const double v = s.value(i);
        const SweepPoint p = sweep_point(config, v);
        const CycleReport r = cycle_observables(p.cold, p.hot, p.params);
        const double r1 = clausius_number(p.cold, p.hot, p.params, 1);
        const double production = -r.q_hot * p.hot.beta() - r.q_cold * p.cold.beta();
        out += compact_row({format_double(v), format_double(r.work), format_double(r.q_hot),
                            format_double(r.q_cold), r.efficiency ? format_double(*r.efficiency) : "",
                            std::string(to_string(r.mode)), format_double(r1), format_double(production)});
    }
    return out;
}

ordered_json mc_report(const Config& config) {
    SimConfig sim{config.cold,         config.hot,     config.params, config.mc.n_cycles,
                  config.mc.burn_in,   config.mc.seed, config.mc.collisions_per_stroke, false,
                  config.mc.batches};
    const Trajectory t = simulate(sim);
    ordered_json j;
    j["rng_algorithm"] = std::string(t.rng_algorithm);
    j["seed"] = config.mc.seed;
    j["n_cycles"] = config.mc.n_cycles;
    j["burn_in"] = t.burn_in;
    j["measured_cycles"] = t.measured_cycles;
    j["collisions_per_stroke"] = config.mc.collisions_per_stroke;
    j["mean_p_a"] = t.mean_p_a;
    j["mean_p_c"] = t.mean_p_c;
    j["stderr_p_a"] = t.stderr_p_a;
    j["stderr_p_c"] = t.stderr_p_c;
    j["mean_work"] = t.mean_work;
    j["stderr_work"] = t.stderr_work;
    j["mean_q_hot"] = t.mean_q_hot;
    j["mean_q_cold"] = t.mean_q_cold;
    j["mean_energy_drift"] = t.mean_energy_drift;
    if (config.mc.collisions_per_stroke == 1 && config.params.x_tilde() > 0.0) {
        const CycleReport r = cycle_observables(config.cold, config.hot, config.params);
        j["closed_form"] = {{"p_a", vec(r.steady.p_a.probs())},
                            {"p_c", vec(r.steady.p_c.probs())},
                            {"work", r.work}};
    }
    return j;
}

ordered_json ultrahot_report(const Config& config) {
    const UltraHotReport r = ultra_hot_report(config.cold, config.hot, config.params);
    ordered_json j;
    j["smallness"] = ultra_hot_smallness(config.cold, config.hot);
    j["w_first_order"] = r.w_first_order;
    j["engine_condition"] = r.engine_condition;
    j["warning"] = r.warning;
    j["compression_ratio"] = r.compression_ratio ? ordered_json(*r.compression_ratio) : ordered_json(nullptr);
    j["eta"] = r.eta ? ordered_json(*r.eta) : ordered_json(nullptr);
    if (config.cold.beta() > 0.0 && config.hot.beta() > 0.0) {
        const CycleReport exact = cycle_observables(config.cold, config.hot, config.params);
        j["w_exact"] = exact.work;
    }
    if (config.ultrahot.constraint) {
        const UltraHotOptimum o =
            ultra_hot_optimize(config.hot, config.cold.temperature(), *config.ultrahot.constraint, config.params,
                               config.ultrahot.seed, config.ultrahot.trials);
        j["optimum"] = {{"constraint", std::string(to_string(o.constraint))},
                        {"compression_analytic", o.compression_analytic},
                        {"compression_numeric", o.compression_numeric},
                        {"eta_analytic", o.eta_analytic},
                        {"eta_numeric", o.eta_numeric},
                        {"w_max_analytic", o.w_max_analytic},
                        {"w_max_numeric", o.w_max_numeric},
                        {"perturbation_trials", o.perturbation_trials},
                        {"max_perturbation_gain", o.max_perturbation_gain}};
    }
    return j;
}

ordered_json fuzz_report(const FuzzSummary& s) {
    ordered_json j;
    j["n"] = s.n;
    j["seed"] = s.seed;
    j["max_levels"] = s.max_levels;
    j["passed"] = s.all_passed();
    ordered_json modes;
    for (const auto& [name, count] : s.modes) modes[name] = count;
    j["modes"] = modes;
    ordered_json inv = ordered_json::array();
    for (const auto& t : s.invariants) {
        ordered_json e;
        e["name"] = t.name;
        e["checked"] = t.checked;
        e["passed"] = t.passed;
        e["failed"] = t.failed();
        if (t.first_failure) {
            const auto& c = *t.first_failure;
            e["first_counterexample"] = {{"index", c.instance.index},
                                         {"cold_energies", c.instance.cold_energies},
                                         {"hot_energies", c.instance.hot_energies},
                                         {"beta_c", c.instance.beta_c},
                                         {"beta_h", c.instance.beta_h},
                                         {"x_tilde", c.instance.x_tilde},
                                         {"value", c.value},
                                         {"reference", c.reference},
                                         {"detail", c.detail}};
        } else {
            e["first_counterexample"] = nullptr;
        }
        inv.push_back(e);
    }
    j["invariants"] = inv;
    j["purity_constant"] = {{"fitted_c", s.purity_fit.c},
                            {"samples", s.purity_fit.samples},
                            {"max_abs_residual", s.purity_fit.max_abs_residual}};
    return j;
}

// ---- command line ----

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partial-swap quantum Otto cycle toolkit", "simcli"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::size_t n = 10'000;
    std::size_t max_levels = 6;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config_path, "config file");
        if (needs_config) opt->required();
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--seed", seed, "RNG seed override");
    };
    auto* steady = app.add_subcommand("steady", "steady-state report as JSON");
    auto* sweep = app.add_subcommand("sweep", "parameter sweep as CSV");
    auto* fuzz = app.add_subcommand("fuzz", "randomized invariant campaign");
    auto* mc = app.add_subcommand("mc", "Monte Carlo trajectory as JSON");
    auto* ultrahot = app.add_subcommand("ultrahot", "ultra-hot report as JSON");
    for (auto* sub : {steady, sweep, mc, ultrahot}) add_common(sub, true);
    add_common(fuzz, false);
    fuzz->add_option("--n", n, "number of random instances")->check(CLI::PositiveNumber);
    fuzz->add_option("--max-levels", max_levels, "largest level count")->check(CLI::Range(2, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    auto emit = [&](const std::string& text) -> int {
        if (out_path.empty()) {
            out << text;
            return kOk;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << out_path << '\n';
            return kConfigError;
        }
        f << text;
        return kOk;
    };

    try {
        if (fuzz->parsed()) {
            const FuzzSummary s = run_fuzz(n, seed.value_or(0), max_levels);
            const int code = emit(dump_json(fuzz_report(s)));
            if (code != kOk) return code;
            return s.all_passed() ? kOk : kInvariantViolation;
        }
        Config config = load_config(config_path);
        if (seed) {
            config.mc.seed = *seed;
            config.ultrahot.seed = *seed;
        }
        if (steady->parsed()) return emit(dump_json(steady_report(config.cold, config.hot, config.params)));
        if (sweep->parsed()) {
            if (!config.sweep) throw ConfigError(config_path, 0, "missing section [sweep]");
            return emit(sweep_csv(config));
        }
        if (mc->parsed()) return emit(dump_json(mc_report(config)));
        return emit(dump_json(ultrahot_report(config)));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace swapengine::cli
