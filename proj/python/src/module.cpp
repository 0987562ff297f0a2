// Python bindings. Reports come back as plain dicts built from the same JSON
// renderers the CLI uses.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swapengine/collision.hpp"
#include "swapengine/cycle.hpp"
#include "swapengine/error.hpp"
#include "swapengine/fuzz.hpp"
#include "swapengine/regimes.hpp"
#include "swapengine/simcli.hpp"
#include "swapengine/thermo.hpp"

namespace py = pybind11;
using namespace swapengine;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(cli::dump_json(j, -1));
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

BathSpec cold_bath(std::vector<double> energies, double beta) {
    return BathSpec(std::move(energies), beta, BathLabel::Cold);
}

BathSpec hot_bath(std::vector<double> energies, double beta) {
    return BathSpec(std::move(energies), beta, BathLabel::Hot);
}

cli::Config make_config(std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, double x,
                        double r) {
    return cli::Config{cold_bath(std::move(ec), beta_c), hot_bath(std::move(eh), beta_h), CycleParams(x, r),
                       std::nullopt, {}, {}};
}

std::optional<NormConstraint> parse_constraint(const std::optional<std::string>& name) {
    if (!name) return std::nullopt;
    if (*name == "fix_hot_norm") return NormConstraint::FixHotNorm;
    if (*name == "fix_cold_norm") return NormConstraint::FixColdNorm;
    throw Error(ErrorCode::InvalidParams, "constraint must be fix_hot_norm or fix_cold_norm");
}

}  // namespace

PYBIND11_MODULE(swapengine, m) {
    m.doc() = "Two-bath swap engine: steady state, thermodynamics, bounds, regimes, Monte Carlo.";

    py::register_exception<Error>(m, "SwapEngineError", PyExc_ValueError);
    py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "gibbs_population",
        [](std::vector<double> energies, double beta) {
            return to_vector(gibbs_population(BathSpec(std::move(energies), beta, BathLabel::Cold)).probs());
        },
        py::arg("energies"), py::arg("beta"));

    m.def(
        "population_swap",
        [](double x, std::vector<double> p_s, std::vector<double> p_b) {
            const auto [s, b] = population_swap(x, Population(std::move(p_s)), Population(std::move(p_b)));
            return py::make_tuple(to_vector(s.probs()), to_vector(b.probs()));
        },
        py::arg("x"), py::arg("p_s"), py::arg("p_b"));

    m.def(
        "steady_populations",
        [](std::vector<double> p_cold, std::vector<double> p_hot, double x_tilde) {
            const SteadyState s = steady_populations(Population(std::move(p_cold)), Population(std::move(p_hot)), x_tilde);
            py::dict d;
            d["p_a"] = to_vector(s.p_a.probs());
            d["p_c"] = to_vector(s.p_c.probs());
            d["dp"] = to_vector(s.dp.values());
            return d;
        },
        py::arg("p_cold"), py::arg("p_hot"), py::arg("x_tilde"));

    m.def(
        "steady_report",
        [](std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, double x, double r) {
            return to_python(
                cli::steady_report(cold_bath(std::move(ec), beta_c), hot_bath(std::move(eh), beta_h), CycleParams(x, r)));
        },
        py::arg("cold_energies"), py::arg("beta_c"), py::arg("hot_energies"), py::arg("beta_h"), py::arg("x") = 1.0,
        py::arg("r") = 1.0);

    m.def(
        "clausius_number",
        [](std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, int order, double x,
           double r) {
            return clausius_number(cold_bath(std::move(ec), beta_c), hot_bath(std::move(eh), beta_h), CycleParams(x, r),
                                   order);
        },
        py::arg("cold_energies"), py::arg("beta_c"), py::arg("hot_energies"), py::arg("beta_h"), py::arg("m") = 1,
        py::arg("x") = 1.0, py::arg("r") = 1.0);

    m.def(
        "purity_change",
        [](std::vector<double> p_cold, std::vector<double> p_hot, double x_tilde) {
            const PurityChange c = purity_change(Population(std::move(p_cold)), Population(std::move(p_hot)), x_tilde);
            py::dict d;
            d["hot"] = c.delta_p_hot;
            d["cold"] = c.delta_p_cold;
            d["total"] = c.total;
            return d;
        },
        py::arg("p_cold"), py::arg("p_hot"), py::arg("x_tilde"));

    m.def(
        "ultra_hot_work",
        [](std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, double x, double r) {
            return ultra_hot_work(cold_bath(std::move(ec), beta_c), hot_bath(std::move(eh), beta_h), CycleParams(x, r));
        },
        py::arg("cold_energies"), py::arg("beta_c"), py::arg("hot_energies"), py::arg("beta_h"), py::arg("x") = 1.0,
        py::arg("r") = 1.0);

    m.def(
        "ultra_hot_report",
        [](std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, double x, double r,
           std::optional<std::string> constraint, std::uint64_t seed) {
            cli::Config c = make_config(std::move(ec), beta_c, std::move(eh), beta_h, x, r);
            c.ultrahot.constraint = parse_constraint(constraint);
            c.ultrahot.seed = seed;
            return to_python(cli::ultrahot_report(c));
        },
        py::arg("cold_energies"), py::arg("beta_c"), py::arg("hot_energies"), py::arg("beta_h"), py::arg("x") = 1.0,
        py::arg("r") = 1.0, py::arg("constraint") = py::none(), py::arg("seed") = 0);

    m.def(
        "simulate",
        [](std::vector<double> ec, double beta_c, std::vector<double> eh, double beta_h, double x, double r,
           std::uint64_t n_cycles, std::uint64_t seed, std::optional<std::uint64_t> burn_in, int collisions_per_stroke) {
            cli::Config c = make_config(std::move(ec), beta_c, std::move(eh), beta_h, x, r);
            c.mc.n_cycles = n_cycles;
            c.mc.seed = seed;
            c.mc.burn_in = burn_in;
            c.mc.collisions_per_stroke = collisions_per_stroke;
            nlohmann::ordered_json j;
            {
                py::gil_scoped_release release;
                j = cli::mc_report(c);
            }
            return to_python(j);
        },
        py::arg("cold_energies"), py::arg("beta_c"), py::arg("hot_energies"), py::arg("beta_h"), py::arg("x") = 1.0,
        py::arg("r") = 1.0, py::arg("n_cycles") = 100000, py::arg("seed") = 0, py::arg("burn_in") = py::none(),
        py::arg("collisions_per_stroke") = 1);

    m.def(
        "run_fuzz",
        [](std::size_t n, std::uint64_t seed, std::size_t max_levels) {
            FuzzSummary s;
            {
                py::gil_scoped_release release;
                s = run_fuzz(n, seed, max_levels);
            }
            return to_python(cli::fuzz_report(s));
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("max_levels") = 6);

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::vector<const char*> argv{"simcli"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
