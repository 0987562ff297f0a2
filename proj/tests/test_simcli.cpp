#include <doctest.h>

#include <fstream>
#include <sstream>

#include "swapengine/simcli.hpp"

using namespace swapengine;
using namespace swapengine::cli;

namespace {

const char* kTwoLevel = R"(# demo
[cold]
energies = 0, 1.5
temperature = 1

[hot]
energies = 0, 2
temperature = 2

[params]
x = 0.7
r = 0.8
)";

Config parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test.ini");
}

int line_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string c; std::getline(in, c, ',');) out.push_back(c);
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
}

int run_cli(std::vector<const char*> args, std::string& out, std::string& err) {
    args.insert(args.begin(), "simcli");
    std::ostringstream o, e;
    const int code = run(static_cast<int>(args.size()), args.data(), o, e);
    out = o.str();
    err = e.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "simcli_test_" + name + ".ini";
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("config parsing") {
    const Config c = parse(kTwoLevel);
    CHECK(c.cold.levels() == 2);
    CHECK(c.hot.beta() == doctest::Approx(0.5));
    CHECK(c.params.x_tilde() == doctest::Approx(0.56));
    CHECK(!c.sweep);
}

TEST_CASE("config errors carry line numbers") {
    CHECK(line_of("[cold]\nenergies = 0, 1\ntemperature = 1\n[hot]\nenergies = 0, x\ntemperature = 2\n") == 5);
    CHECK(line_of("[cold]\nenergies = 0, 1\ntemperature = -1\n") == 3);
    CHECK(line_of("[cold]\nenergies = 0, 1\ntemprature = 1\n") == 3);
    CHECK(line_of("[bogus]\n") == 1);
    CHECK(line_of("energies = 1\n") == 1);
    CHECK(line_of(std::string(kTwoLevel) + "[sweep]\nparameter = cold_scale\nlo = 2\nhi = 1\nsteps = 3\n") == 16);
    CHECK(line_of("[cold]\nenergies = 0, 1\ntemperature = 1\nbeta = 1\n[hot]\nenergies = 0, 1\nbeta = 1\n") == 1);
    CHECK(line_of("[cold]\nenergies = 0, 1\ntemperature = 1\n[hot]\nenergies = 0, 1, 2\nbeta = 1\n") == 5);
}

TEST_CASE("json numbers use 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    nlohmann::ordered_json j;
    j["b"] = 0.1;
    j["a"] = 2;
    CHECK(dump_json(j, -1) == "{\"b\":0.10000000000000001,\"a\":2}\n");
}

TEST_CASE("steady command") {
    const Config c = parse(kTwoLevel);
    const auto j = steady_report(c.cold, c.hot, c.params);
    CHECK(j["mode"] == "Engine");
    CHECK(j["efficiency"].get<double>() == doctest::Approx(1.0 - 1.5 / 2.0).epsilon(1e-12));
    CHECK(j["clausius"].contains("R5"));
    CHECK(j["work_bounds"].size() == 7);
    CHECK(j["efficiency_bounds"].size() == 5);

    std::string out, err;
    const std::string path = write_temp("steady", kTwoLevel);
    CHECK(run_cli({"steady", "--config", path.c_str()}, out, err) == kOk);
    CHECK(out.find("\"mode\": \"Engine\"") != std::string::npos);

    const std::string equal = write_temp("equal", "[cold]\nenergies = 0, 1\ntemperature = 1\n[hot]\nenergies = 0, 3\ntemperature = 1\n");
    CHECK(run_cli({"steady", "--config", equal.c_str()}, out, err) == kOk);
    const auto e = nlohmann::json::parse(out);
    CHECK(e["work"].get<double>() <= 0.0);
    // Work input can still pump heat out of the equally hot "cold" bath.
    CHECK(e["mode"] == "Refrigerator");
    const std::string same = write_temp("same", "[cold]\nenergies = 0, 1\ntemperature = 1\n[hot]\nenergies = 0, 1\ntemperature = 1\n");
    CHECK(run_cli({"steady", "--config", same.c_str()}, out, err) == kOk);
    CHECK(nlohmann::json::parse(out)["mode"] == "Degenerate");

    const std::string bad = write_temp("bad", "[cold]\nenergies = 0, 1\n");
    CHECK(run_cli({"steady", "--config", bad.c_str()}, out, err) == kConfigError);
    CHECK(err.find(":1:") != std::string::npos);
    CHECK(run_cli({"steady", "--config", "does-not-exist.ini"}, out, err) == kConfigError);
}

TEST_CASE("domain errors exit with 3") {
    const std::string hot_beta0 =
        write_temp("beta0", "[cold]\nenergies = 0, 1\ntemperature = 1\n[hot]\nenergies = 0, 2\nbeta = 0\n");
    std::string out, err;
    CHECK(run_cli({"steady", "--config", hot_beta0.c_str()}, out, err) == kDomainError);
}

TEST_CASE("sweep command") {
    const std::string text = std::string(kTwoLevel) + "[sweep]\nparameter = cold_scale\nlo = 0.5\nhi = 1.0\nsteps = 2\n";
    const auto rows = lines(sweep_csv(parse(text)));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "value,W,Q_h,Q_c,eta,mode,R1,entropy_production");
    CHECK(split(rows[1]).size() == 8);
    CHECK(split(rows[1])[4].empty());  // refrigerator: no efficiency
    CHECK(split(rows[2])[5] == "Engine");

    for (const char* param : {"compression", "x", "r", "beta_c", "beta_h"}) {
        const std::string t = std::string(kTwoLevel) + "[sweep]\nparameter = " + param + "\nlo = 0.2\nhi = 0.9\nsteps = 4\n";
        CHECK(lines(sweep_csv(parse(t))).size() == 5);
    }
}

TEST_CASE("cli output is reproducible") {
    const std::string path = write_temp("mc", std::string(kTwoLevel) + "[mc]\nn_cycles = 5000\nseed = 3\n");
    std::string a, b, err;
    CHECK(run_cli({"mc", "--config", path.c_str()}, a, err) == kOk);
    CHECK(run_cli({"mc", "--config", path.c_str()}, b, err) == kOk);
    CHECK(a == b);
    CHECK(a.find("mt19937_64") != std::string::npos);
    CHECK(run_cli({"mc", "--config", path.c_str(), "--seed", "4"}, b, err) == kOk);
    CHECK(a != b);

    CHECK(run_cli({"fuzz", "--n", "200", "--seed", "9"}, a, err) == kOk);
    CHECK(run_cli({"fuzz", "--n", "200", "--seed", "9"}, b, err) == kOk);
    CHECK(a == b);
}

TEST_CASE("two-level fuzz") {
    const FuzzSummary s = run_fuzz(2000, 4, 2);
    CHECK(s.all_passed());
    bool seen = false;
    for (const auto& t : s.invariants) {
        if (t.name == "two_level_efficiency") seen = t.checked > 0;
    }
    CHECK(seen);
    CHECK(s.purity_fit.c == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("ultrahot command") {
    const std::string text =
        "[cold]\nenergies = 0, 0.01, 0.03\ntemperature = 1\n[hot]\nenergies = 0, 0.015, 0.045\ntemperature = 2\n"
        "[ultrahot]\nconstraint = fix_cold_norm\n";
    const auto j = ultrahot_report(parse(text));
    CHECK(j["compression_ratio"].get<double>() == doctest::Approx(1.5));
    CHECK(j["engine_condition"] == true);
    CHECK(j["warning"] == false);
    CHECK(j["optimum"]["compression_numeric"].get<double>() == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("bad arguments") {
    std::string out, err;
    CHECK(run_cli({}, out, err) == kConfigError);
    CHECK(run_cli({"fuzz", "--n", "0"}, out, err) == kConfigError);
    CHECK(run_cli({"steady"}, out, err) == kConfigError);
}
