import math

import pytest

import swapengine as se


def naive_gibbs(energies, beta):
    w = [math.exp(-beta * e) for e in energies]
    z = sum(w)
    return [v / z for v in w]


def test_gibbs_matches_direct_formula():
    p = se.gibbs_population([0.0, 0.5, 2.0], 1.3)
    assert p == pytest.approx(naive_gibbs([0.0, 0.5, 2.0], 1.3), abs=1e-14)


def test_population_swap_full_exchange():
    s, b = se.population_swap(1.0, [0.7, 0.3], [0.4, 0.6])
    assert s == pytest.approx([0.4, 0.6])
    assert b == pytest.approx([0.7, 0.3])


def test_steady_difference_is_k_times_gap():
    pc, ph = [0.8, 0.2], [0.6, 0.4]
    xt = 0.5
    s = se.steady_populations(pc, ph, xt)
    k = xt / (2 - xt)
    assert s["dp"] == pytest.approx([k * (a - b) for a, b in zip(ph, pc)], abs=1e-15)


def test_two_level_engine_efficiency():
    # Engine window for gap_c < gap_h with T_c = 1, T_h = 2: eta = 1 - gap_c / gap_h.
    r = se.steady_report([0.0, 1.5], 1.0, [0.0, 2.0], 0.5)
    assert r["mode"] == "Engine"
    assert r["efficiency"] == pytest.approx(1 - 1.5 / 2.0, abs=1e-12)
    assert r["q_hot"] + r["q_cold"] == pytest.approx(r["work"], abs=1e-14)


def test_clausius_nonnegative_and_purity_decreases():
    ec, eh = [0.0, 0.7, 1.9], [0.0, 1.4, 2.2]
    assert se.clausius_number(ec, 1.0, eh, 0.3) >= 0.0
    c = se.purity_change(naive_gibbs(ec, 1.0), naive_gibbs(eh, 0.3), 0.6)
    assert c["total"] <= 0.0


def test_simulation_tracks_closed_form():
    ec, eh = [0.0, 1.5], [0.0, 2.0]
    # Collisions fire with probability r, so r < 1 makes the trajectory random.
    mc = se.simulate(ec, 1.0, eh, 0.5, r=0.5, n_cycles=20000, seed=3)
    exact = se.steady_report(ec, 1.0, eh, 0.5, r=0.5)["work"]
    assert mc["stderr_work"] > 0.0
    assert abs(mc["mean_work"] - exact) <= 5 * mc["stderr_work"]


def test_ultra_hot_work_converges():
    ec, eh = [0.0, 0.6, 1.1, 2.0], [0.0, 1.3, 1.9, 3.1]
    s = 0.01
    exact = se.steady_report(ec, s, eh, 0.4 * s, x=0.9)["work"]
    assert se.ultra_hot_work(ec, s, eh, 0.4 * s, x=0.9) == pytest.approx(exact, rel=1e-2)


def test_fuzz_small_campaign_passes():
    f = se.run_fuzz(200, seed=5)
    assert f["passed"]
    assert f["purity_constant"]["fitted_c"] == pytest.approx(4.0, abs=1e-9)


def test_domain_errors_raise():
    with pytest.raises(se.SwapEngineError):
        se.gibbs_population([0.0, 1.0], -1.0)
    with pytest.raises(ValueError):
        se.population_swap(1.5, [0.5, 0.5], [0.5, 0.5])


def test_cli_roundtrip():
    code, out, err = se.run_cli(["--help"])
    assert code == 0
    assert "steady" in out
