"""Seeded Monte Carlo chains: determinism, backend parity, convergence."""

import math

import numpy as np
import pytest

from coherence_lab import _mc_fallback, montecarlo
from coherence_lab.coherence import CoherenceModel, classical_compose
from coherence_lab.montecarlo import TrialPlan, run_chained, sample_answer, sweep

try:
    from coherence_lab import _mc_kernel
except ImportError:
    _mc_kernel = None

HALF = CoherenceModel(0.5)


def plan(theta=math.pi / 2, vartheta=math.pi / 2, trials=100_000, seed=42, stream=0):
    return TrialPlan(HALF, theta, vartheta, trials=trials, seed=seed, stream=stream)


# --- single answers -----------------------------------------------------------


def test_zero_displacement_always_yes():
    generator = np.random.Generator(np.random.Philox(key=1))
    assert all(sample_answer(HALF, 0.0, generator) for _ in range(100))


def test_half_turn_always_no():
    generator = np.random.Generator(np.random.Philox(key=1))
    assert not any(sample_answer(HALF, math.pi, generator) for _ in range(100))


def test_sample_answer_is_seed_deterministic():
    draws = []
    for _ in range(2):
        generator = np.random.Generator(np.random.Philox(key=9))
        draws.append([sample_answer(HALF, 1.0, generator) for _ in range(50)])
    assert draws[0] == draws[1]


def test_quarter_turn_rate_is_balanced():
    generator = np.random.Generator(np.random.Philox(key=5))
    hits = sum(sample_answer(HALF, math.pi / 2, generator) for _ in range(100_000))
    # 3 sigma around 1/2 at 1e5 draws
    assert abs(hits / 100_000 - 0.5) < 3 * 0.5 / math.sqrt(100_000)


# --- plans and reports ----------------------------------------------------------


def test_plan_validation():
    with pytest.raises(ValueError):
        TrialPlan(HALF, 0.0, 0.0, trials=0)
    with pytest.raises(ValueError):
        TrialPlan(HALF, 0.0, 0.0, seed=-1)
    with pytest.raises(ValueError):
        TrialPlan(HALF, 0.0, 0.0, seed=1 << 64)


def test_report_echoes_plan_and_rng():
    report = run_chained(plan(trials=1000, seed=7))
    assert report.trials == 1000
    assert report.seed == 7
    assert report.rng_algorithm == "philox4x64"
    assert report.backend == montecarlo.BACKEND


def test_run_chained_is_deterministic():
    assert run_chained(plan()) == run_chained(plan())


def test_distinct_seeds_differ():
    assert run_chained(plan(seed=1)) != run_chained(plan(seed=2))


def test_distinct_streams_differ():
    assert run_chained(plan(stream=0)) != run_chained(plan(stream=1))


def test_degenerate_point_is_within_zero_error():
    report = run_chained(plan(theta=0.0, vartheta=0.0, trials=1000))
    assert report.p_direct_hat == 1.0
    assert report.p_chained_hat == 1.0
    assert report.std_error == 0.0
    assert report.within(4.0)


# --- backend parity --------------------------------------------------------------


@pytest.mark.skipif(_mc_kernel is None, reason="compiled kernel not built")
def test_backends_produce_identical_counts():
    p = plan(theta=0.7, vartheta=-1.3, trials=250_000, seed=123)
    args = (p.trials, HALF.p(p.theta), HALF.p(p.vartheta), HALF.p(p.theta + p.vartheta))
    compiled = _mc_kernel.chain_counts(p.bit_generator(), *args)
    vectorized = _mc_fallback.chain_counts(p.bit_generator(), *args)
    assert compiled == vectorized


@pytest.mark.skipif(_mc_kernel is None, reason="compiled kernel not built")
def test_fallback_blocking_does_not_change_counts(monkeypatch):
    # force several partial blocks; the stream order must be unaffected
    monkeypatch.setattr(_mc_fallback, "_BLOCK", 1000)
    p = plan(trials=2500, seed=77)
    args = (p.trials, HALF.p(p.theta), HALF.p(p.vartheta), HALF.p(p.theta + p.vartheta))
    assert _mc_fallback.chain_counts(p.bit_generator(), *args) == _mc_kernel.chain_counts(
        p.bit_generator(), *args
    )


# --- convergence ------------------------------------------------------------------


def test_chained_estimates_classical_composition():
    report = run_chained(plan(theta=0.9, vartheta=0.4, trials=1_000_000))
    expected = classical_compose(HALF.p(0.9), HALF.p(0.4))
    sigma = math.sqrt(expected * (1.0 - expected) / report.trials)
    assert abs(report.p_chained_hat - expected) < 4 * sigma


def test_direct_estimates_exact_law():
    report = run_chained(plan(theta=0.9, vartheta=0.4, trials=1_000_000))
    expected = HALF.p(1.3)
    sigma = math.sqrt(expected * (1.0 - expected) / report.trials)
    assert abs(report.p_direct_hat - expected) < 4 * sigma


def test_interference_estimate_at_spotlight_point():
    report = run_chained(plan(trials=1_000_000))
    assert report.analytic_interference == pytest.approx(-0.5, abs=1e-12)
    assert abs(report.interference_hat - (-0.5)) < 4 * report.std_error


def test_zero_displacement_has_no_interference():
    report = run_chained(plan(theta=0.0, trials=200_000))
    assert report.analytic_interference == 0.0
    assert abs(report.interference_hat) < 4 * report.std_error


# --- sweeps -----------------------------------------------------------------------


def test_sweep_is_deterministic_and_labels_streams():
    thetas = [0.0, math.pi / 4, math.pi / 2]
    first = sweep(HALF, thetas, math.pi / 2, trials=50_000, seed=11)
    second = sweep(HALF, thetas, math.pi / 2, trials=50_000, seed=11)
    assert first == second
    assert [r.stream for r in first] == [0, 1, 2]
    assert [r.theta for r in first] == thetas


def test_sweep_rejects_empty_grid():
    with pytest.raises(ValueError):
        sweep(HALF, [], math.pi / 2)


def test_sweep_tracks_analytic_interference():
    thetas = [i * math.pi / 8 for i in range(9)]
    for report in sweep(HALF, thetas, math.pi / 2, trials=200_000, seed=42):
        assert report.within(4.0)
