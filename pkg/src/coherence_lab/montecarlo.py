"""Seeded Monte Carlo verification of the interference law.

Each trial chains two yes/no questions through an intermediate interpretation
and, independently, asks the direct question across the summed displacement.
The chained rate estimates the classical two-path composition; the direct
rate estimates the exact law; their difference converges to the analytic
interference term.

Randomness comes from the counter-based Philox generator (philox4x64), keyed
by (seed, stream).  The hot per-trial loop runs in a compiled extension when
available and falls back to a vectorized implementation otherwise; both
consume the identical stream, so reports are bit-identical across backends.
Set COHERENCE_LAB_BACKEND=python|cython to force a backend.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .coherence import CoherenceModel

try:
    from . import _mc_kernel
except ImportError:  # extension not built; the fallback is always available
    _mc_kernel = None
from . import _mc_fallback

__all__ = [
    "BACKEND",
    "RNG_ALGORITHM",
    "TrialPlan",
    "TrialReport",
    "sample_answer",
    "run_chained",
    "sweep",
]

RNG_ALGORITHM = "philox4x64"


def _select_backend():
    forced = os.environ.get("COHERENCE_LAB_BACKEND", "").strip().lower()
    if forced == "python":
        return _mc_fallback.chain_counts, "python"
    if forced == "cython":
        if _mc_kernel is None:
            raise RuntimeError("COHERENCE_LAB_BACKEND=cython but the extension is not built")
        return _mc_kernel.chain_counts, "cython"
    if forced not in ("", "auto"):
        raise RuntimeError(f"unknown COHERENCE_LAB_BACKEND {forced!r}")
    if _mc_kernel is not None:
        return _mc_kernel.chain_counts, "cython"
    return _mc_fallback.chain_counts, "python"


_chain_counts, BACKEND = _select_backend()


@dataclass(frozen=True)
class TrialPlan:
    """One Monte Carlo run: displacements, trial count, and the RNG key."""

    model: CoherenceModel
    theta: float
    vartheta: float
    trials: int = 1_000_000
    seed: int = 42
    stream: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for word in (self.seed, self.stream):
            if not 0 <= word < 1 << 64:
                raise ValueError("seed and stream must fit in 64 unsigned bits")

    def bit_generator(self):
        return np.random.Philox(key=np.array([self.seed, self.stream], dtype=np.uint64))


@dataclass(frozen=True)
class TrialReport:
    """Estimates from one plan, with the analytic interference value and the
    binomial standard error of the estimated difference."""

    a: float
    theta: float
    vartheta: float
    trials: int
    seed: int
    p_direct_hat: float
    p_chained_hat: float
    interference_hat: float
    analytic_interference: float
    std_error: float
    stream: int = 0
    rng_algorithm: str = RNG_ALGORITHM
    backend: str = BACKEND

    def within(self, n_sigma=4.0):
        """Whether the estimated interference sits within n_sigma standard
        errors of the analytic value."""
        return abs(self.interference_hat - self.analytic_interference) <= n_sigma * self.std_error


def sample_answer(model, theta, generator):
    """One yes/no answer across ``theta``: True with probability cos^2(a*theta).

    ``generator`` is a numpy Generator; outcomes are determined by its state,
    so a fixed seed and draw index give a fixed answer.
    """
    return bool(generator.random() < model.p(theta))


def run_chained(plan):
    """Run the plan and report chained, direct, and interference estimates.

    The chained leg samples the intermediate answer across ``theta``; an
    intermediate "no" means the complementary statement is true there, so the
    second leg uses the complemented probability 1 - p(vartheta).  The direct
    leg samples across theta + vartheta on draws independent of the chain.
    """
    model = plan.model
    p_first = model.p(plan.theta)
    relations = model.complement_relations(plan.vartheta)
    p_direct = model.p(plan.theta + plan.vartheta)
    yes_chained, yes_direct = _chain_counts(
        plan.bit_generator(), plan.trials, p_first, relations.direct, p_direct
    )
    p_chained_hat = yes_chained / plan.trials
    p_direct_hat = yes_direct / plan.trials
    std_error = math.sqrt(
        (
            p_direct_hat * (1.0 - p_direct_hat)
            + p_chained_hat * (1.0 - p_chained_hat)
        )
        / plan.trials
    )
    return TrialReport(
        a=model.a,
        theta=plan.theta,
        vartheta=plan.vartheta,
        trials=plan.trials,
        seed=plan.seed,
        p_direct_hat=p_direct_hat,
        p_chained_hat=p_chained_hat,
        interference_hat=p_direct_hat - p_chained_hat,
        analytic_interference=model.interference_term(plan.theta, plan.vartheta),
        std_error=std_error,
        stream=plan.stream,
    )


def sweep(model, thetas, vartheta, trials=1_000_000, seed=42):
    """One report per grid displacement, ``vartheta`` held fixed.

    Grid point i draws from the (seed, i) key, so rows are independent and
    the whole sweep is reproducible from the single base seed.
    """
    thetas = list(thetas)
    if not thetas:
        raise ValueError("empty displacement grid")
    return [
        run_chained(TrialPlan(model, theta, vartheta, trials=trials, seed=seed, stream=i))
        for i, theta in enumerate(thetas)
    ]
