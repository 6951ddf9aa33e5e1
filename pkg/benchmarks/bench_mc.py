#!/usr/bin/env python3
"""Benchmark the compiled chained-trial kernel against the NumPy fallback.

Both backends consume the identical Philox stream, so their counts must
match exactly; the benchmark asserts that before reporting throughput.
"""

import argparse
import math
import time

from coherence_lab import _mc_fallback
from coherence_lab.coherence import CoherenceModel
from coherence_lab.montecarlo import TrialPlan

try:
    from coherence_lab import _mc_kernel
except ImportError:
    _mc_kernel = None


def time_backend(chain_counts, plan, probabilities, repeats):
    best = math.inf
    counts = None
    for _ in range(repeats):
        generator = plan.bit_generator()
        started = time.perf_counter()
        counts = chain_counts(generator, plan.trials, *probabilities)
        best = min(best, time.perf_counter() - started)
    return counts, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=4_000_000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    model = CoherenceModel(0.5)
    plan = TrialPlan(
        model, math.pi / 3, math.pi / 5, trials=args.trials, seed=args.seed
    )
    probabilities = (
        model.p(plan.theta),
        model.p(plan.vartheta),
        model.p(plan.theta + plan.vartheta),
    )

    fallback_counts, fallback_time = time_backend(
        _mc_fallback.chain_counts, plan, probabilities, args.repeats
    )
    print(
        f"numpy fallback : {fallback_time:.3f}s "
        f"({1e9 * fallback_time / args.trials:.1f} ns/trial)"
    )

    if _mc_kernel is None:
        print("compiled kernel: not built (pip install -e . --no-build-isolation)")
        return

    kernel_counts, kernel_time = time_backend(
        _mc_kernel.chain_counts, plan, probabilities, args.repeats
    )
    assert kernel_counts == fallback_counts, "backends disagree on counts"
    print(
        f"compiled kernel: {kernel_time:.3f}s "
        f"({1e9 * kernel_time / args.trials:.1f} ns/trial)"
    )
    print(f"identical counts: {kernel_counts}")
    print(f"speedup: {fallback_time / kernel_time:.2f}x")


if __name__ == "__main__":
    main()
