"""Vectorized fallback for the chained-trial kernel.

Draws the same uniform stream as the compiled loop (three doubles per trial,
row-major), so counts are bit-identical between backends for the same seed.
"""

import numpy as np

# Trials per block; bounds the temporary arrays at ~12 MB.
_BLOCK = 1 << 19


def chain_counts(bit_generator, trials, p_first, p_second, p_direct):
    generator = np.random.Generator(bit_generator)
    yes_chained = 0
    yes_direct = 0
    remaining = trials
    while remaining > 0:
        block = min(_BLOCK, remaining)
        u = generator.random((block, 3))
        p_leg = np.where(u[:, 0] < p_first, p_second, 1.0 - p_second)
        yes_chained += int(np.count_nonzero(u[:, 1] < p_leg))
        yes_direct += int(np.count_nonzero(u[:, 2] < p_direct))
        remaining -= block
    return yes_chained, yes_direct
