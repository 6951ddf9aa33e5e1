#cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-trial loop for chained yes/no sampling.

Consumes exactly three uniform doubles per trial from a NumPy BitGenerator,
in trial order, so the stream position matches the vectorized fallback bit
for bit and both backends produce identical counts for the same seed.
"""
from cpython.pycapsule cimport PyCapsule_GetPointer, PyCapsule_IsValid
from numpy.random cimport bitgen_t


def chain_counts(bit_generator, Py_ssize_t trials,
                 double p_first, double p_second, double p_direct):
    """Count chained and direct "yes" outcomes over ``trials`` trials.

    Per trial: draw the intermediate answer with probability ``p_first``;
    from the resulting truth state draw the final answer with ``p_second``
    (complemented to 1 - p_second after an intermediate "no"); independently
    draw the direct answer with probability ``p_direct``.
    """
    cdef bitgen_t *rng
    cdef const char *capsule_name = "BitGenerator"
    cdef Py_ssize_t i
    cdef long long yes_chained = 0
    cdef long long yes_direct = 0
    cdef double u_first, u_second, u_direct, p_leg

    capsule = bit_generator.capsule
    if not PyCapsule_IsValid(capsule, capsule_name):
        raise ValueError("expected a NumPy BitGenerator")
    rng = <bitgen_t *> PyCapsule_GetPointer(capsule, capsule_name)

    with bit_generator.lock, nogil:
        for i in range(trials):
            u_first = rng.next_double(rng.state)
            u_second = rng.next_double(rng.state)
            u_direct = rng.next_double(rng.state)
            p_leg = p_second if u_first < p_first else 1.0 - p_second
            if u_second < p_leg:
                yes_chained += 1
            if u_direct < p_direct:
                yes_direct += 1

    return yes_chained, yes_direct
