"""Certain interpretations on the affine line, their permutations, and the
fixed-step impossibility check: no single permutation applied N! times over
equal displacement steps can realize a non-identity rearrangement."""

import itertools
import math
from dataclasses import dataclass

__all__ = [
    "CertainInterpretation",
    "InterpretationPoint",
    "Permutation",
    "ThetaInterval",
    "DEFAULT_THETA_INTERVAL",
    "ContradictionReport",
    "SearchReport",
    "certain",
    "apply_permutation",
    "all_permutations",
    "permutation_power",
    "contradiction_witness",
    "exhaustive_algorithm_search",
]


@dataclass(frozen=True)
class CertainInterpretation:
    """Assigns truth value 1 to exactly one of ``size`` conjunction indices."""

    size: int
    true_index: int

    def __post_init__(self):
        if self.size < 2:
            raise ValueError("size must be at least 2")
        if not 1 <= self.true_index <= self.size:
            raise ValueError(f"true_index must be in 1..{self.size}")

    def __call__(self, k):
        if not 1 <= k <= self.size:
            raise ValueError(f"k must be in 1..{self.size}")
        return 1 if k == self.true_index else 0

    def values(self):
        return tuple(self(k) for k in range(1, self.size + 1))


def certain(true_index, size):
    """The interpretation declaring conjunction ``true_index`` true."""
    return CertainInterpretation(size, true_index)


@dataclass(frozen=True)
class InterpretationPoint:
    """A point on the affine line of interpretations.

    Coordinates have no absolute meaning; only displacements between two
    points enter any computation.
    """

    coordinate: float
    size: int

    def __post_init__(self):
        if self.size < 2:
            raise ValueError("size must be at least 2")

    def displacement_to(self, other):
        if self.size != other.size:
            raise ValueError("points refer to different interpretation sizes")
        return other.coordinate - self.coordinate


@dataclass(frozen=True)
class ThetaInterval:
    """Closed interval of admissible displacements."""

    theta_min: float
    theta_max: float

    def __post_init__(self):
        if self.theta_min > self.theta_max:
            raise ValueError("theta_min must not exceed theta_max")

    def contains(self, theta):
        return self.theta_min <= theta <= self.theta_max


DEFAULT_THETA_INTERVAL = ThetaInterval(-math.pi, math.pi)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 1..N stored as a tuple of 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a bijection on 1..{len(self.images)}")

    @classmethod
    def identity(cls, size):
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def compose(self, other):
        """self after other: (self.compose(other))(k) = self(other(k))."""
        if self.size != other.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[image - 1] for image in other.images))

    def inverse(self):
        inverse = [0] * self.size
        for k, image in enumerate(self.images, start=1):
            inverse[image - 1] = k
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(image == k for k, image in enumerate(self.images, start=1))

    def cycle_lengths(self):
        seen = [False] * self.size
        lengths = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            length = 0
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                k = self(k)
                length += 1
            lengths.append(length)
        return tuple(lengths)

    def order(self):
        """Smallest positive exponent whose power is the identity."""
        return math.lcm(*self.cycle_lengths())

    def as_list(self):
        """1-based image list, the serialized form used in CSV/JSON reports."""
        return list(self.images)


def all_permutations(size):
    """All size! permutations, in lexicographic image order."""
    for images in itertools.permutations(range(1, size + 1)):
        yield Permutation(images)


def apply_permutation(interpretation, permutation):
    """Relabel which conjunction is true: the new true index is the image of
    the old one.  Preserves the one-index-true invariant."""
    if interpretation.size != permutation.size:
        raise ValueError("interpretation and permutation sizes differ")
    return CertainInterpretation(interpretation.size, permutation(interpretation.true_index))


def permutation_power(permutation, exponent):
    """``permutation`` composed with itself ``exponent`` times; exponent 0 is
    the identity.

    The exponent is reduced modulo the permutation's order first, so
    astronomically large exponents (factorials of factorials) cost nothing.
    """
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    remaining = exponent % permutation.order()
    result = Permutation.identity(permutation.size)
    base = permutation
    while remaining:
        if remaining & 1:
            result = result.compose(base)
        base = base.compose(base)
        remaining >>= 1
    return result


@dataclass(frozen=True)
class ContradictionReport:
    """Outcome of driving one candidate step permutation through N! equal
    steps toward a target rearrangement."""

    size: int
    steps: int
    final: Permutation
    target: Permutation
    reaches_target: bool
    contradiction: bool


def contradiction_witness(step, target):
    """Apply the same candidate ``step`` permutation N! times and compare the
    result against ``target``.

    The power of any permutation to the exponent N! is the identity (every
    element order divides the group order), so a non-identity target is never
    reached: the report's ``contradiction`` flag is then True.
    """
    if step.size != target.size:
        raise ValueError("step and target sizes differ")
    steps = math.factorial(step.size)
    final = permutation_power(step, steps)
    reaches_target = final == target
    return ContradictionReport(
        size=step.size,
        steps=steps,
        final=final,
        target=target,
        reaches_target=reaches_target,
        contradiction=not target.is_identity() and not reaches_target,
    )


@dataclass(frozen=True)
class SearchReport:
    size: int
    steps: int
    candidates_tested: int
    consistent_candidates: int


def exhaustive_algorithm_search(size):
    """Try every permutation as the fixed per-step map and count how many
    reach any non-identity rearrangement after N! steps.  The count is always
    zero; the report makes that machine-checked rather than asserted.
    """
    if not 2 <= size <= 5:
        raise ValueError("size must be in 2..5 (candidate count grows factorially)")
    steps = math.factorial(size)
    tested = 0
    consistent = 0
    for candidate in all_permutations(size):
        tested += 1
        if not permutation_power(candidate, steps).is_identity():
            consistent += 1
    return SearchReport(
        size=size,
        steps=steps,
        candidates_tested=tested,
        consistent_candidates=consistent,
    )
