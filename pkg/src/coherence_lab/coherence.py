"""Two-outcome answer probabilities with interference.

The probability of answering "yes" across a displacement theta is
cos^2(a*theta).  Composing two displacements through an intermediate
interpretation classically gives p1*p2 + (1-p1)*(1-p2); the exact law adds
the interference correction -2 sin(a*theta) sin(a*vartheta) cos(a*theta)
cos(a*vartheta), which restores cos^2(a*(theta+vartheta)) identically.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "PROBABILITY_SLACK",
    "IDENTITY_TOLERANCE",
    "GRID_TOLERANCE",
    "ComplementRelations",
    "CoherenceModel",
    "LinearityReport",
    "ViolationWitness",
    "checked_probability",
    "classical_compose",
    "compose_with_phase",
]

# Accepted floating-point excursion outside [0, 1] before clamping.
PROBABILITY_SLACK = 1e-12
# Analytic identities evaluate O(1) trig calls in double precision.
IDENTITY_TOLERANCE = 1e-12
# Grid searches accumulate over many points.
GRID_TOLERANCE = 1e-9


def checked_probability(value):
    """Clamp ``value`` into [0, 1], but only inside the fp slack band.

    Excursions beyond PROBABILITY_SLACK indicate a real error and raise
    instead of being silently clamped.
    """
    if not -PROBABILITY_SLACK <= value <= 1.0 + PROBABILITY_SLACK:
        raise ValueError(f"{value!r} lies outside [0, 1] beyond tolerance")
    return min(max(value, 0.0), 1.0)


def classical_compose(p_first, p_second):
    """Two-path product rule: the final "yes" arrives via yes-yes or no-no."""
    for value in (p_first, p_second):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"probability {value!r} outside [0, 1]")
    return p_first * p_second + (1.0 - p_first) * (1.0 - p_second)


def compose_with_phase(phase, theta, vartheta):
    """Classical rule plus interference, both computed from an arbitrary
    phase profile ``phase``: probabilities are cos^2(phase(.)).

    Used to check which profiles make the composition law exact.
    """
    first = phase(theta)
    second = phase(vartheta)
    p_first = math.cos(first) ** 2
    p_second = math.cos(second) ** 2
    interference = (
        -2.0 * math.sin(first) * math.sin(second) * math.cos(first) * math.cos(second)
    )
    return classical_compose(p_first, p_second) + interference


class ComplementRelations(NamedTuple):
    """The four yes-probabilities when the given statement, the queried
    statement, or both are replaced by their negations."""

    direct: float
    query_negated: float
    given_negated: float
    both_negated: float


@dataclass(frozen=True)
class ViolationWitness:
    """The quarter-phase displacement where the classical rule demands 1/2
    while the actual composed probability is 0."""

    theta: float
    classical: float
    required: float
    gap: float
    min_self_compose: float
    argmin_p: float


@dataclass(frozen=True)
class LinearityReport:
    """Constraint check of a linear phase profile against a quadratic
    deviation on a displacement grid."""

    a: float
    epsilon: float
    tolerance: float
    linear_unit_error: float
    linear_null_error: float
    linear_ok: bool
    deviation_unit_error: float
    deviation_null_error: float
    deviation_violates: bool


@dataclass(frozen=True)
class CoherenceModel:
    """Answer-probability model p(theta) = cos^2(a*theta).

    ``a`` is the phase accumulated per unit displacement; any finite real is
    accepted.  At a = 1/2 the law matches the two-outcome overlap rule for a
    spin-1/2 pair of axes in a plane.
    """

    a: float = 0.5

    def __post_init__(self):
        if not math.isfinite(self.a):
            raise ValueError("a must be finite")

    def p(self, theta):
        """Probability of "yes" across displacement ``theta``; even in theta,
        periodic with period pi/a."""
        return checked_probability(math.cos(self.a * theta) ** 2)

    def complement_relations(self, theta):
        """(p, 1-p, 1-p, p): negating the queried or the given statement
        flips the answer odds; negating both restores them."""
        p = self.p(theta)
        return ComplementRelations(p, 1.0 - p, 1.0 - p, p)

    def interference_term(self, theta, vartheta):
        """-2 sin(a*theta) sin(a*vartheta) cos(a*theta) cos(a*vartheta);
        bounded in [-1/2, 1/2], zero whenever either displacement aligns with
        a certain interpretation (a*theta a multiple of pi/2)."""
        first = self.a * theta
        second = self.a * vartheta
        return (
            -2.0
            * math.sin(first)
            * math.sin(second)
            * math.cos(first)
            * math.cos(second)
        )

    def compose(self, theta, vartheta):
        """Classical composition plus interference; equals p(theta + vartheta)
        up to floating tolerance."""
        classical = classical_compose(self.p(theta), self.p(vartheta))
        return checked_probability(classical + self.interference_term(theta, vartheta))

    def classical_violation_witness(self, grid_points=1001):
        """Exhibit the displacement where the classical rule cannot hold.

        At theta = vartheta = pi/(4a) the composed probability is 0, yet the
        classical rule yields 1/2; indeed p^2 + (1-p)^2 >= 1/2 for every p,
        with the minimum at p = 1/2, so no classical probability fits.
        """
        if self.a == 0.0:
            raise ValueError("a = 0 makes all interpretations identical; no violation exists")
        theta = math.pi / (4.0 * self.a)
        p = self.p(theta)
        classical = classical_compose(p, p)
        required = self.compose(theta, theta)
        best_value = math.inf
        best_p = math.nan
        for i in range(grid_points):
            candidate = i / (grid_points - 1)
            value = candidate * candidate + (1.0 - candidate) * (1.0 - candidate)
            if value < best_value:
                best_value = value
                best_p = candidate
        return ViolationWitness(
            theta=theta,
            classical=classical,
            required=required,
            gap=classical - required,
            min_self_compose=best_value,
            argmin_p=best_p,
        )

    def verify_f_linear(self, thetas=None, epsilon=0.1):
        """Check the two constraint cases that pin the phase profile down to
        a linear one.

        Case "unit": composing a displacement with its own reversal must give
        probability 1 at every grid point.  Case "null": at the quarter-phase
        point theta = vartheta = pi/(4a) the composed probability must be 0.
        The linear profile a*theta passes both; the quadratic deviation
        a*theta + epsilon*theta^2 must break at least one of them.
        """
        if self.a == 0.0:
            raise ValueError("a = 0 has no quarter-phase point")
        if epsilon == 0.0:
            raise ValueError("epsilon must be nonzero to define a deviation")
        if thetas is None:
            thetas = [k * math.pi / 16.0 for k in range(-16, 17)]
        thetas = list(thetas)
        if not thetas:
            raise ValueError("empty displacement grid")

        def linear(theta):
            return self.a * theta

        def deviated(theta):
            return self.a * theta + epsilon * theta * theta

        quarter = math.pi / (4.0 * self.a)
        linear_unit = max(
            abs(compose_with_phase(linear, theta, -theta) - 1.0) for theta in thetas
        )
        linear_null = abs(compose_with_phase(linear, quarter, quarter))
        deviation_unit = max(
            abs(compose_with_phase(deviated, theta, -theta) - 1.0) for theta in thetas
        )
        deviation_null = abs(compose_with_phase(deviated, quarter, quarter))
        return LinearityReport(
            a=self.a,
            epsilon=epsilon,
            tolerance=GRID_TOLERANCE,
            linear_unit_error=linear_unit,
            linear_null_error=linear_null,
            linear_ok=linear_unit < GRID_TOLERANCE and linear_null < GRID_TOLERANCE,
            deviation_unit_error=deviation_unit,
            deviation_null_error=deviation_null,
            deviation_violates=deviation_unit > GRID_TOLERANCE
            or deviation_null > GRID_TOLERANCE,
        )
