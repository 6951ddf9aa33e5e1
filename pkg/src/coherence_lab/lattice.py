"""Statement matrices on a periodic lattice of L sites.

A mode statement is the circulant matrix M[q', q] = exp(2*pi*i*k*(q'-q)/L)/L:
a translation-invariant idempotent of rank 1 whose fixed vector is the plane
wave of its mode.  A site statement is diagonal with a single nonzero entry.
The trace of their product is amplitude/L for every mode and site, invariant
under relabeling the lattice and under swapping the factor order.
"""

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "IDEMPOTENCY_TOLERANCE",
    "EIGENVECTOR_TOLERANCE",
    "TRACE_TOLERANCE",
    "COMMUTATOR_FLOOR",
    "LatticeConfig",
    "MomentumStatement",
    "PositionStatement",
    "EigenvectorReport",
    "LatticeCheckRow",
    "LatticeSummary",
    "build_momentum_statement",
    "build_position_statement",
    "verify_idempotent",
    "eigenvector_check",
    "commutator_norm",
    "joint_probability",
    "translate",
    "relabel_sites",
    "max_norm",
    "run_checks",
]

IDEMPOTENCY_TOLERANCE = 1e-10
EIGENVECTOR_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-12
COMMUTATOR_FLOOR = 1e-6


@dataclass(frozen=True)
class LatticeConfig:
    """``sites`` lattice points; ``amplitude`` is the diagonal value (and the
    trace) of a single-site statement."""

    sites: int
    amplitude: float = 1.0

    def __post_init__(self):
        if self.sites < 2:
            raise ValueError("sites must be at least 2")
        if not self.amplitude > 0:
            raise ValueError("amplitude must be positive")


@dataclass(frozen=True)
class MomentumStatement:
    """Circulant rank-1 projector for one lattice mode.

    Entries depend only on the site separation (q' - q) mod L, which is what
    makes the statement translation invariant; it is Hermitian with trace 1.
    """

    config: LatticeConfig
    mode: int
    matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sites = self.config.sites
        if not 0 <= self.mode < sites:
            raise ValueError(f"mode must be in 0..{sites - 1}")
        q = np.arange(sites)
        separation = (q[:, None] - q[None, :]) % sites
        # One phase per separation class, so equal separations share the exact
        # same float and relabeling sites is bit-exact invariance.
        phases = np.exp((2j * math.pi * self.mode / sites) * np.arange(sites)) / sites
        matrix = phases[separation]
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @property
    def wavelength(self):
        """Sites per phase cycle; infinite for the uniform mode."""
        return self.config.sites / self.mode if self.mode else math.inf


@dataclass(frozen=True)
class PositionStatement:
    """Diagonal matrix with a single nonzero entry ``amplitude`` at ``site``."""

    config: LatticeConfig
    site: int
    matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sites = self.config.sites
        if not 0 <= self.site < sites:
            raise ValueError(f"site must be in 0..{sites - 1}")
        matrix = np.zeros((sites, sites), dtype=complex)
        matrix[self.site, self.site] = self.config.amplitude
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)


def build_momentum_statement(config, mode):
    return MomentumStatement(config, mode)


def build_position_statement(config, site):
    return PositionStatement(config, site)


def max_norm(matrix):
    """Entrywise max-absolute-value norm."""
    return float(np.max(np.abs(matrix)))


def verify_idempotent(statement):
    """Max-norm of M @ M - M; the matrix product realizes conjunction, and a
    statement conjoined with itself must reproduce itself."""
    m = statement.matrix
    return max_norm(m @ m - m)


@dataclass(frozen=True)
class EigenvectorReport:
    mode: int
    eigen_residual: float
    null_residual: float
    orthogonality_residual: float
    normalization_residual: float

    def worst(self):
        return max(
            self.eigen_residual,
            self.null_residual,
            self.orthogonality_residual,
            self.normalization_residual,
        )


def eigenvector_check(statement):
    """Verify the rank-1 projector structure against explicit plane waves.

    The wave of the statement's own mode is fixed; every other mode's wave is
    annihilated; distinct waves are orthogonal with squared norm L.
    """
    sites = statement.config.sites
    q = np.arange(sites)
    waves = np.exp(2j * math.pi * np.outer(np.arange(sites), q) / sites)
    mapped = statement.matrix @ waves.T
    own = statement.mode
    eigen_residual = float(np.max(np.abs(mapped[:, own] - waves[own])))
    others = np.arange(sites) != own
    null_residual = float(np.max(np.abs(mapped[:, others]))) if sites > 1 else 0.0
    gram = waves.conj() @ waves.T
    off_diagonal = gram[~np.eye(sites, dtype=bool)]
    orthogonality_residual = float(np.max(np.abs(off_diagonal)))
    normalization_residual = float(np.max(np.abs(np.diag(gram) - sites)))
    return EigenvectorReport(
        mode=own,
        eigen_residual=eigen_residual,
        null_residual=null_residual,
        orthogonality_residual=orthogonality_residual,
        normalization_residual=normalization_residual,
    )


def _require_same_config(first, second):
    if first.config != second.config:
        raise ValueError("statements live on different lattice configurations")


def commutator_norm(first, second):
    """Max-norm of AB - BA; strictly positive for any mode statement against
    any site statement, zero for a statement against itself."""
    _require_same_config(first, second)
    a = first.matrix
    b = second.matrix
    return max_norm(a @ b - b @ a)


def joint_probability(first, second):
    """Trace of the matrix product, summed over both site indices.

    Equals amplitude/sites for every (mode, site) pair; cyclicity of the
    trace makes it independent of the factor order.
    """
    _require_same_config(first, second)
    value = complex(np.trace(first.matrix @ second.matrix))
    if abs(value.imag) > 1e-9:
        raise ValueError(f"trace pairing has a non-negligible imaginary part: {value!r}")
    return value.real


def relabel_sites(matrix, shift):
    """The matrix after renaming site q to (q + shift) mod L on both indices."""
    return np.roll(np.roll(matrix, shift, axis=0), shift, axis=1)


def translate(statement, shift):
    """Relabel lattice sites by q -> (q + shift) mod L.

    A mode statement's entries depend only on site separations, so its matrix
    is unchanged; a site statement moves to the shifted site.
    """
    if isinstance(statement, PositionStatement):
        sites = statement.config.sites
        return PositionStatement(statement.config, (statement.site + shift) % sites)
    if isinstance(statement, MomentumStatement):
        return MomentumStatement(statement.config, statement.mode)
    raise TypeError(f"cannot translate {type(statement).__name__}")


@dataclass(frozen=True)
class LatticeCheckRow:
    sites: int
    mode: int
    site: int
    amplitude: float
    idempotency_residual: float
    commutator_norm: float
    joint_probability: float


@dataclass(frozen=True)
class LatticeSummary:
    sites: int
    amplitude: float
    worst_idempotency: float
    worst_eigenvector: float
    min_commutator: float
    worst_joint_error: float
    worst_translation_error: float
    passed: bool


def _translation_shifts(sites):
    # Full shift sweep for small lattices; three representative shifts above.
    if sites <= 16:
        return list(range(1, sites))
    return [1, sites // 2, sites - 1]


def run_checks(config, shifts=None):
    """Sweep every (mode, site) pair: idempotency, eigenvectors, commutator,
    trace pairing, order swap, and invariance under site relabeling.

    Returns (rows, summary); ``summary.passed`` reflects all tolerances.
    """
    sites = config.sites
    expected = config.amplitude / sites
    if shifts is None:
        shifts = _translation_shifts(sites)

    rows = []
    worst_idempotency = 0.0
    worst_eigenvector = 0.0
    min_commutator = math.inf
    worst_joint_error = 0.0
    worst_translation_error = 0.0

    positions = [PositionStatement(config, site) for site in range(sites)]
    for mode in range(sites):
        momentum = MomentumStatement(config, mode)
        idempotency = verify_idempotent(momentum)
        worst_idempotency = max(worst_idempotency, idempotency)
        worst_eigenvector = max(worst_eigenvector, eigenvector_check(momentum).worst())
        for shift in shifts:
            worst_translation_error = max(
                worst_translation_error,
                max_norm(relabel_sites(momentum.matrix, shift) - momentum.matrix),
            )
        for position in positions:
            commutator = commutator_norm(momentum, position)
            joint = joint_probability(momentum, position)
            swapped = joint_probability(position, momentum)
            min_commutator = min(min_commutator, commutator)
            worst_joint_error = max(
                worst_joint_error,
                abs(joint - expected),
                abs(swapped - joint),
            )
            for shift in shifts:
                moved = joint_probability(translate(momentum, shift), translate(position, shift))
                worst_joint_error = max(worst_joint_error, abs(moved - joint))
            rows.append(
                LatticeCheckRow(
                    sites=sites,
                    mode=mode,
                    site=position.site,
                    amplitude=config.amplitude,
                    idempotency_residual=idempotency,
                    commutator_norm=commutator,
                    joint_probability=joint,
                )
            )

    summary = LatticeSummary(
        sites=sites,
        amplitude=config.amplitude,
        worst_idempotency=worst_idempotency,
        worst_eigenvector=worst_eigenvector,
        min_commutator=min_commutator,
        worst_joint_error=worst_joint_error,
        worst_translation_error=worst_translation_error,
        passed=(
            worst_idempotency < IDEMPOTENCY_TOLERANCE
            and worst_eigenvector < EIGENVECTOR_TOLERANCE
            and min_commutator > COMMUTATOR_FLOOR
            and worst_joint_error < TRACE_TOLERANCE
            and worst_translation_error < TRACE_TOLERANCE
        ),
    )
    return rows, summary
