"""coherence-lab: verification toolkit for a two-outcome interference law.

Library surface: propositional minterm logic (``logic``), certain
interpretations and permutation impossibility checks (``interpretations``),
the cos^2 probability law with its interference correction (``coherence``),
statement matrices on a periodic lattice (``lattice``), and seeded Monte
Carlo chains (``montecarlo``).  The ``coherence-lab`` CLI exposes each
module's checks and sweeps.
"""

from .coherence import (
    CoherenceModel,
    ComplementRelations,
    LinearityReport,
    ViolationWitness,
    checked_probability,
    classical_compose,
    compose_with_phase,
)
from .interpretations import (
    DEFAULT_THETA_INTERVAL,
    CertainInterpretation,
    ContradictionReport,
    InterpretationPoint,
    Permutation,
    SearchReport,
    ThetaInterval,
    all_permutations,
    apply_permutation,
    certain,
    contradiction_witness,
    exhaustive_algorithm_search,
    permutation_power,
)
from .lattice import (
    LatticeConfig,
    MomentumStatement,
    PositionStatement,
    build_momentum_statement,
    build_position_statement,
    commutator_norm,
    eigenvector_check,
    joint_probability,
    translate,
    verify_idempotent,
)
from .logic import (
    Formula,
    Minterm,
    MintermSet,
    enumerate_minterms,
    evaluate,
    mutually_exclusive,
    parse_formula,
    to_minterm_disjunction,
    verify_tautology_of_all,
)
from .montecarlo import (
    BACKEND,
    RNG_ALGORITHM,
    TrialPlan,
    TrialReport,
    run_chained,
    sample_answer,
    sweep,
)

__version__ = "0.1.0"
