"""Command-line checks and sweeps.

Subcommands: ``logic expand|tautology``, ``coherence table|violate``,
``lattice check``, ``theorem1``, ``mc run``.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

import argparse
import contextlib
import csv
import json
import math
import os
import sys

from . import coherence, interpretations, lattice, logic, montecarlo

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2

DEFAULT_SEED = 42
SEED_ENV_VAR = "COHERENCE_LAB_SEED"

MC_COLUMNS = (
    "a",
    "theta",
    "vartheta",
    "trials",
    "seed",
    "p_direct_hat",
    "p_chained_hat",
    "interference_hat",
    "analytic_interference",
    "std_error",
)
COHERENCE_COLUMNS = (
    "theta",
    "vartheta",
    "p_theta",
    "p_vartheta",
    "classical",
    "interference",
    "composed",
    "exact",
    "abs_error",
)
LATTICE_COLUMNS = (
    "L",
    "k",
    "q0",
    "K",
    "idempotency_residual",
    "commutator_norm",
    "joint_probability",
)


class UsageError(Exception):
    pass


@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as handle:
            yield handle


def _emit(args, columns, rows, notes=()):
    """Write rows as CSV or an aligned table; notes go to the table output
    but to stderr in CSV mode so the CSV stays machine-parseable."""
    with _open_output(args.output) as out:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(rows)
            for note in notes:
                print(note, file=sys.stderr)
        else:
            cells = [[_cell(v) for v in row] for row in rows]
            widths = [
                max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
                for i, name in enumerate(columns)
            ]
            print("  ".join(name.ljust(w) for name, w in zip(columns, widths)), file=out)
            for row in cells:
                print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)), file=out)
            for note in notes:
                print(note, file=out)


def _cell(value):
    # str() matches the csv writer's float rendering, so table and CSV carry
    # identical numeric content
    return str(value)


def _angle(value, args):
    return math.radians(value) if args.degrees else value


def _resolve_seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_SEED


def _cmd_logic_expand(args):
    names = tuple(name.strip() for name in args.vars.split(",") if name.strip())
    formula = logic.parse_formula(args.formula, names)
    indices = sorted(logic.to_minterm_disjunction(formula))
    minterm_set = logic.enumerate_minterms(len(names))
    tautology = logic.verify_tautology_of_all(minterm_set)
    rows = [
        (k, minterm_set.minterms[k - 1].conjunction_text(names)) for k in indices
    ]
    notes = []
    if not indices:
        notes.append("no minterms: the formula is a contradiction")
    notes.append(f"complete disjunction is a tautology: {str(tautology).lower()}")
    _emit(args, ("index", "conjunction"), rows, notes)
    return EXIT_OK if tautology else EXIT_VERIFICATION


def _cmd_logic_tautology(args):
    if not 1 <= args.n <= logic.MAX_VARIABLES:
        raise UsageError(f"--n must be in 1..{logic.MAX_VARIABLES}")
    tautology = logic.verify_tautology_of_all(logic.enumerate_minterms(args.n))
    if args.format == "csv":
        _emit(args, ("n", "tautology"), [(args.n, str(tautology).lower())])
    else:
        with _open_output(args.output) as out:
            print(f"tautology: {str(tautology).lower()}", file=out)
    return EXIT_OK if tautology else EXIT_VERIFICATION


def _coherence_row(model, theta, vartheta):
    p_theta = model.p(theta)
    p_vartheta = model.p(vartheta)
    classical = coherence.classical_compose(p_theta, p_vartheta)
    interference = model.interference_term(theta, vartheta)
    composed = model.compose(theta, vartheta)
    exact = model.p(theta + vartheta)
    return (
        theta,
        vartheta,
        p_theta,
        p_vartheta,
        classical,
        interference,
        composed,
        exact,
        abs(composed - exact),
    )


def _cmd_coherence_table(args):
    model = coherence.CoherenceModel(args.a)
    if args.grid is not None:
        if args.grid < 2:
            raise UsageError("--grid needs at least 2 points")
        interval = interpretations.DEFAULT_THETA_INTERVAL
        step = (interval.theta_max - interval.theta_min) / (args.grid - 1)
        points = [interval.theta_min + i * step for i in range(args.grid)]
        pairs = [(t, v) for t in points for v in points]
    else:
        pairs = [(_angle(args.theta, args), _angle(args.vartheta, args))]
    rows = [_coherence_row(model, t, v) for t, v in pairs]
    worst = max(row[-1] for row in rows)
    _emit(args, COHERENCE_COLUMNS, rows, [f"max abs_error: {worst:.3e}"])
    return EXIT_OK if worst < coherence.IDENTITY_TOLERANCE else EXIT_VERIFICATION


def _cmd_coherence_violate(args):
    witness = coherence.CoherenceModel(args.a).classical_violation_witness()
    lines = [
        f"theta = vartheta = {witness.theta:.12g}",
        f"classical composition: {witness.classical:.12g}",
        f"composed probability:  {witness.required:.12g}",
        f"gap:                   {witness.gap:.12g}",
        "minimum of p^2 + (1-p)^2 over p in [0, 1]: "
        f"{witness.min_self_compose:.12g} at p = {witness.argmin_p:.12g}",
    ]
    if args.format == "csv":
        _emit(
            args,
            ("a", "theta", "classical", "composed", "gap", "min_self_compose", "argmin_p"),
            [
                (
                    args.a,
                    witness.theta,
                    witness.classical,
                    witness.required,
                    witness.gap,
                    witness.min_self_compose,
                    witness.argmin_p,
                )
            ],
        )
    else:
        with _open_output(args.output) as out:
            for line in lines:
                print(line, file=out)
    return EXIT_OK


def _cmd_lattice_check(args):
    if args.L < 2:
        raise UsageError("--L must be at least 2")
    if not args.K > 0:
        raise UsageError("--K must be positive")
    config = lattice.LatticeConfig(args.L, args.K)
    rows, summary = lattice.run_checks(config)
    notes = [
        f"worst idempotency residual:    {summary.worst_idempotency:.3e}",
        f"worst eigenvector residual:    {summary.worst_eigenvector:.3e}",
        f"smallest commutator norm:      {summary.min_commutator:.3e}",
        f"worst joint-probability error: {summary.worst_joint_error:.3e}",
        f"worst translation error:       {summary.worst_translation_error:.3e}",
        f"all checks passed: {str(summary.passed).lower()}",
    ]
    _emit(
        args,
        LATTICE_COLUMNS,
        [
            (
                row.sites,
                row.mode,
                row.site,
                row.amplitude,
                row.idempotency_residual,
                row.commutator_norm,
                row.joint_probability,
            )
            for row in rows
        ],
        notes,
    )
    return EXIT_OK if summary.passed else EXIT_VERIFICATION


def _cmd_theorem1(args):
    if not 2 <= args.N <= 5:
        raise UsageError("--N must be in 2..5")
    report = interpretations.exhaustive_algorithm_search(args.N)
    cycle = interpretations.Permutation(
        tuple(range(2, args.N + 1)) + (1,)
    )
    witness = interpretations.contradiction_witness(cycle, cycle)
    line = (
        f"{report.consistent_candidates} of {report.candidates_tested} candidates "
        "consistent with a non-identity target"
    )
    if args.format == "csv":
        _emit(
            args,
            ("N", "steps", "candidates", "consistent", "sample_step", "sample_power"),
            [
                (
                    report.size,
                    report.steps,
                    report.candidates_tested,
                    report.consistent_candidates,
                    json.dumps(witness.target.as_list()),
                    json.dumps(witness.final.as_list()),
                )
            ],
            [line],
        )
    else:
        with _open_output(args.output) as out:
            print(line, file=out)
            print(
                f"every candidate returns to the identity after {report.steps} equal steps",
                file=out,
            )
            print(
                f"sample: step {json.dumps(witness.target.as_list())} to the power "
                f"{report.steps} is {json.dumps(witness.final.as_list())}, so the "
                "target is unreachable",
                file=out,
            )
    return EXIT_OK if report.consistent_candidates == 0 else EXIT_VERIFICATION


def _report_row(report):
    return (
        report.a,
        report.theta,
        report.vartheta,
        report.trials,
        report.seed,
        report.p_direct_hat,
        report.p_chained_hat,
        report.interference_hat,
        report.analytic_interference,
        report.std_error,
    )


def _cmd_mc_run(args):
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    seed = _resolve_seed(args)
    model = coherence.CoherenceModel(args.a)
    vartheta = _angle(args.vartheta, args)
    if args.grid_points is not None:
        if args.grid_points < 2:
            raise UsageError("--grid-points needs at least 2 points")
        step = math.pi / (args.grid_points - 1)
        thetas = [i * step for i in range(args.grid_points)]
        reports = montecarlo.sweep(model, thetas, vartheta, trials=args.trials, seed=seed)
        allowed_failures = 1
    else:
        plan = montecarlo.TrialPlan(
            model, _angle(args.theta, args), vartheta, trials=args.trials, seed=seed
        )
        reports = [montecarlo.run_chained(plan)]
        allowed_failures = 0
    failures = sum(not report.within(4.0) for report in reports)
    notes = [
        f"rng: {montecarlo.RNG_ALGORITHM}, backend: {montecarlo.BACKEND}",
        f"points outside 4 standard errors: {failures} of {len(reports)}",
    ]
    _emit(args, MC_COLUMNS, [_report_row(r) for r in reports], notes)
    return EXIT_OK if failures <= allowed_failures else EXIT_VERIFICATION


def _add_output_options(parser):
    parser.add_argument(
        "--format", choices=("table", "csv"), default="table", help="output format"
    )
    parser.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def _add_angle_option(parser):
    parser.add_argument(
        "--degrees", action="store_true", help="interpret angle flags in degrees"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coherence-lab",
        description="Checks and sweeps for the two-outcome interference law, "
        "minterm logic, permutation impossibility, and lattice statement matrices.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    logic_parser = top.add_parser("logic", help="formula expansion and tautology checks")
    logic_sub = logic_parser.add_subparsers(dest="subcommand", required=True)
    expand = logic_sub.add_parser("expand", help="expand a formula into minterms")
    expand.add_argument("--formula", required=True, help="formula text, e.g. 'a & !b'")
    expand.add_argument("--vars", required=True, help="comma-separated variable names")
    _add_output_options(expand)
    expand.set_defaults(handler=_cmd_logic_expand)
    tautology = logic_sub.add_parser(
        "tautology", help="check that the disjunction of all minterms always holds"
    )
    tautology.add_argument("--n", type=int, required=True, help="variable count")
    _add_output_options(tautology)
    tautology.set_defaults(handler=_cmd_logic_tautology)

    coherence_parser = top.add_parser(
        "coherence", help="composition tables and the classical-rule violation"
    )
    coherence_sub = coherence_parser.add_subparsers(dest="subcommand", required=True)
    table = coherence_sub.add_parser("table", help="composition law table")
    table.add_argument("--a", type=float, default=0.5, help="phase per unit displacement")
    table.add_argument("--theta", type=float, default=math.pi / 2)
    table.add_argument("--vartheta", type=float, default=math.pi / 2)
    table.add_argument(
        "--grid",
        type=int,
        metavar="N",
        help="sweep an NxN displacement grid over [-pi, pi] instead of one point",
    )
    _add_angle_option(table)
    _add_output_options(table)
    table.set_defaults(handler=_cmd_coherence_table)
    violate = coherence_sub.add_parser(
        "violate", help="show the displacement where the classical rule fails"
    )
    violate.add_argument("--a", type=float, default=0.5)
    _add_output_options(violate)
    violate.set_defaults(handler=_cmd_coherence_violate)

    lattice_parser = top.add_parser("lattice", help="lattice statement-matrix checks")
    lattice_sub = lattice_parser.add_subparsers(dest="subcommand", required=True)
    check = lattice_sub.add_parser(
        "check", help="idempotency, eigenvector, commutator, and trace sweeps"
    )
    check.add_argument("--L", type=int, required=True, help="lattice sites (>= 2)")
    check.add_argument("--K", type=float, default=1.0, help="site-statement amplitude")
    _add_output_options(check)
    check.set_defaults(handler=_cmd_lattice_check)

    theorem1 = top.add_parser(
        "theorem1",
        help="exhaustive search for a fixed-step permutation reaching a "
        "non-identity rearrangement",
    )
    theorem1.add_argument("--N", type=int, required=True, help="interpretation count (2..5)")
    _add_output_options(theorem1)
    theorem1.set_defaults(handler=_cmd_theorem1)

    mc_parser = top.add_parser("mc", help="Monte Carlo interference estimates")
    mc_sub = mc_parser.add_subparsers(dest="subcommand", required=True)
    run = mc_sub.add_parser("run", help="run chained and direct sampling")
    run.add_argument("--a", type=float, default=0.5)
    run.add_argument("--theta", type=float, default=math.pi / 2)
    run.add_argument("--vartheta", type=float, default=math.pi / 2)
    run.add_argument("--trials", type=int, default=1_000_000)
    run.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})",
    )
    run.add_argument(
        "--grid-points",
        type=int,
        metavar="N",
        help="sweep theta over N points from 0 to pi (one outlier tolerated)",
    )
    _add_angle_option(run)
    _add_output_options(run)
    run.set_defaults(handler=_cmd_mc_run)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (UsageError, logic.LogicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
