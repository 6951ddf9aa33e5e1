"""Formula parsing, evaluation, and minterm expansion."""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coherence_lab import logic

VARS = ("a", "b", "c", "p", "q")


# --- independent oracle: truth bitmasks over canonical assignment rows -----
#
# Row m (0-based) corresponds to minterm index m + 1: reading the bits of m
# from the most significant position, bit 0 means the variable is true.  The
# oracle never calls the library's evaluator; formulas are combined as integer
# bitmasks over all rows.


def _rows(n):
    return 1 << n


def _row_values(row, n):
    return tuple(not ((row >> (n - 1 - i)) & 1) for i in range(n))


def _column_mask(names, name):
    n = len(names)
    i = names.index(name)
    mask = 0
    for row in range(_rows(n)):
        if not (row >> (n - 1 - i)) & 1:
            mask |= 1 << row
    return mask


def _truth_mask(node, names):
    full = (1 << _rows(len(names))) - 1
    if isinstance(node, logic.Var):
        return _column_mask(names, node.name)
    if isinstance(node, logic.Not):
        return full ^ _truth_mask(node.child, names)
    left = _truth_mask(node.left, names)
    right = _truth_mask(node.right, names)
    if isinstance(node, logic.And):
        return left & right
    if isinstance(node, logic.Or):
        return left | right
    if isinstance(node, logic.Implies):
        return (full ^ left) | right
    return full ^ (left ^ right)


def _random_node(rng, names, depth):
    if depth == 0 or rng.random() < 0.25:
        return logic.Var(rng.choice(names))
    kind = rng.randrange(5)
    if kind == 0:
        return logic.Not(_random_node(rng, names, depth - 1))
    left = _random_node(rng, names, depth - 1)
    right = _random_node(rng, names, depth - 1)
    return [logic.And, logic.Or, logic.Implies, logic.Iff][kind - 1](left, right)


def random_formulas(count, max_vars=6, seed=20260809):
    rng = random.Random(seed)
    for _ in range(count):
        names = VARS[: rng.randint(1, min(max_vars, len(VARS)))]
        yield logic.Formula(_random_node(rng, names, depth=4), names)


# --- parsing ----------------------------------------------------------------


def test_parse_conjunction_with_negation():
    f = logic.parse_formula("a & !b", ("a", "b"))
    assert f.root == logic.And(logic.Var("a"), logic.Not(logic.Var("b")))


def test_parse_excluded_middle():
    f = logic.parse_formula("a | !a", ("a",))
    assert f.root == logic.Or(logic.Var("a"), logic.Not(logic.Var("a")))


def test_parse_implication_equivalence_is_tautology():
    f = logic.parse_formula("(a -> b) <-> (!a | b)", ("a", "b"))
    assert isinstance(f.root, logic.Iff)
    full = (1 << 4) - 1
    assert _truth_mask(f.root, f.variables) == full


def test_precedence_and_associativity():
    f = logic.parse_formula("a -> b -> c", ("a", "b", "c"))
    assert f.root == logic.Implies(
        logic.Var("a"), logic.Implies(logic.Var("b"), logic.Var("c"))
    )
    g = logic.parse_formula("!a & b | c", ("a", "b", "c"))
    assert g.root == logic.Or(
        logic.And(logic.Not(logic.Var("a")), logic.Var("b")), logic.Var("c")
    )


@pytest.mark.parametrize(
    "text,position",
    [("a & & b", 4), ("(a", 2), ("a )", 2), ("a &", 3), ("", 0), ("a @ b", 2)],
)
def test_syntax_error_reports_position(text, position):
    with pytest.raises(logic.FormulaSyntaxError) as err:
        logic.parse_formula(text, ("a", "b"))
    assert err.value.position == position


def test_unknown_variable_names_offender():
    with pytest.raises(logic.UnknownVariableError) as err:
        logic.parse_formula("a & z", ("a", "b"))
    assert err.value.name == "z"


@pytest.mark.parametrize("names", [(), ("a", "a"), ("A",), ("1x",), ("a-b",)])
def test_invalid_variable_declarations(names):
    with pytest.raises(ValueError):
        logic.parse_formula("a", names)


# --- evaluation -------------------------------------------------------------


def test_evaluate_basic():
    f = logic.parse_formula("a & !b", ("a", "b"))
    assert logic.evaluate(f, {"a": True, "b": False}) is True
    assert logic.evaluate(f, {"a": True, "b": True}) is False


def test_evaluate_missing_variable():
    f = logic.parse_formula("a & b", ("a", "b"))
    with pytest.raises(logic.MissingVariableError):
        logic.evaluate(f, {"a": True})


def test_evaluate_matches_independent_oracle():
    for f in random_formulas(200):
        n = len(f.variables)
        mask = _truth_mask(f.root, f.variables)
        for row in range(_rows(n)):
            env = dict(zip(f.variables, _row_values(row, n)))
            assert logic.evaluate(f, env) == bool((mask >> row) & 1)


# --- minterm enumeration ----------------------------------------------------


def test_enumerate_one_variable():
    ms = logic.enumerate_minterms(1)
    assert [m.signs for m in ms.minterms] == [(True,), (False,)]


def test_enumerate_two_variables_canonical_order():
    ms = logic.enumerate_minterms(2)
    assert ms.size == 4
    assert [m.signs for m in ms.minterms] == [
        (True, True),
        (True, False),
        (False, True),
        (False, False),
    ]
    assert [m.conjunction_text(("a", "b")) for m in ms.minterms] == [
        "a & b",
        "a & !b",
        "!a & b",
        "!a & !b",
    ]


@pytest.mark.parametrize("n", range(1, 7))
def test_each_assignment_satisfies_exactly_one_minterm(n):
    ms = logic.enumerate_minterms(n)
    for values in itertools.product((True, False), repeat=n):
        hits = [m.index for m in ms.minterms if m.satisfied_by(values)]
        assert len(hits) == 1


def test_minterm_index_encoding_roundtrip():
    for n in range(1, 7):
        for k in range(1, (1 << n) + 1):
            m = logic.minterm_from_index(k, n)
            assert m.index == k
            assert logic.index_for_signs(m.signs) == k


def test_minterm_rejects_wrong_index():
    with pytest.raises(ValueError):
        logic.Minterm(1, (False, False))


@pytest.mark.parametrize("n", [0, -1, 21])
def test_enumerate_rejects_out_of_range(n):
    with pytest.raises(ValueError):
        logic.enumerate_minterms(n)


def test_satisfied_by_rejects_wrong_length():
    m = logic.minterm_from_index(1, 2)
    with pytest.raises(ValueError):
        m.satisfied_by((True,))


# --- minterm expansion ------------------------------------------------------


def test_projection_selects_unnegated_half():
    f = logic.parse_formula("a", ("a", "b"))
    assert sorted(logic.to_minterm_disjunction(f)) == [1, 2]


def test_contradiction_expands_to_empty_set():
    f = logic.parse_formula("a & !a", ("a",))
    assert logic.to_minterm_disjunction(f) == frozenset()


def test_expansion_matches_independent_oracle():
    for f in random_formulas(200):
        mask = _truth_mask(f.root, f.variables)
        expected = frozenset(
            row + 1 for row in range(_rows(len(f.variables))) if (mask >> row) & 1
        )
        assert logic.to_minterm_disjunction(f) == expected


def test_expansion_is_equivalent_under_all_assignments():
    for f in random_formulas(60):
        indices = logic.to_minterm_disjunction(f)
        ms = logic.enumerate_minterms(len(f.variables))
        for values in itertools.product((True, False), repeat=len(f.variables)):
            expanded = any(ms.minterms[k - 1].satisfied_by(values) for k in indices)
            assert expanded == logic.evaluate(f, dict(zip(f.variables, values)))


# --- tautology and exclusivity ----------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_disjunction_is_tautology(n):
    assert logic.verify_tautology_of_all(logic.enumerate_minterms(n)) is True


@pytest.mark.parametrize("n", range(1, 5))
def test_tautology_against_naive_disjunction_sweep(n):
    ms = logic.enumerate_minterms(n)
    for values in itertools.product((True, False), repeat=n):
        assert any(m.satisfied_by(values) for m in ms.minterms)


def test_mutual_exclusivity_all_pairs():
    ms = logic.enumerate_minterms(4)
    for first, second in itertools.product(ms.minterms, repeat=2):
        expected = first.index != second.index
        assert logic.mutually_exclusive(first, second) is expected


def test_mutual_exclusivity_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        logic.mutually_exclusive(
            logic.minterm_from_index(1, 2), logic.minterm_from_index(1, 3)
        )


# --- printing round-trip ----------------------------------------------------

_nodes = st.recursive(
    st.builds(logic.Var, st.sampled_from(VARS)),
    lambda children: st.one_of(
        st.builds(logic.Not, children),
        st.builds(logic.And, children, children),
        st.builds(logic.Or, children, children),
        st.builds(logic.Implies, children, children),
        st.builds(logic.Iff, children, children),
    ),
    max_leaves=25,
)


@given(_nodes)
def test_parse_print_parse_is_fixed_point(root):
    formula = logic.Formula(root, VARS)
    text = formula.to_text()
    reparsed = logic.parse_formula(text, VARS)
    assert reparsed.root == root
    assert reparsed.to_text() == text
