"""Propositional formulas over a declared variable list, and their expansion
into the complete family of sign-definite conjunctions (minterms).

Formulas use an ASCII grammar: ``!`` negation, ``&`` conjunction, ``|``
disjunction, ``->`` implication (right-associative), ``<->`` biconditional,
parentheses, lowercase variable names.  Precedence, tightest first:
``!``, ``&``, ``|``, ``->``, ``<->``.
"""

import itertools
import re
from dataclasses import dataclass

__all__ = [
    "MAX_VARIABLES",
    "LogicError",
    "FormulaSyntaxError",
    "UnknownVariableError",
    "MissingVariableError",
    "Var",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Formula",
    "Minterm",
    "MintermSet",
    "parse_formula",
    "evaluate",
    "enumerate_minterms",
    "minterm_from_index",
    "index_for_signs",
    "to_minterm_disjunction",
    "verify_tautology_of_all",
    "mutually_exclusive",
]

# Resource guard: enumerating minterms is O(2^n).
MAX_VARIABLES = 20


class LogicError(Exception):
    """Base class for formula and minterm errors."""


class FormulaSyntaxError(LogicError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(LogicError):
    def __init__(self, name):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class MissingVariableError(LogicError):
    def __init__(self, name):
        super().__init__(f"assignment is missing variable {name!r}")
        self.name = name


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Not:
    child: "Node"


@dataclass(frozen=True)
class And:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Or:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Implies:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Iff:
    left: "Node"
    right: "Node"


Node = Var | Not | And | Or | Implies | Iff

_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6}
_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


@dataclass(frozen=True)
class Formula:
    """A parse tree together with its declared, ordered variable list."""

    root: Node
    variables: tuple[str, ...]

    @property
    def n(self):
        return len(self.variables)

    def to_text(self):
        """Render with the minimal parentheses that re-parse to this tree."""
        return _format(self.root)


def _format(node):
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Not):
        inner = _format(node.child)
        if _PRECEDENCE[type(node.child)] < _PRECEDENCE[Not]:
            inner = f"({inner})"
        return "!" + inner
    level = _PRECEDENCE[type(node)]
    right_assoc = isinstance(node, (Implies, Iff))
    left = _format(node.left)
    right = _format(node.right)
    if _PRECEDENCE[type(node.left)] < level or (
        _PRECEDENCE[type(node.left)] == level and right_assoc
    ):
        left = f"({left})"
    if _PRECEDENCE[type(node.right)] < level or (
        _PRECEDENCE[type(node.right)] == level and not right_assoc
    ):
        right = f"({right})"
    return f"{left} {_SYMBOL[type(node)]} {right}"


_NAME_RE = re.compile(r"[a-z][a-z0-9_]*")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()!&|":
            tokens.append((ch, ch, i))
            i += 1
        elif text.startswith("<->", i):
            tokens.append(("<->", "<->", i))
            i += 3
        elif text.startswith("->", i):
            tokens.append(("->", "->", i))
            i += 2
        else:
            match = _NAME_RE.match(text, i)
            if match is None:
                raise FormulaSyntaxError(f"unexpected character {ch!r}", i)
            tokens.append(("name", match.group(), i))
            i = match.end()
    tokens.append(("end", "end of input", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, declared):
        self.tokens = tokens
        self.pos = 0
        self.declared = declared

    def _peek(self):
        return self.tokens[self.pos][0]

    def _take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self):
        node = self._iff()
        kind, text, at = self.tokens[self.pos]
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {text!r}", at)
        return node

    def _iff(self):
        node = self._implies()
        if self._peek() == "<->":
            self._take()
            return Iff(node, self._iff())
        return node

    def _implies(self):
        node = self._or()
        if self._peek() == "->":
            self._take()
            return Implies(node, self._implies())
        return node

    def _or(self):
        node = self._and()
        while self._peek() == "|":
            self._take()
            node = Or(node, self._and())
        return node

    def _and(self):
        node = self._unary()
        while self._peek() == "&":
            self._take()
            node = And(node, self._unary())
        return node

    def _unary(self):
        if self._peek() == "!":
            self._take()
            return Not(self._unary())
        return self._atom()

    def _atom(self):
        kind, text, at = self._take()
        if kind == "(":
            node = self._iff()
            kind, text, at = self._take()
            if kind != ")":
                raise FormulaSyntaxError(f"expected ')', got {text!r}", at)
            return node
        if kind == "name":
            if text not in self.declared:
                raise UnknownVariableError(text)
            return Var(text)
        raise FormulaSyntaxError(f"expected a variable or '(', got {text!r}", at)


def parse_formula(text, variables):
    """Parse ``text`` over the ordered variable list ``variables``.

    Raises FormulaSyntaxError (with position) on malformed input and
    UnknownVariableError when the text references an undeclared name.
    """
    names = tuple(variables)
    if not 1 <= len(names) <= MAX_VARIABLES:
        raise ValueError(f"need 1..{MAX_VARIABLES} declared variables, got {len(names)}")
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    for name in names:
        if not _NAME_RE.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
    root = _Parser(_tokenize(text), frozenset(names)).parse()
    return Formula(root, names)


def evaluate(formula, assignment):
    """Classical truth-functional evaluation under ``assignment``."""
    for name in formula.variables:
        if name not in assignment:
            raise MissingVariableError(name)
    return _eval(formula.root, assignment)


def _eval(node, env):
    if isinstance(node, Var):
        return bool(env[node.name])
    if isinstance(node, Not):
        return not _eval(node.child, env)
    a = _eval(node.left, env)
    b = _eval(node.right, env)
    if isinstance(node, And):
        return a and b
    if isinstance(node, Or):
        return a or b
    if isinstance(node, Implies):
        return (not a) or b
    return a == b


def index_for_signs(signs):
    """Canonical 1-based index of a sign pattern.

    The first variable is the most significant position and an unnegated
    variable contributes a 0 bit, so index 1 is the all-unnegated conjunction
    and index 2^n the all-negated one.
    """
    value = 0
    for sign in signs:
        value = (value << 1) | (not sign)
    return value + 1


@dataclass(frozen=True)
class Minterm:
    """One sign-definite conjunction: sign True means the variable appears
    unnegated.  Exactly one assignment satisfies it."""

    index: int
    signs: tuple[bool, ...]

    def __post_init__(self):
        if self.index != index_for_signs(self.signs):
            raise ValueError(
                f"index {self.index} does not match the canonical encoding of {self.signs}"
            )

    @property
    def n(self):
        return len(self.signs)

    def satisfied_by(self, values):
        if len(values) != self.n:
            raise ValueError("assignment length differs from variable count")
        return tuple(bool(v) for v in values) == self.signs

    def assignment(self, variables):
        """The unique satisfying assignment, as a name -> bool mapping."""
        return dict(zip(variables, self.signs))

    def conjunction_text(self, variables):
        return " & ".join(
            name if sign else "!" + name for name, sign in zip(variables, self.signs)
        )


def minterm_from_index(index, n):
    signs = tuple(not ((index - 1) >> (n - 1 - i)) & 1 for i in range(n))
    return Minterm(index, signs)


@dataclass(frozen=True)
class MintermSet:
    """All 2^n minterms over n variables, in canonical order."""

    n: int
    size: int
    minterms: tuple[Minterm, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if self.size != 1 << self.n or len(self.minterms) != self.size:
            raise ValueError("size must equal 2^n and match the minterm count")
        for position, minterm in enumerate(self.minterms, start=1):
            if minterm.index != position or minterm.n != self.n:
                raise ValueError(f"minterm at position {position} is out of place")


def enumerate_minterms(n):
    """All 2^n minterms over n variables, canonically ordered."""
    if not 1 <= n <= MAX_VARIABLES:
        raise ValueError(f"n must be in 1..{MAX_VARIABLES}, got {n}")
    minterms = tuple(
        Minterm(position, signs)
        for position, signs in enumerate(itertools.product((True, False), repeat=n), 1)
    )
    return MintermSet(n, 1 << n, minterms)


def to_minterm_disjunction(formula):
    """Indices of the minterms whose satisfying assignment makes the formula
    true; their disjunction is logically equivalent to the formula."""
    names = formula.variables
    indices = set()
    for values in itertools.product((True, False), repeat=len(names)):
        if _eval(formula.root, dict(zip(names, values))):
            indices.add(index_for_signs(values))
    return frozenset(indices)


def verify_tautology_of_all(minterm_set):
    """True iff the disjunction of all minterms holds under every assignment."""
    for values in itertools.product((True, False), repeat=minterm_set.n):
        position = index_for_signs(values)
        if minterm_set.minterms[position - 1].signs == values:
            continue
        # Canonically ordered sets never reach this; scan for completeness.
        if not any(m.signs == values for m in minterm_set.minterms):
            return False
    return True


def mutually_exclusive(first, second):
    """True iff no assignment satisfies both minterms.

    A sign conjunction is satisfied only by its own sign pattern, so two
    minterms share an assignment exactly when their patterns coincide; a
    minterm is not exclusive with itself.
    """
    if first.n != second.n:
        raise ValueError("variable counts differ")
    return first.signs != second.signs
