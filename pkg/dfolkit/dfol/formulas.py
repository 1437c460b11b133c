"""Formulas in context and sequents.

Formulas are immutable trees. Atoms list only the explicit arguments of their
predicate; hidden arguments are recovered when the atom is checked.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterator, Tuple, Union

from dfolkit.syntax.terms import PreContext, PreTerm, PreType, free_vars
from dfolkit.syntax.variables import Variable


@dataclass(frozen=True)
class Atom:
    pred: str
    args: Tuple[PreTerm, ...] = ()

    def __str__(self) -> str:
        return "(" + " ".join([self.pred] + [str(a) for a in self.args]) + ")"


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return "top"


@dataclass(frozen=True)
class Bot:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"(and {self.left} {self.right})"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"(or {self.left} {self.right})"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return f"(imp {self.left} {self.right})"


@dataclass(frozen=True)
class Forall:
    var: Variable
    type: PreType
    body: "Formula"

    def __str__(self) -> str:
        return f"(forall {self.var} {self.type} {self.body})"


@dataclass(frozen=True)
class Exists:
    var: Variable
    type: PreType
    body: "Formula"

    def __str__(self) -> str:
        return f"(exists {self.var} {self.type} {self.body})"


Formula = Union[Atom, Top, Bot, And, Or, Imp, Forall, Exists]
Connective = Union[And, Or, Imp]
Quantifier = Union[Forall, Exists]

CONNECTIVES = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)


@dataclass(frozen=True)
class Sequent:
    """``lhs ⟹ rhs (context)``."""

    context: PreContext
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return f"(seq {self.context} {self.lhs} {self.rhs})"


def free_variables(phi: Formula) -> FrozenSet[Variable]:
    """FV, with ``FV((Q x:A) φ) = FV(A) ∪ (FV(φ) - {x})``."""
    if isinstance(phi, Atom):
        return free_vars(phi.args)
    if isinstance(phi, (Top, Bot)):
        return frozenset()
    if isinstance(phi, CONNECTIVES):
        return free_variables(phi.left) | free_variables(phi.right)
    return free_vars(phi.type) | (free_variables(phi.body) - {phi.var})


def bound_variables(phi: Formula) -> FrozenSet[Variable]:
    if isinstance(phi, (Atom, Top, Bot)):
        return frozenset()
    if isinstance(phi, CONNECTIVES):
        return bound_variables(phi.left) | bound_variables(phi.right)
    return bound_variables(phi.body) | {phi.var}


def height(phi: Formula) -> int:
    if isinstance(phi, (Atom, Top, Bot)):
        return 0
    if isinstance(phi, CONNECTIVES):
        return 1 + max(height(phi.left), height(phi.right))
    return 1 + height(phi.body)


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, CONNECTIVES):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, QUANTIFIERS):
        yield from subformulas(phi.body)


def rebuild(phi: Connective, left: Formula, right: Formula) -> Formula:
    return type(phi)(left, right)


def requantify(phi: Quantifier, var: Variable, A: PreType, body: Formula) -> Formula:
    return type(phi)(var, A, body)



def binder_depth(phi: Formula) -> int:
    """Largest number of nested quantifiers."""
    if isinstance(phi, (Atom, Top, Bot)):
        return 0
    if isinstance(phi, CONNECTIVES):
        return max(binder_depth(phi.left), binder_depth(phi.right))
    return 1 + binder_depth(phi.body)
