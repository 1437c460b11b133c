"""α-equivalence through a locally nameless key.

Bound variables are replaced by their binder distance and free variables keep
their names. A binder's type is read in the scope outside the binder.
"""

from typing import Hashable, Tuple

from dfolkit.dfol.formulas import CONNECTIVES, Atom, Bot, Formula, Top
from dfolkit.syntax.terms import PreTerm, PreType, Var
from dfolkit.syntax.variables import Variable

Scope = Tuple[Variable, ...]


def _term_key(t: PreTerm, scope: Scope) -> Hashable:
    if isinstance(t, Var):
        for distance, x in enumerate(reversed(scope)):
            if x == t.name:
                return ("bound", distance)
        return ("free", t.name)
    return ("app", t.head) + tuple(_term_key(a, scope) for a in t.args)


def _type_key(A: PreType, scope: Scope) -> Hashable:
    return ("type", A.head) + tuple(_term_key(a, scope) for a in A.args)


def alpha_key(phi: Formula, scope: Scope = ()) -> Hashable:
    """A key equal for two formulas exactly when they are α-equivalent."""
    if isinstance(phi, Atom):
        return ("atom", phi.pred) + tuple(_term_key(a, scope) for a in phi.args)
    if isinstance(phi, (Top, Bot)):
        return (type(phi).__name__,)
    if isinstance(phi, CONNECTIVES):
        return (type(phi).__name__, alpha_key(phi.left, scope), alpha_key(phi.right, scope))
    return (
        type(phi).__name__,
        _type_key(phi.type, scope),
        alpha_key(phi.body, scope + (phi.var,)),
    )


def alpha_eq(phi: Formula, psi: Formula) -> bool:
    return phi == psi or alpha_key(phi) == alpha_key(psi)

