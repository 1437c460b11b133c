"""Substitution into formulas.

``subst_formula`` is substitution along a context map ``ā: Δ -> Γ``: atoms
substitute their arguments and a quantifier ``(Q x:A) θ`` becomes
``(Q y:A[ā/Γ]) θ{(ā, y)}`` with ``y = fresh(Δ)``. It never renames except at
binders and never inspects free variables, so it preserves formula height.

``subst_syntactic`` is ordinary simultaneous substitution ``φ[ā/x̄]`` with a
binder renamed only when a substituted value would be captured. Its result is
determined up to α.
"""

import logging
from typing import Mapping, Sequence

from dfolkit.checker.judgements import ContextMap
from dfolkit.dfol.formulas import (
    CONNECTIVES,
    Atom,
    Bot,
    Formula,
    Quantifier,
    Sequent,
    Top,
    free_variables,
    rebuild,
    requantify,
)
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import (
    PreContext,
    PreTerm,
    PreType,
    Var,
    apply_map,
    free_vars,
    subst,
    substitution_map,
)
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


def projection(ctx: PreContext, x: Variable, A: PreType) -> ContextMap:
    """The canonical projection ``p_Γ(x:A) = (⟨Γ, x:A⟩, Γ, OV(Γ))``."""
    return ContextMap(ctx.extend(x, A), ctx, ctx.as_terms())


def subst_formula(sig: Signature, phi: Formula, f: ContextMap) -> Formula:
    """``φ{f}`` for ``φ`` over ``f.target``; the result lives over ``f.source``."""
    over = f.target.variables
    if isinstance(phi, Atom):
        return Atom(phi.pred, tuple(subst(a, f.terms, over) for a in phi.args))
    if isinstance(phi, (Top, Bot)):
        return phi
    if isinstance(phi, CONNECTIVES):
        return rebuild(phi, subst_formula(sig, phi.left, f), subst_formula(sig, phi.right, f))
    y = sig.fresh(f.source)
    A = subst(phi.type, f.terms, over)
    inner = ContextMap(
        f.source.extend(y, A), f.target.extend(phi.var, phi.type), f.terms + (Var(y),)
    )
    return requantify(phi, y, A, subst_formula(sig, phi.body, inner))


def subst_sequent(sig: Signature, seq: Sequent, f: ContextMap) -> Sequent:
    return Sequent(f.source, subst_formula(sig, seq.lhs, f), subst_formula(sig, seq.rhs, f))


def weaken_formula(sig: Signature, ctx: PreContext, A: PreType, phi: Formula) -> Formula:
    """``φ{p_Γ(x:A)}`` with ``x = fresh(Γ)``."""
    return subst_formula(sig, phi, projection(ctx, sig.fresh(ctx), A))


def subst_syntactic(
    sig: Signature, phi: Formula, values: Sequence[PreTerm], over: Sequence[Variable]
) -> Formula:
    """``φ[values/over]``, renaming binders on demand.

    Raises:
        SubstitutionError: On a length mismatch or a repeated target variable
    """
    return replace(sig, phi, substitution_map(values, over))


def replace(sig: Signature, phi: Formula, mapping: Mapping[Variable, PreTerm]) -> Formula:
    if not mapping:
        return phi
    if isinstance(phi, Atom):
        return Atom(phi.pred, tuple(apply_map(a, mapping) for a in phi.args))
    if isinstance(phi, (Top, Bot)):
        return phi
    if isinstance(phi, CONNECTIVES):
        return rebuild(phi, replace(sig, phi.left, mapping), replace(sig, phi.right, mapping))
    return _replace_binder(sig, phi, mapping)


def _replace_binder(
    sig: Signature, phi: Quantifier, mapping: Mapping[Variable, PreTerm]
) -> Formula:
    A = apply_map(phi.type, mapping)
    live = free_variables(phi.body) - {phi.var}
    inner = {v: t for v, t in mapping.items() if v in live}
    x = phi.var
    reached = free_vars(tuple(inner.values()))
    if x in reached:
        used = reached | free_variables(phi.body) | frozenset(inner)
        y = sig.variables.widen().pick(used, sig.symbols)
        logger.debug("renaming binder %s to %s", x, y)
        inner[x] = Var(y)
        x = y
    return requantify(phi, x, A, replace(sig, phi.body, inner))


def rename_bound(sig: Signature, phi: Quantifier, y: Variable) -> Formula:
    """``(Q y:A) θ[y/x]``; ``y`` must not occur free in ``θ`` other than as ``x``."""
    if y == phi.var:
        return phi
    return requantify(phi, y, phi.type, replace(sig, phi.body, {phi.var: Var(y)}))
