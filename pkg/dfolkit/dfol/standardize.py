"""Standardized formulas.

For an ordering ``σ`` the standardized formula ``φ^σ`` over ``Γ^σ`` renames
the context onto ``σ`` and binds ``σ(|Γ|)`` at a quantifier over ``Γ``:

- atoms and the constants become ``φ[σ(Γ)/Γ]``;
- connectives act pointwise;
- ``((Q x:A) θ)^σ = (Q σ(|Γ|):A[σ(Γ)/Γ]) θ^σ`` with ``θ`` read over ``Γ, x:A``.

α-equivalent formulas over the same context have identical standardizations.
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

from dfolkit.checker.standardize import standardize_context
from dfolkit.dfol.formulas import (
    CONNECTIVES,
    Atom,
    Bot,
    Formula,
    Sequent,
    Top,
    binder_depth,
    rebuild,
    requantify,
)
from dfolkit.exceptions import CheckError
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext, PreTerm, Var, apply_map
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


def ordering(sig: Signature, n: int, sigma: Optional[Sequence[Variable]] = None) -> Tuple:
    if sigma is not None:
        return tuple(sigma)
    return sig.standard_sequence(n)


def _standardize(
    phi: Formula, depth: int, renaming: Dict[Variable, PreTerm], sigma: Tuple
) -> Formula:
    if isinstance(phi, Atom):
        return Atom(phi.pred, tuple(apply_map(a, renaming) for a in phi.args))
    if isinstance(phi, (Top, Bot)):
        return phi
    if isinstance(phi, CONNECTIVES):
        return rebuild(
            phi,
            _standardize(phi.left, depth, renaming, sigma),
            _standardize(phi.right, depth, renaming, sigma),
        )
    y = sigma[depth]
    A = apply_map(phi.type, renaming)
    inner = {**renaming, phi.var: Var(y)}
    return requantify(phi, y, A, _standardize(phi.body, depth + 1, inner, sigma))


def standardize_formula(
    sig: Signature,
    ctx: PreContext,
    phi: Formula,
    sigma: Optional[Sequence[Variable]] = None,
) -> Tuple[PreContext, Formula]:
    """``(Γ^σ, φ^σ)``; ``sigma`` defaults to the signature's canonical sequence."""
    order = ordering(sig, len(ctx) + binder_depth(phi), sigma)
    if len(order) < len(ctx) + binder_depth(phi):
        raise CheckError(f"ordering of length {len(order)} is too short for {phi}", rule="sigma")
    renaming: Dict[Variable, PreTerm] = {}
    for k, x in enumerate(ctx.variables):
        renaming[x] = Var(order[k])
    return standardize_context(ctx, order), _standardize(phi, len(ctx), renaming, order)


def standardize_sequent(
    sig: Signature, seq: Sequent, sigma: Optional[Sequence[Variable]] = None
) -> Sequent:
    depth = max(binder_depth(seq.lhs), binder_depth(seq.rhs))
    order = ordering(sig, len(seq.context) + depth, sigma)
    ctx, lhs = standardize_formula(sig, seq.context, seq.lhs, order)
    _, rhs = standardize_formula(sig, seq.context, seq.rhs, order)
    logger.debug("standardized %s", seq)
    return Sequent(ctx, lhs, rhs)
