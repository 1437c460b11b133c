"""Renaming a judgement's context onto a fresh variable ordering.

For ``Γ = x1:A1, ..., xn:An`` and an ordering ``σ`` the standardized context is
``Γ^σ = σ(0):A1', ..., σ(n-1):An'`` with ``Ak' = Ak[σ(0..k-2)/x1..x(k-1)]``.
``σ(Γ): Γ^σ -> Γ`` sends ``x_k`` to ``σ(k-1)`` and ``σ⁻¹(Γ): Γ -> Γ^σ`` is
``OV(Γ)``; both composites are identities.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from dfolkit.checker.judgements import (
    CheckedMap,
    Derivation,
    HasType,
    IsContext,
    IsType,
    Judgement,
    Mode,
)
from dfolkit.checker.kernel import Kernel
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.exceptions import CheckError
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext, Var, subst
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Standardization:
    """A judgement moved onto ``Γ^σ`` with the two comparison maps."""

    judgement: Judgement
    derivation: Derivation
    forward: CheckedMap
    backward: CheckedMap

    @property
    def context(self) -> PreContext:
        return self.judgement.context


def standardize_context(ctx: PreContext, sigma: Sequence[Variable]) -> PreContext:
    """Γ^σ for the first ``len(ctx)`` values of ``sigma``."""
    if len(sigma) < len(ctx):
        raise CheckError(f"ordering of length {len(sigma)} is too short for {ctx}", rule="sigma")
    entries = []
    for k, (_, A) in enumerate(ctx.entries):
        renamed = tuple(Var(v) for v in sigma[:k])
        entries.append((sigma[k], subst(A, renamed, ctx.variables[:k])))
    return PreContext(tuple(entries))


def is_standard(sig: Signature, ctx: PreContext) -> bool:
    """Whether ``ctx`` already uses the signature's canonical fresh sequence."""
    return ctx.variables == sig.standard_sequence(len(ctx))


def standardize(
    sig: Signature,
    j: Judgement,
    sigma: Optional[Sequence[Variable]] = None,
    mode: Mode = Mode.R5,
    fuel: int = DEFAULT_FUEL,
) -> Standardization:
    """Transport ``j`` to ``Γ^σ``.

    Args:
        sig: The signature the judgement is checked against
        j: A judgement whose context checks
        sigma: Variable ordering; defaults to the signature's canonical sequence
        mode: Kernel mode used for the rechecks

    Returns:
        The transported judgement, its derivation and the maps
        ``σ(Γ): Γ^σ -> Γ`` (``forward``) and ``σ⁻¹(Γ): Γ -> Γ^σ`` (``backward``)

    Raises:
        CheckError: If ``j`` does not check, or the maps are not mutually inverse
    """
    kernel = Kernel(sig, mode=mode, fuel=fuel)
    ctx = j.context
    kernel.check(j)
    order: Tuple[Variable, ...] = (
        tuple(sigma[: len(ctx)]) if sigma is not None else sig.standard_sequence(len(ctx))
    )
    target = standardize_context(ctx, order)
    renamed = tuple(Var(v) for v in order)
    forward = kernel.check_ctx_map(target, ctx, renamed)
    backward = kernel.check_ctx_map(ctx, target, ctx.as_terms())

    if kernel.compose(forward, backward).terms != ctx.as_terms():
        raise CheckError(f"σ(Γ) ∘ σ⁻¹(Γ) is not the identity on {ctx}", rule="sigma")
    if kernel.compose(backward, forward).terms != target.as_terms():
        raise CheckError(f"σ⁻¹(Γ) ∘ σ(Γ) is not the identity on {target}", rule="sigma")

    moved = _rename(j, target, renamed, ctx)
    logger.debug("standardized %s to %s", j, moved)
    return Standardization(moved, kernel.check(moved), forward, backward)


def _rename(
    j: Judgement, target: PreContext, renamed: Tuple[Var, ...], ctx: PreContext
) -> Judgement:
    over = ctx.variables
    if isinstance(j, IsContext):
        return IsContext(target)
    if isinstance(j, IsType):
        return IsType(target, subst(j.type, renamed, over))
    return HasType(target, subst(j.term, renamed, over), subst(j.type, renamed, over))
