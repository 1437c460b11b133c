"""Weakening, strengthening and interchange as executable transforms.

Each transform checks its side condition, rewrites the judgement and hands the
result back to the kernel, so the returned derivation is always a fresh kernel
derivation. All three need a variable system that accepts arbitrary fresh
variables; under the de Bruijn flavor the moved contexts would stop being
contexts.
"""

import logging
from enum import Enum
from typing import Optional, Tuple

from dfolkit.checker.judgements import Derivation, HasType, IsContext, IsType, Judgement, Mode, Rule
from dfolkit.checker.kernel import Kernel
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.exceptions import KernelError, SideConditionError
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext, PreType, free_vars
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


class Transform(str, Enum):
    WEAKEN = "weaken"
    STRENGTHEN = "strengthen"
    INTERCHANGE = "interchange"


def _with_context(j: Judgement, ctx: PreContext) -> Judgement:
    if isinstance(j, IsContext):
        return IsContext(ctx)
    if isinstance(j, IsType):
        return IsType(ctx, j.type)
    return HasType(ctx, j.term, j.type)


def _body(j: Judgement) -> Tuple[object, ...]:
    """The parts of ``j`` right of the turnstile."""
    if isinstance(j, IsContext):
        return ()
    if isinstance(j, IsType):
        return (j.type,)
    return (j.term, j.type)


def _require_unrestricted(sig: Signature, kind: Transform) -> None:
    if sig.is_debruijn:
        raise SideConditionError(
            f"{kind.value} needs an unrestricted variable system", rule=kind.value
        )


def _recheck(
    sig: Signature, d: Derivation, j: Judgement, kind: Transform, fuel: int
) -> Derivation:
    mode = Mode.R5STAR if any(n.rule is Rule.R5STAR for n in d.walk()) else Mode.R5
    try:
        result = Kernel(sig, mode=mode, fuel=fuel).check(j)
    except KernelError as e:
        raise SideConditionError(
            f"{kind.value}: transformed judgement does not check: {e}",
            rule=kind.value,
            path=e.path,
        ) from e
    logger.debug("%s: %s", kind.value, j)
    return result


def _check_position(ctx: PreContext, position: int, kind: Transform, low: int, high: int) -> None:
    if not low <= position <= high:
        raise SideConditionError(
            f"position {position} is outside {low}..{high} for {ctx}", rule=kind.value
        )


def weaken(
    sig: Signature,
    d: Derivation,
    position: int,
    variable: Variable,
    type: PreType,
    fuel: int = DEFAULT_FUEL,
) -> Derivation:
    """From ``Γ, Θ ⊢ J`` derive ``Γ, y:B, Θ ⊢ J`` where ``Γ`` has ``position`` entries.

    Raises:
        SideConditionError: If ``y`` occurs in ``Γ, Θ`` or ``B type (Γ)`` fails
    """
    kind = Transform.WEAKEN
    _require_unrestricted(sig, kind)
    ctx = d.conclusion.context
    _check_position(ctx, position, kind, 0, len(ctx))
    if variable in free_vars(ctx):
        raise SideConditionError(f"{variable} already occurs in {ctx}", rule=kind.value)
    widened = ctx.prefix(position).extend(variable, type).concat(ctx.suffix(position))
    return _recheck(sig, d, _with_context(d.conclusion, widened), kind, fuel)


def strengthen(
    sig: Signature, d: Derivation, position: int, fuel: int = DEFAULT_FUEL
) -> Derivation:
    """From ``Γ, y:B, Θ ⊢ J`` derive ``Γ, Θ ⊢ J``; ``y`` is entry ``position`` (1-based).

    Raises:
        SideConditionError: If ``y`` occurs in ``Θ`` or in the body of ``J``
    """
    kind = Transform.STRENGTHEN
    _require_unrestricted(sig, kind)
    ctx = d.conclusion.context
    _check_position(ctx, position, kind, 1, len(ctx))
    y = ctx.variables[position - 1]
    rest = ctx.suffix(position)
    if y in free_vars(rest) or y in free_vars(_body(d.conclusion)):  # type: ignore[arg-type]
        raise SideConditionError(
            f"{y} is still used after position {position}", rule=kind.value, path=(position,)
        )
    narrowed = ctx.prefix(position - 1).concat(rest)
    return _recheck(sig, d, _with_context(d.conclusion, narrowed), kind, fuel)


def interchange(
    sig: Signature, d: Derivation, position: int, fuel: int = DEFAULT_FUEL
) -> Derivation:
    """Swap entries ``position`` and ``position + 1``: ``Γ, x:A, y:C, Θ`` to ``Γ, y:C, x:A, Θ``.

    Raises:
        SideConditionError: If ``x`` occurs in ``C``
    """
    kind = Transform.INTERCHANGE
    _require_unrestricted(sig, kind)
    ctx = d.conclusion.context
    _check_position(ctx, position, kind, 1, len(ctx) - 1)
    (x, A), (y, C) = ctx.entries[position - 1], ctx.entries[position]
    if x in free_vars(C):
        raise SideConditionError(
            f"the type {C} of {y} depends on {x}", rule=kind.value, path=(position + 1,)
        )
    swapped = PreContext(
        ctx.entries[: position - 1] + ((y, C), (x, A)) + ctx.entries[position + 1 :]
    )
    return _recheck(sig, d, _with_context(d.conclusion, swapped), kind, fuel)


def structural_transform(
    kind: str,
    sig: Signature,
    d: Derivation,
    position: int,
    variable: Optional[Variable] = None,
    type: Optional[PreType] = None,
    fuel: int = DEFAULT_FUEL,
) -> Derivation:
    """Dispatch to :func:`weaken`, :func:`strengthen` or :func:`interchange`."""
    transform = Transform(kind)
    if transform is Transform.WEAKEN:
        if variable is None or type is None:
            raise SideConditionError("weaken needs a variable and its type", rule="weaken")
        return weaken(sig, d, position, variable, type, fuel=fuel)
    if transform is Transform.STRENGTHEN:
        return strengthen(sig, d, position, fuel=fuel)
    return interchange(sig, d, position, fuel=fuel)
