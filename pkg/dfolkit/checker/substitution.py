"""Substitution along a checked context map, acting on whole derivations."""

import logging

from dfolkit.checker.judgements import (
    CheckedMap,
    Derivation,
    HasType,
    IsType,
    Judgement,
    Mode,
    Rule,
)
from dfolkit.checker.kernel import Kernel
from dfolkit.exceptions import KernelError, SubstitutionError
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext, Var, subst

logger = logging.getLogger(__name__)


def substitute_judgement(j: Judgement, s: CheckedMap) -> Judgement:
    """Move ``j`` from ``s.target`` to ``s.source`` by substituting ``s.terms``."""
    over = s.target.variables
    if isinstance(j, IsType):
        return IsType(s.source, subst(j.type, s.terms, over))
    if isinstance(j, HasType):
        return HasType(s.source, subst(j.term, s.terms, over), subst(j.type, s.terms, over))
    raise SubstitutionError("only type and term judgements can be substituted into", rule="subst")


def apply_substitution(
    sig: Signature, d: Derivation, s: CheckedMap, recheck: bool = False
) -> Derivation:
    """Transport a type or term derivation over Γ along ``s: Θ -> Γ``.

    The result concludes ``B[s/Γ] type (Θ)`` or ``b[s/Γ] : B[s/Γ] (Θ)``. It is
    assembled from ``d`` without search: variable leaves become the matching
    component of ``s``, every other node keeps its rule and declaration premise.
    Its height is at most ``d.height`` plus the largest component height of ``s``.

    Args:
        sig: Signature ``d`` was checked against
        d: Derivation of an ``IsType`` or ``HasType`` judgement over ``s.target``
        s: Checked context map into the context of ``d``
        recheck: Also run the result's conclusion through a fresh kernel

    Raises:
        SubstitutionError: If ``d`` lives over a context other than ``s.target``,
            or the recheck rejects the result
    """
    context: PreContext = d.conclusion.context
    if context != s.target:
        raise SubstitutionError(
            f"derivation lives over {context}, map targets {s.target}", rule="subst"
        )
    result = _transport(d, s)
    logger.debug("substituted %s into %s", s.map, d.conclusion)
    if recheck:
        mode = Mode.R5STAR if any(n.rule is Rule.R5STAR for n in d.walk()) else Mode.R5
        try:
            Kernel(sig, mode=mode).check(result.conclusion)
        except KernelError as e:
            raise SubstitutionError(f"substituted judgement does not recheck: {e}") from e
    return result


def _transport(d: Derivation, s: CheckedMap) -> Derivation:
    conclusion = substitute_judgement(d.conclusion, s)
    if d.rule is Rule.R3:
        term = d.conclusion.term  # type: ignore[union-attr]
        assert isinstance(term, Var)
        return s.components[s.target.position(term.name) - 1]
    if d.rule in (Rule.R4, Rule.R5, Rule.R5STAR):
        declaration_context = d.premises[1]
        rest = tuple(_transport(p, s) for p in d.premises[2:])
        return Derivation.build(
            d.rule, conclusion, (s.source_derivation, declaration_context) + rest
        )
    raise SubstitutionError(f"unexpected {d.rule.value} node in a type or term derivation")
