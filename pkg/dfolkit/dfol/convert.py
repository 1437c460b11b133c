"""Translating proofs between the two rule sets.

Over a de Bruijn signature ``φ{ā}`` and ``φ[ā/Γ]`` are α-equivalent, so a
``dfol`` tree becomes a ``dfolstar`` tree by dropping the weakening in the
quantifier rules. In the other direction every sequent is standardized in its
own context, ``Subs`` maps are moved onto the standardized contexts and
axioms are read in the standardized theory ``T^σ``.
"""

import logging
from dataclasses import replace
from typing import Optional, Sequence, Tuple

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.proofs import Proof, ProofMode, ProofRule, check_proof
from dfolkit.dfol.standardize import standardize_sequent
from dfolkit.dfol.theory import Theory
from dfolkit.exceptions import SideConditionError
from dfolkit.syntax.terms import Var, subst
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


def _require_debruijn(theory: Theory) -> None:
    if not theory.signature.is_debruijn:
        raise SideConditionError(
            f"theory {theory.name} is not over a de Bruijn signature", rule="convert"
        )


def _unweakened(node: Proof) -> Proof:
    premises = tuple(_unweakened(p) for p in node.premises)
    seq = node.conclusion
    if node.rule is ProofRule.UNIV_I:
        top = premises[0]
        premises = (replace(top, conclusion=replace(top.conclusion, lhs=seq.lhs)),)
    elif node.rule is ProofRule.EXIS_E:
        top = premises[0]
        premises = (replace(top, conclusion=replace(top.conclusion, rhs=seq.rhs)),)
    elif node.rule is ProofRule.UNIV_E:
        seq = replace(seq, lhs=premises[0].conclusion.lhs)
    elif node.rule is ProofRule.EXIS_I:
        seq = replace(seq, rhs=premises[0].conclusion.rhs)
    return replace(node, conclusion=seq, premises=premises)


def dfol_to_star(theory: Theory, proof: Proof, fuel: int = DEFAULT_FUEL) -> Proof:
    """Rewrite an accepted ``dfol`` proof into an accepted ``dfolstar`` proof.

    Raises:
        SideConditionError: If the signature is not de Bruijn
        ProofError: If ``proof`` is rejected in either mode
    """
    _require_debruijn(theory)
    check_proof(theory, proof, ProofMode.DFOL, fuel)
    converted = _unweakened(proof)
    check_proof(theory, converted, ProofMode.STAR, fuel)
    logger.debug("converted %d nodes to the syntactic rule set", converted.size)
    return converted


def _standardized(theory: Theory, node: Proof, sigma: Optional[Sequence[Variable]]) -> Proof:
    sig = theory.signature
    seq = standardize_sequent(sig, node.conclusion, sigma)
    premises = tuple(_standardized(theory, p, sigma) for p in node.premises)
    terms = node.terms
    if node.rule is ProofRule.SUBS and terms is not None:
        delta = node.conclusion.context
        renamed = tuple(Var(x) for x in seq.context.variables)
        terms = tuple(subst(t, renamed, delta.variables) for t in terms)
    return Proof(node.rule, seq, premises, node.name, terms)


def star_to_dfol(
    theory: Theory,
    proof: Proof,
    sigma: Optional[Sequence[Variable]] = None,
    fuel: int = DEFAULT_FUEL,
) -> Tuple[Theory, Proof]:
    """Standardize an accepted ``dfolstar`` proof into a ``dfol`` proof in ``T^σ``.

    Returns:
        The standardized theory and the translated proof

    Raises:
        SideConditionError: If the signature is not de Bruijn
        ProofError: If ``proof`` is rejected in either mode
    """
    _require_debruijn(theory)
    check_proof(theory, proof, ProofMode.STAR, fuel)
    standard = theory.standardized(sigma)
    converted = _standardized(theory, proof, sigma)
    check_proof(standard, converted, ProofMode.DFOL, fuel)
    logger.debug("standardized %d nodes", converted.size)
    return standard, converted