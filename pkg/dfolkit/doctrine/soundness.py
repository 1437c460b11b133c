"""Soundness checks against finite models.

A model of a theory is a model of its signature in the finite-set cwf
together with a subset for every predicate, such that every axiom holds in the
subset doctrine. Every sequent concluded by an accepted proof must then hold
as well. :func:`soundness_harness` checks exactly that over a batch of models,
and :func:`countermodel` searches the other way, for a model of the theory in
which a given sequent fails.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from dfolkit.constants import DEFAULT_FUEL, DEFAULT_LAW_SIZE
from dfolkit.cwf.finset import FinSetCwF, powerset
from dfolkit.cwf.model import (
    ModelAssignment,
    extend_model_by_fun,
    extend_model_by_pred,
    extend_model_by_type,
)
from dfolkit.dfol.formulas import Formula, Sequent
from dfolkit.dfol.proofs import Proof, ProofMode, check_proof
from dfolkit.dfol.standardize import standardize_sequent
from dfolkit.dfol.theory import Theory
from dfolkit.doctrine.evaluate import Evaluator
from dfolkit.doctrine.subset import Subset, SubsetDoctrine
from dfolkit.exceptions import KernelError
from dfolkit.signature.declarations import PredDecl, TypeDecl
from dfolkit.syntax.terms import PreContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteModel:
    """A finite-set model of a signature with a subset for each predicate."""

    model: ModelAssignment
    preds: Mapping[str, Subset]

    def evaluator(self, fuel: int = DEFAULT_FUEL) -> Evaluator:
        return Evaluator(SubsetDoctrine(self.model.target), self.model, self.preds, fuel)

    def describe(self) -> str:
        parts = [f"{S}={v}" for S, v in self.model.types.items()]
        parts += [f"{f}={v}" for f, v in self.model.funs.items()]
        parts += [f"{R}={v}" for R, v in self.preds.items()]
        return "; ".join(parts)


def check_sequent_semantic(
    model: FiniteModel, seq: Sequent, fuel: int = DEFAULT_FUEL
) -> bool:
    """``⟦lhs⟧ ⊆ ⟦rhs⟧`` in the subset doctrine of ``model``."""
    return model.evaluator(fuel).sequent(seq)


def finite_models(
    theory: Theory,
    size: int = DEFAULT_LAW_SIZE,
    limit: Optional[int] = None,
    fuel: int = DEFAULT_FUEL,
) -> Iterator[FiniteModel]:
    """Models of the signature of ``theory`` whose fibers are subsets of ``range(size)``.

    Every type symbol ranges over all families, every function symbol over all
    sections and every predicate over all subsets of its context. Axioms are
    not checked here. At most ``limit`` models are produced.
    """
    cwf = FinSetCwF()
    universe = tuple(range(size))
    sig = theory.signature
    decls = list(sig)

    def replay(k: int, model: ModelAssignment, preds: Dict[str, Subset]) -> Iterator[FiniteModel]:
        if k == len(decls):
            yield FiniteModel(model, dict(preds))
            return
        decl = decls[k]
        interp = model.interpretation(fuel)
        if isinstance(decl, PredDecl):
            extended = extend_model_by_pred(model, decl, fuel)
            home = interp.context(decl.context)
            for members in powerset(home):
                preds[decl.symbol] = Subset(home, frozenset(members))
                yield from replay(k + 1, extended, preds)
            preds.pop(decl.symbol, None)
        elif isinstance(decl, TypeDecl):
            home = interp.context(decl.context)
            for A in cwf.all_types(home, universe):
                yield from replay(k + 1, extend_model_by_type(model, decl, A, fuel), preds)
        else:
            U = interp.type(decl.context, decl.result)
            for a in cwf.all_sections(U):
                yield from replay(k + 1, extend_model_by_fun(model, decl, a, fuel), preds)

    empty = ModelAssignment.empty(cwf, sig.variables)
    yield from itertools.islice(replay(0, empty, {}), limit)


def models_of(
    theory: Theory,
    size: int = DEFAULT_LAW_SIZE,
    limit: Optional[int] = None,
    fuel: int = DEFAULT_FUEL,
) -> Iterator[FiniteModel]:
    """The finite models in which every axiom of ``theory`` holds."""
    for candidate in finite_models(theory, size, fuel=fuel):
        if limit is not None and limit <= 0:
            return
        if not candidate.evaluator(fuel).failing_axioms(theory):
            if limit is not None:
                limit -= 1
            yield candidate


@dataclass
class SoundnessReport:
    theory: str
    proofs: int = 0
    unaccepted: List[str] = field(default_factory=list)
    models: int = 0
    rejected: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theory": self.theory,
            "proofs": self.proofs,
            "unaccepted": list(self.unaccepted),
            "models": self.models,
            "rejected": self.rejected,
            "violations": list(self.violations),
        }


def soundness_harness(
    theory: Theory,
    proofs: Sequence[Proof],
    models: Iterable[FiniteModel],
    mode: ProofMode = ProofMode.DFOL,
    fuel: int = DEFAULT_FUEL,
) -> SoundnessReport:
    """Evaluate the conclusion of every accepted proof in every model of ``theory``.

    Proofs the kernel rejects are listed in ``unaccepted`` and not evaluated.
    Models in which some axiom fails are counted in ``rejected``. DFOL*
    conclusions are evaluated after standardization.
    """
    report = SoundnessReport(theory.name)
    conclusions: List[Sequent] = []
    for proof in proofs:
        try:
            check_proof(theory, proof, mode, fuel)
        except KernelError as e:
            report.unaccepted.append(f"{proof.conclusion}: {e}")
            continue
        seq = proof.conclusion
        if mode is ProofMode.STAR:
            seq = standardize_sequent(theory.signature, seq)
        conclusions.append(seq)
    report.proofs = len(conclusions)

    for candidate in models:
        evaluator = candidate.evaluator(fuel)
        if evaluator.failing_axioms(theory):
            report.rejected += 1
            continue
        report.models += 1
        for seq in conclusions:
            if not evaluator.sequent(seq):
                report.violations.append(f"{seq} fails in {candidate.describe()}")
    logger.info(
        "soundness of %s: %d proofs, %d models, %d rejected, %d violations",
        theory.name,
        report.proofs,
        report.models,
        report.rejected,
        len(report.violations),
    )
    return report


def countermodel(
    theory: Theory,
    seq: Sequent,
    size: int = DEFAULT_LAW_SIZE,
    limit: Optional[int] = None,
    fuel: int = DEFAULT_FUEL,
) -> Optional[FiniteModel]:
    """A model of ``theory`` in which ``seq`` fails, searching fibers up to ``size``."""
    for candidate in models_of(theory, size, limit, fuel):
        if not check_sequent_semantic(candidate, seq, fuel):
            logger.debug("countermodel for %s: %s", seq, candidate.describe())
            return candidate
    return None


def disagreements(
    first: Evaluator, second: Evaluator, formulas: Iterable[Tuple[PreContext, Formula]]
) -> List[Tuple[PreContext, Formula, Any, Any]]:
    """Formulas on which two evaluations of the same model differ."""
    found = []
    for ctx, phi in formulas:
        left, right = first.formula(ctx, phi), second.formula(ctx, phi)
        if left != right:
            found.append((ctx, phi, left, right))
    return found
