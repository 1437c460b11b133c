"""Proof trees and their checker.

A proof is an explicit tree: each node names its rule, states its conclusion
sequent and lists its premises in the order of the rule's display. Two rule
sets are checked:

- ``dfol`` compares formulas literally and weakens along the canonical
  projection ``p_Γ(x:A)``; substitution is capture avoiding.
- ``dfolstar`` compares formulas up to α, uses the unweakened formula in the
  quantifier rules and ordinary syntactic substitution. It runs over the
  unrestricted variant of the signature.

Quantifier rules, with the premise above the line::

    UnivI   φ{p} ⟹ ψ (Γ, x:A)   /   φ ⟹ (∀x:A) ψ (Γ)
    ExisE   ψ ⟹ φ{p} (Γ, x:A)   /   (∃x:A) ψ ⟹ φ (Γ)

``UnivE`` and ``ExisI`` are the same rules read downwards.
"""

import logging
import operator
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, Optional, Tuple

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.alpha import alpha_eq
from dfolkit.dfol.formation import FormulaChecker
from dfolkit.dfol.formulas import And, Bot, Exists, Forall, Formula, Imp, Or, Sequent, Top
from dfolkit.dfol.substitution import projection, rename_bound, subst_formula, subst_syntactic
from dfolkit.dfol.theory import Theory
from dfolkit.exceptions import KernelError, ProofError
from dfolkit.syntax.terms import PreTerm

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]


class ProofRule(str, Enum):
    AXIOM = "Axiom"
    REF = "Ref"
    CUT = "Cut"
    CONJ_L1 = "ConjL1"
    CONJ_L2 = "ConjL2"
    CONJ_I = "ConjI"
    TOP_I = "TopI"
    DISJ_R1 = "DisjR1"
    DISJ_R2 = "DisjR2"
    DISJ_E = "DisjE"
    BOT_E = "BotE"
    IMP_I = "ImpI"
    IMP_E = "ImpE"
    UNIV_I = "UnivI"
    UNIV_E = "UnivE"
    EXIS_E = "ExisE"
    EXIS_I = "ExisI"
    SUBS = "Subs"


PREMISES: Dict[ProofRule, int] = {
    ProofRule.AXIOM: 0,
    ProofRule.REF: 0,
    ProofRule.CUT: 2,
    ProofRule.CONJ_L1: 0,
    ProofRule.CONJ_L2: 0,
    ProofRule.CONJ_I: 2,
    ProofRule.TOP_I: 0,
    ProofRule.DISJ_R1: 0,
    ProofRule.DISJ_R2: 0,
    ProofRule.DISJ_E: 2,
    ProofRule.BOT_E: 0,
    ProofRule.IMP_I: 1,
    ProofRule.IMP_E: 1,
    ProofRule.UNIV_I: 1,
    ProofRule.UNIV_E: 1,
    ProofRule.EXIS_E: 1,
    ProofRule.EXIS_I: 1,
    ProofRule.SUBS: 1,
}


class ProofMode(str, Enum):
    DFOL = "dfol"
    STAR = "dfolstar"


@dataclass(frozen=True)
class Proof:
    """One node of a proof tree.

    ``name`` is the cited axiom of an ``Axiom`` node and ``terms`` the map
    ``ā: Δ -> Γ`` of a ``Subs`` node, from the conclusion's context to the
    premise's.
    """

    rule: ProofRule
    conclusion: Sequent
    premises: Tuple["Proof", ...] = ()
    name: Optional[str] = None
    terms: Optional[Tuple[PreTerm, ...]] = None

    @property
    def height(self) -> int:
        return 1 + max((p.height for p in self.premises), default=0)

    def walk(self) -> Iterator["Proof"]:
        yield self
        for p in self.premises:
            yield from p.walk()

    @property
    def size(self) -> int:
        return sum(1 for _ in self.walk())


@dataclass
class ProofCheck:
    theory: str
    mode: ProofMode
    conclusion: Sequent
    height: int
    rules: Counter = field(default_factory=Counter)

    @property
    def nodes(self) -> int:
        return sum(self.rules.values())

    def to_dict(self) -> dict:
        return {
            "theory": self.theory,
            "mode": self.mode.value,
            "conclusion": str(self.conclusion),
            "nodes": self.nodes,
            "height": self.height,
            "rules": dict(sorted(self.rules.items())),
        }


class ProofChecker:
    """Checks proof trees against one theory in one mode."""

    def __init__(self, theory: Theory, mode: ProofMode = ProofMode.DFOL, fuel: int = DEFAULT_FUEL):
        self.theory = theory
        self.mode = mode
        self.star = mode is ProofMode.STAR
        self.formulas = FormulaChecker(theory.signature, star=self.star, fuel=fuel)
        self.signature = self.formulas.signature
        self.kernel = self.formulas.kernel
        self.same: Callable[[Formula, Formula], bool] = alpha_eq if self.star else operator.eq
        self._rules: Dict[ProofRule, Callable[[Proof, Path], None]] = {
            ProofRule.AXIOM: self._axiom,
            ProofRule.REF: self._ref,
            ProofRule.CUT: self._cut,
            ProofRule.CONJ_L1: self._conj_left,
            ProofRule.CONJ_L2: self._conj_left,
            ProofRule.CONJ_I: self._conj_intro,
            ProofRule.TOP_I: self._top,
            ProofRule.DISJ_R1: self._disj_right,
            ProofRule.DISJ_R2: self._disj_right,
            ProofRule.DISJ_E: self._disj_elim,
            ProofRule.BOT_E: self._bot,
            ProofRule.IMP_I: self._imp_intro,
            ProofRule.IMP_E: self._imp_elim,
            ProofRule.UNIV_I: self._quantifier,
            ProofRule.UNIV_E: self._quantifier,
            ProofRule.EXIS_E: self._quantifier,
            ProofRule.EXIS_I: self._quantifier,
            ProofRule.SUBS: self._subs,
        }

    def check(self, proof: Proof) -> ProofCheck:
        """Verify every node, root first.

        Raises:
            ProofError: At the path of the first node that does not match its rule
        """
        report = ProofCheck(self.theory.name, self.mode, proof.conclusion, proof.height)
        self._node(proof, (), report.rules)
        logger.debug("proof of %s accepted: %d nodes", proof.conclusion, report.nodes)
        return report

    def _node(self, node: Proof, path: Path, seen: Counter) -> None:
        rule = node.rule
        seen[rule.value] += 1
        if len(node.premises) != PREMISES[rule]:
            raise ProofError(
                f"{rule.value} takes {PREMISES[rule]} premises, found {len(node.premises)}",
                rule=rule.value,
                path=path,
            )
        try:
            self.formulas.check_sequent(node.conclusion)
        except KernelError as e:
            raise ProofError(
                f"conclusion {node.conclusion} is not a sequent: {e}", rule=rule.value, path=path
            ) from e
        self._rules[rule](node, path)
        for k, premise in enumerate(node.premises, start=1):
            self._node(premise, path + (k,), seen)

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------

    def _expect(
        self, node: Proof, path: Path, what: str, computed: Formula, supplied: Formula
    ) -> None:
        if not self.same(computed, supplied):
            raise ProofError(
                f"{what}: expected {computed}, found {supplied}",
                rule=node.rule.value,
                path=path,
                computed=computed,
                supplied=supplied,
            )

    def _shape(self, node: Proof, path: Path, phi: Formula, kind: type, side: str) -> None:
        if not isinstance(phi, kind):
            raise ProofError(
                f"{side} {phi} is not a {kind.__name__.lower()}", rule=node.rule.value, path=path
            )

    def _same_context(self, node: Proof, path: Path) -> None:
        for k, premise in enumerate(node.premises, start=1):
            if premise.conclusion.context != node.conclusion.context:
                raise ProofError(
                    f"premise {k} is over {premise.conclusion.context},"
                    f" not {node.conclusion.context}",
                    rule=node.rule.value,
                    path=path,
                )

    # ------------------------------------------------------------------
    # propositional rules
    # ------------------------------------------------------------------

    def _axiom(self, node: Proof, path: Path) -> None:
        if node.name is None:
            raise ProofError("axiom node without a name", rule="Axiom", path=path)
        axiom = self.theory.axiom(node.name)
        if axiom is None:
            raise ProofError(
                f"unknown axiom {node.name} in theory {self.theory.name}", rule="Axiom", path=path
            )
        seq = node.conclusion
        if seq.context != axiom.context:
            raise ProofError(
                f"axiom {node.name} is over {axiom.context}, not {seq.context}",
                rule="Axiom",
                path=path,
            )
        self._expect(node, path, f"axiom {node.name}", axiom.lhs, seq.lhs)
        self._expect(node, path, f"axiom {node.name}", axiom.rhs, seq.rhs)

    def _ref(self, node: Proof, path: Path) -> None:
        self._expect(node, path, "right side", node.conclusion.lhs, node.conclusion.rhs)

    def _cut(self, node: Proof, path: Path) -> None:
        self._same_context(node, path)
        first, second = (p.conclusion for p in node.premises)
        self._expect(node, path, "left side", node.conclusion.lhs, first.lhs)
        self._expect(node, path, "cut formula", first.rhs, second.lhs)
        self._expect(node, path, "right side", node.conclusion.rhs, second.rhs)

    def _conj_left(self, node: Proof, path: Path) -> None:
        lhs = node.conclusion.lhs
        self._shape(node, path, lhs, And, "left side")
        part = lhs.left if node.rule is ProofRule.CONJ_L1 else lhs.right  # type: ignore[union-attr]
        self._expect(node, path, "conjunct", part, node.conclusion.rhs)

    def _conj_intro(self, node: Proof, path: Path) -> None:
        self._same_context(node, path)
        seq = node.conclusion
        self._shape(node, path, seq.rhs, And, "right side")
        for premise, part in zip(node.premises, (seq.rhs.left, seq.rhs.right)):  # type: ignore
            self._expect(node, path, "left side", seq.lhs, premise.conclusion.lhs)
            self._expect(node, path, "conjunct", part, premise.conclusion.rhs)

    def _top(self, node: Proof, path: Path) -> None:
        self._shape(node, path, node.conclusion.rhs, Top, "right side")

    def _disj_right(self, node: Proof, path: Path) -> None:
        rhs = node.conclusion.rhs
        self._shape(node, path, rhs, Or, "right side")
        part = rhs.left if node.rule is ProofRule.DISJ_R1 else rhs.right  # type: ignore[union-attr]
        self._expect(node, path, "disjunct", part, node.conclusion.lhs)

    def _disj_elim(self, node: Proof, path: Path) -> None:
        self._same_context(node, path)
        seq = node.conclusion
        self._shape(node, path, seq.lhs, Or, "left side")
        for premise, part in zip(node.premises, (seq.lhs.left, seq.lhs.right)):  # type: ignore
            self._expect(node, path, "disjunct", part, premise.conclusion.lhs)
            self._expect(node, path, "right side", seq.rhs, premise.conclusion.rhs)

    def _bot(self, node: Proof, path: Path) -> None:
        self._shape(node, path, node.conclusion.lhs, Bot, "left side")

    def _imp_intro(self, node: Proof, path: Path) -> None:
        self._same_context(node, path)
        seq, premise = node.conclusion, node.premises[0].conclusion
        self._shape(node, path, seq.rhs, Imp, "right side")
        rhs: Imp = seq.rhs  # type: ignore[assignment]
        self._expect(node, path, "premise left side", And(seq.lhs, rhs.left), premise.lhs)
        self._expect(node, path, "premise right side", rhs.right, premise.rhs)

    def _imp_elim(self, node: Proof, path: Path) -> None:
        self._same_context(node, path)
        seq, premise = node.conclusion, node.premises[0].conclusion
        self._shape(node, path, premise.rhs, Imp, "premise right side")
        self._shape(node, path, seq.lhs, And, "left side")
        imp: Imp = premise.rhs  # type: ignore[assignment]
        lhs: And = seq.lhs  # type: ignore[assignment]
        self._expect(node, path, "left conjunct", premise.lhs, lhs.left)
        self._expect(node, path, "right conjunct", imp.left, lhs.right)
        self._expect(node, path, "right side", imp.right, seq.rhs)

    # ------------------------------------------------------------------
    # quantifier and substitution rules
    # ------------------------------------------------------------------

    def _quantifier(self, node: Proof, path: Path) -> None:
        rule = node.rule
        upward = rule in (ProofRule.UNIV_I, ProofRule.EXIS_E)
        premise = node.premises[0].conclusion
        outer, inner = (node.conclusion, premise) if upward else (premise, node.conclusion)
        universal = rule in (ProofRule.UNIV_I, ProofRule.UNIV_E)
        if universal:
            self._shape(node, path, outer.rhs, Forall, "right side")
            quant, side, inner_side, inner_body = outer.rhs, outer.lhs, inner.lhs, inner.rhs
        else:
            self._shape(node, path, outer.lhs, Exists, "left side")
            quant, side, inner_side, inner_body = outer.lhs, outer.rhs, inner.rhs, inner.lhs
        ctx = outer.context
        ext = inner.context
        if len(ext) != len(ctx) + 1 or ext.prefix(len(ctx)) != ctx:
            raise ProofError(
                f"{ext} does not extend {ctx} by one variable", rule=rule.value, path=path
            )
        y, A = ext.entries[-1]
        if A != quant.type:  # type: ignore[union-attr]
            raise ProofError(
                f"bound type {quant.type} differs from {A}",  # type: ignore[union-attr]
                rule=rule.value,
                path=path,
            )
        if self.star:
            weakened = side
            body = rename_bound(self.signature, quant, y).body  # type: ignore[arg-type,union-attr]
        else:
            if y != quant.var:  # type: ignore[union-attr]
                raise ProofError(
                    f"{ext} does not bind {quant.var}",  # type: ignore[union-attr]
                    rule=rule.value,
                    path=path,
                )
            weakened = subst_formula(self.signature, side, projection(ctx, y, A))
            body = quant.body  # type: ignore[union-attr]
        self._expect(node, path, "weakened formula", weakened, inner_side)
        self._expect(node, path, "quantified body", body, inner_body)

    def _subs(self, node: Proof, path: Path) -> None:
        if node.terms is None:
            raise ProofError("substitution node without a map", rule="Subs", path=path)
        seq, premise = node.conclusion, node.premises[0].conclusion
        try:
            checked = self.kernel.check_ctx_map(seq.context, premise.context, node.terms)
        except KernelError as e:
            raise ProofError(
                f"({' '.join(map(str, node.terms))}) is not a map"
                f" {seq.context} -> {premise.context}: {e}",
                rule="Subs",
                path=path,
            ) from e
        pairs = (("left", premise.lhs, seq.lhs), ("right", premise.rhs, seq.rhs))
        for side, formula, supplied in pairs:
            if self.star:
                computed = subst_syntactic(
                    self.signature, formula, node.terms, premise.context.variables
                )
            else:
                computed = subst_formula(self.signature, formula, checked.map)
            self._expect(node, path, f"substituted {side} side", computed, supplied)


def check_proof(
    theory: Theory,
    proof: Proof,
    mode: ProofMode = ProofMode.DFOL,
    fuel: int = DEFAULT_FUEL,
) -> ProofCheck:
    """Check ``proof`` against ``theory`` under the ``mode`` rule set.

    Raises:
        ProofError: With the failing node's path, and both forms on a
            substitution mismatch
    """
    return ProofChecker(theory, mode, fuel).check(proof)
