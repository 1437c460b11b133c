"""The Lindenbaum–Tarski doctrine of a theory.

``Pr(Γ)`` holds the formulas over ``Γ``; substitution is capture-avoiding
substitution along context maps and ``∀_{(Γ,A)}(⟨Γ, x:A⟩, ψ) = (∀x:A) ψ``
with ``x = fresh(Γ)``. The order is derivability in the theory, which is not
decidable: ``φ ≤ ψ`` is established by handing an accepted proof to
:meth:`LTDoctrine.certify_le`. Missing a certificate says nothing.

The adjunctions ``∃_S ⊣ (-){p} ⊣ ∀_S`` are realized as proof transformers.
"""

import logging
from dataclasses import dataclass

from dfolkit.checker.judgements import ContextMap
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.free import FreeCwF, FreeType
from dfolkit.dfol.formation import FormulaChecker
from dfolkit.dfol.formulas import And, Bot, Exists, Forall, Formula, Imp, Or, Sequent, Top
from dfolkit.dfol.proofs import Proof, ProofCheck, ProofMode, ProofRule, check_proof
from dfolkit.dfol.substitution import subst_formula
from dfolkit.dfol.theory import Theory
from dfolkit.doctrine.base import Hyperdoctrine
from dfolkit.exceptions import DoctrineError
from dfolkit.syntax.terms import PreContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Prop:
    context: PreContext
    formula: Formula

    def __str__(self) -> str:
        return f"{self.formula} over {self.context}"


class LTDoctrine(Hyperdoctrine[Prop]):
    name = "lindenbaum-tarski"

    def __init__(self, theory: Theory, fuel: int = DEFAULT_FUEL):
        super().__init__(FreeCwF(theory.signature, fuel=fuel))
        self.free: FreeCwF = self.base  # type: ignore[assignment]
        self.theory = theory
        self.signature = theory.signature
        self.fuel = fuel
        self.formulas = FormulaChecker(theory.signature, fuel=fuel)

    def element(self, ctx: PreContext, phi: Formula) -> Prop:
        return Prop(ctx, self.formulas.check(ctx, phi).formula)

    def context_of(self, x: Prop) -> PreContext:
        return x.context

    def le(self, x: Prop, y: Prop) -> bool:
        raise DoctrineError(
            "derivability is certified by proofs, see certify_le", rule="le"
        )

    def certify_le(
        self, x: Prop, y: Prop, proof: Proof, mode: ProofMode = ProofMode.DFOL
    ) -> ProofCheck:
        """Accept ``proof`` as a certificate of ``x ≤ y``.

        Raises:
            DoctrineError: If the proof concludes another sequent
            ProofError: If the proof is rejected
        """
        G = self.require_same(x, y, "le")
        wanted = Sequent(G, x.formula, y.formula)
        if proof.conclusion != wanted:
            raise DoctrineError(f"proof concludes {proof.conclusion}, not {wanted}", rule="le")
        return check_proof(self.theory, proof, mode, self.fuel)

    def top(self, G: PreContext) -> Prop:
        return Prop(G, Top())

    def bot(self, G: PreContext) -> Prop:
        return Prop(G, Bot())

    def conj(self, x: Prop, y: Prop) -> Prop:
        return Prop(self.require_same(x, y, "and"), And(x.formula, y.formula))

    def disj(self, x: Prop, y: Prop) -> Prop:
        return Prop(self.require_same(x, y, "or"), Or(x.formula, y.formula))

    def imp(self, x: Prop, y: Prop) -> Prop:
        return Prop(self.require_same(x, y, "imp"), Imp(x.formula, y.formula))

    def subst(self, x: Prop, f: ContextMap) -> Prop:
        self.require_at(x, f.target, "subst")
        return Prop(f.source, subst_formula(self.signature, x.formula, f))

    def forall(self, S: FreeType, x: Prop) -> Prop:
        self.require_quantifiable(S, x, "forall")
        return Prop(S.context, Forall(x.context.variables[-1], S.type, x.formula))

    def exists(self, S: FreeType, x: Prop) -> Prop:
        self.require_quantifiable(S, x, "exists")
        return Prop(S.context, Exists(x.context.variables[-1], S.type, x.formula))

    def weaken(self, S: FreeType, x: Prop) -> Prop:
        """``x{p(S)}``."""
        return self.subst(x, self.free.proj(S))

    def beck_chevalley(self, S: FreeType, x: Prop, f: ContextMap, universal: bool = True) -> bool:
        """``Q_S(x){f} = Q_{S{f}}(x{q(f, S)})`` as literal formulas."""
        quantify = self.forall if universal else self.exists
        left = self.subst(quantify(S, x), f)
        right = quantify(self.free.ty_subst(S, f), self.subst(x, self.free.q(f, S)))
        if left != right:
            logger.debug("Beck-Chevalley fails: %s against %s", left, right)
        return left == right

    # ------------------------------------------------------------------
    # proof transformers
    # ------------------------------------------------------------------

    def _checked(self, proof: Proof) -> Proof:
        check_proof(self.theory, proof, ProofMode.DFOL, self.fuel)
        return proof

    def ref(self, x: Prop) -> Proof:
        return self._checked(Proof(ProofRule.REF, Sequent(x.context, x.formula, x.formula)))

    def forall_transpose(self, S: FreeType, q: Prop, r: Prop, proof: Proof) -> Proof:
        """From ``q{p} ≤ r`` over ``Γ.S`` to ``q ≤ ∀_S r`` over ``Γ``."""
        conclusion = Sequent(q.context, q.formula, self.forall(S, r).formula)
        return self._checked(Proof(ProofRule.UNIV_I, conclusion, (proof,)))

    def forall_untranspose(self, S: FreeType, q: Prop, r: Prop, proof: Proof) -> Proof:
        """From ``q ≤ ∀_S r`` over ``Γ`` to ``q{p} ≤ r`` over ``Γ.S``."""
        conclusion = Sequent(r.context, self.weaken(S, q).formula, r.formula)
        return self._checked(Proof(ProofRule.UNIV_E, conclusion, (proof,)))

    def exists_transpose(self, S: FreeType, r: Prop, q: Prop, proof: Proof) -> Proof:
        """From ``r ≤ q{p}`` over ``Γ.S`` to ``∃_S r ≤ q`` over ``Γ``."""
        conclusion = Sequent(q.context, self.exists(S, r).formula, q.formula)
        return self._checked(Proof(ProofRule.EXIS_E, conclusion, (proof,)))

    def exists_untranspose(self, S: FreeType, r: Prop, q: Prop, proof: Proof) -> Proof:
        """From ``∃_S r ≤ q`` over ``Γ`` to ``r ≤ q{p}`` over ``Γ.S``."""
        conclusion = Sequent(r.context, r.formula, self.weaken(S, q).formula)
        return self._checked(Proof(ProofRule.EXIS_I, conclusion, (proof,)))


def lt_doctrine(theory: Theory, fuel: int = DEFAULT_FUEL) -> LTDoctrine:
    """The Lindenbaum–Tarski doctrine; needs a de Bruijn signature.

    Raises:
        DoctrineError: If the signature has another variable provider
    """
    if not theory.signature.is_debruijn:
        raise DoctrineError(f"theory {theory.name} is not over a de Bruijn signature", rule="lt")
    return LTDoctrine(theory, fuel)
