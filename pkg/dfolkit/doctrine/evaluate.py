"""Evaluating formulas in a model.

Given a model ``F`` of the signature in a cwf, a hyperdoctrine over that cwf
and an element ``R*`` over ``⟦Δ_R⟧`` for every predicate, a formula over ``Γ``
evaluates to an element over ``⟦Γ⟧``:

- ``R(ā)`` goes to ``R*{F(ā)}`` for the reconstructed map ``ā: Γ -> Δ_R``;
- connectives and constants go to the doctrine's operations at ``⟦Γ⟧``;
- ``(Q x:A) φ`` goes to ``Q_{⟦A⟧}`` of the value of ``φ`` over ``Γ, x:A``.

This is the unique morphism of hyperdoctrines over ``F`` that sends each
predicate to its ``R*``.
"""

import logging
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.finset import Token, environment
from dfolkit.cwf.model import ModelAssignment
from dfolkit.dfol.formulas import CONNECTIVES, And, Atom, Bot, Forall, Formula, Or, Sequent, Top
from dfolkit.dfol.theory import Theory
from dfolkit.doctrine.base import Hyperdoctrine
from dfolkit.doctrine.subset import Subset, SubsetDoctrine
from dfolkit.exceptions import KernelError, ModelError
from dfolkit.syntax.terms import PreContext

logger = logging.getLogger(__name__)


class Evaluator:
    """Evaluates formulas of one model in one doctrine.

    Args:
        doctrine: Hyperdoctrine over the model's target cwf
        model: Interpretation of the type and function symbols
        preds: An element over ``⟦Δ_R⟧`` for each predicate symbol ``R``
    """

    def __init__(
        self,
        doctrine: Hyperdoctrine,
        model: ModelAssignment,
        preds: Mapping[str, Any],
        fuel: int = DEFAULT_FUEL,
    ):
        if doctrine.base is not model.target:
            raise ModelError("the doctrine and the model live over different cwfs", rule="eval")
        self.doctrine = doctrine
        self.model = model
        self.preds = dict(preds)
        self.interp = model.interpretation(fuel)
        self._cache: Dict[Tuple[PreContext, Formula], Any] = {}

    def formula(self, ctx: PreContext, phi: Formula) -> Any:
        key = (ctx, phi)
        if key not in self._cache:
            self._cache[key] = self._eval(ctx, phi)
        return self._cache[key]

    def _eval(self, ctx: PreContext, phi: Formula) -> Any:
        D = self.doctrine
        if isinstance(phi, Atom):
            return self._atom(ctx, phi)
        if isinstance(phi, Top):
            return D.top(self.interp.context(ctx))
        if isinstance(phi, Bot):
            return D.bot(self.interp.context(ctx))
        if isinstance(phi, CONNECTIVES):
            left, right = self.formula(ctx, phi.left), self.formula(ctx, phi.right)
            if isinstance(phi, And):
                return D.conj(left, right)
            if isinstance(phi, Or):
                return D.disj(left, right)
            return D.imp(left, right)
        S = self.interp.type(ctx, phi.type)
        body = self.formula(ctx.extend(phi.var, phi.type), phi.body)
        return D.forall(S, body) if isinstance(phi, Forall) else D.exists(S, body)

    def _atom(self, ctx: PreContext, phi: Atom) -> Any:
        decl = self.model.signature.pred_decl(phi.pred)
        if phi.pred not in self.preds:
            raise ModelError(f"predicate {phi.pred} is not interpreted", rule="eval")
        args = self.interp.kernel.solve_arguments(decl, phi.args, ctx)
        return self.doctrine.subst(self.preds[phi.pred], self.interp.ctx_map(args.map))

    def sequent(self, seq: Sequent) -> bool:
        """``⟦lhs⟧ ≤ ⟦rhs⟧`` over ``⟦Γ⟧``."""
        lhs, rhs = self.formula(seq.context, seq.lhs), self.formula(seq.context, seq.rhs)
        return self.doctrine.le(lhs, rhs)

    def failing_axioms(self, theory: Theory) -> List[str]:
        return [name for name, seq in theory if not self.sequent(seq)]


def eval_formula(
    doctrine: Hyperdoctrine,
    model: ModelAssignment,
    preds: Mapping[str, Any],
    ctx: PreContext,
    phi: Formula,
    fuel: int = DEFAULT_FUEL,
) -> Any:
    """The value of ``phi`` over ``⟦ctx⟧``.

    Raises:
        ModelError: If a predicate or symbol of ``phi`` has no interpretation
    """
    return Evaluator(doctrine, model, preds, fuel).formula(ctx, phi)


def tabulated_predicates(
    doctrine: SubsetDoctrine,
    model: ModelAssignment,
    holds: Mapping[str, Iterable[Tuple[Token, ...]]],
    fuel: int = DEFAULT_FUEL,
) -> Dict[str, Subset]:
    """Subsets of ``⟦Δ_R⟧`` from lists of the argument tuples where ``R`` holds.

    Predicates missing from ``holds`` are empty.
    """
    interp = model.interpretation(fuel)
    preds: Dict[str, Subset] = {}
    for decl in model.signature.pred_decls:
        home = interp.context(decl.context)
        members = []
        for values in holds.get(decl.symbol, ()):
            env = environment(values)
            if env not in home:
                raise ModelError(
                    f"{decl.symbol}: {values} is not an element of its context", rule="model"
                )
            members.append(env)
        preds[decl.symbol] = doctrine.subset(home, members)
    unknown = sorted(set(holds) - set(preds))
    if unknown:
        raise ModelError(f"{unknown[0]} is not a predicate symbol", rule="model")
    return preds


def satisfies(evaluator: Evaluator, theory: Theory) -> bool:
    try:
        return not evaluator.failing_axioms(theory)
    except KernelError as e:
        logger.debug("model rejected: %s", e)
        return False
