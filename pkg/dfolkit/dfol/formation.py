"""Formation of formulas in context.

A quantifier ``(Q x:A) φ`` over ``Γ`` checks ``A`` over ``Γ`` and ``φ`` over
``Γ, x:A``, so ``x`` has to be fresh for ``Γ``. In the syntactic variant a
binder that is not fresh is renamed to ``fresh(Γ)`` first and the formula is
read as its α-class; that variant always runs over the unrestricted provider.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from dfolkit.checker.judgements import CheckedMap, Derivation
from dfolkit.checker.kernel import Kernel
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.formulas import (
    CONNECTIVES,
    Atom,
    Bot,
    Formula,
    Quantifier,
    Sequent,
    Top,
    rebuild,
    requantify,
)
from dfolkit.dfol.substitution import rename_bound
from dfolkit.exceptions import FormulaError, KernelError
from dfolkit.signature.declarations import PredDecl
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Formation:
    """A formation derivation.

    ``rule`` is ``F1`` (atom), ``F2`` (top, bot), ``F3`` (connective) or ``F4``
    (quantifier). ``formula`` is the checked representative; in the syntactic
    variant it may differ from the input by renamed binders.
    """

    rule: str
    context: PreContext
    formula: Formula
    premises: Tuple["Formation", ...] = ()
    arguments: Optional[CheckedMap] = None
    binder: Optional[Derivation] = None

    @property
    def height(self) -> int:
        return 1 + max((p.height for p in self.premises), default=0)


class FormulaChecker:
    """Checks formulas over one signature.

    Args:
        signature: Signature with the predicate declarations
        star: Read formulas up to α, renaming binders that are not fresh
        fuel: Reconstruction fuel per kernel call
    """

    def __init__(self, signature: Signature, star: bool = False, fuel: int = DEFAULT_FUEL):
        self.signature = signature.unrestricted() if star else signature
        self.star = star
        self.kernel = Kernel(self.signature, fuel=fuel)

    def check(self, ctx: PreContext, phi: Formula) -> Formation:
        self.check_context(ctx)
        return self._check(ctx, phi)

    def check_context(self, ctx: PreContext) -> Derivation:
        try:
            return self.kernel.check_context(ctx)
        except KernelError as e:
            raise FormulaError(f"context {ctx} does not check: {e}", rule="context") from e

    def check_sequent(self, seq: Sequent) -> Tuple[Formation, Formation]:
        left = self.check(seq.context, seq.lhs)
        try:
            right = self._check(seq.context, seq.rhs)
        except FormulaError as e:
            raise e.at(2)
        return left, right

    def accepts(self, ctx: PreContext, phi: Formula) -> bool:
        try:
            self.check(ctx, phi)
        except KernelError:
            return False
        return True

    def _check(self, ctx: PreContext, phi: Formula) -> Formation:
        if isinstance(phi, Atom):
            return self._atom(ctx, phi)
        if isinstance(phi, (Top, Bot)):
            return Formation("F2", ctx, phi)
        if isinstance(phi, CONNECTIVES):
            parts: List[Formation] = []
            for k, part in enumerate((phi.left, phi.right), start=1):
                try:
                    parts.append(self._check(ctx, part))
                except FormulaError as e:
                    raise e.at(k)
            formula = rebuild(phi, parts[0].formula, parts[1].formula)
            return Formation("F3", ctx, formula, tuple(parts))
        return self._quantifier(ctx, phi)

    def _atom(self, ctx: PreContext, phi: Atom) -> Formation:
        decl = self.signature.get(phi.pred)
        if not isinstance(decl, PredDecl):
            raise FormulaError(f"{phi.pred} is not a predicate symbol", rule="F1")
        try:
            args = self.kernel.solve_arguments(decl, phi.args, ctx)
        except KernelError as e:
            raise FormulaError(f"atom {phi} does not check: {e}", rule="F1", path=e.path) from e
        return Formation("F1", ctx, phi, arguments=args)

    def _quantifier(self, ctx: PreContext, phi: Quantifier) -> Formation:
        if not self.signature.is_fresh(phi.var, ctx):
            if not self.star:
                raise FormulaError(f"binder {phi.var} is not fresh for {ctx}", rule="F4")
            renamed = rename_bound(self.signature, phi, self.signature.fresh(ctx))
            logger.debug("binder %s read as %s", phi.var, renamed.var)  # type: ignore[union-attr]
            phi = renamed  # type: ignore[assignment]
        try:
            binder = self.kernel.check_type(ctx, phi.type)
        except KernelError as e:
            raise FormulaError(f"binder type {phi.type} does not check: {e}", rule="F4") from e
        try:
            body = self._check(ctx.extend(phi.var, phi.type), phi.body)
        except FormulaError as e:
            raise e.at(1)
        formula = requantify(phi, phi.var, phi.type, body.formula)
        return Formation("F4", ctx, formula, (body,), binder=binder)


def check_formula(
    sig: Signature,
    ctx: PreContext,
    phi: Formula,
    star: bool = False,
    fuel: int = DEFAULT_FUEL,
) -> Formation:
    """Derive ``phi form (ctx)``.

    Raises:
        FormulaError: On an unbound variable, a non-fresh binder (unless
            ``star``), an undeclared or misapplied predicate, or a context that
            does not check
    """
    return FormulaChecker(sig, star=star, fuel=fuel).check(ctx, phi)
