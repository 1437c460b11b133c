"""The judgement checker: rules R1-R5 (or R5*) with hidden-argument reconstruction.

The checker is a decision procedure that builds derivations bottom-up:

- contexts are checked entry by entry (R1, R2);
- a variable is typed by its declaration (R3);
- ``S(b1..bk)`` and ``f(b1..bk)`` place the explicit arguments at the
  determining positions, then walk the declaration context right to left,
  inferring the type of each solved argument and matching it against the
  declared type to solve earlier, hidden, positions (R4, R5).

Every public method is deterministic: the same input yields an identical
derivation tree.
"""

import logging
import threading
from contextlib import contextmanager
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

from dfolkit.checker.judgements import (
    CheckedMap,
    ContextMap,
    Derivation,
    HasType,
    IsContext,
    IsType,
    Judgement,
    Mode,
    Rule,
)
from dfolkit.checker.reconstruction import match, seed
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.exceptions import CheckError, KernelError, ReconstructionError, UndecidedError
from dfolkit.signature.declarations import FunDecl, PredDecl, TypeDecl
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import App, PreContext, PreTerm, PreType, Var, subst

logger = logging.getLogger(__name__)


class Kernel:
    """Checks judgements over one signature.

    A kernel memoizes accepted contexts, types and terms for its own lifetime;
    the cache only ever holds derivations identical to what an uncached run
    would produce. Calls on one instance are serialized by an internal lock.

    Args:
        signature: The signature judgements are checked against
        mode: ``Mode.R5`` (default) or ``Mode.R5STAR``
        fuel: Maximum number of inference steps per top-level call
    """

    def __init__(self, signature: Signature, mode: Mode = Mode.R5, fuel: int = DEFAULT_FUEL):
        self.signature = signature
        self.mode = mode
        self.fuel = fuel
        self._lock = threading.RLock()
        self._depth = 0
        self._steps = 0
        self._contexts: Dict[PreContext, Derivation] = {}
        self._types: Dict[Tuple[PreContext, PreType], Derivation] = {}
        self._terms: Dict[Tuple[PreContext, PreTerm], Tuple[PreType, Derivation]] = {}

    # ------------------------------------------------------------------
    # public entry points
    # ------------------------------------------------------------------

    def check_context(self, ctx: PreContext) -> Derivation:
        """Derive ``ctx context``."""
        with self._session():
            return self._context(ctx)

    def check_type(self, ctx: PreContext, A: PreType) -> Derivation:
        """Derive ``A type (ctx)``."""
        with self._session():
            self._context(ctx)
            return self._type(ctx, A)

    def infer_type(self, ctx: PreContext, a: PreTerm) -> Tuple[PreType, Derivation]:
        """Return the unique type of ``a`` in ``ctx`` with its derivation."""
        with self._session():
            self._context(ctx)
            return self._infer(ctx, a)

    def check_term(self, ctx: PreContext, a: PreTerm, A: PreType) -> Derivation:
        """Derive ``a : A (ctx)``; a different inferred type is a mismatch."""
        with self._session():
            self._context(ctx)
            return self._check_term(ctx, a, A)

    def check_ctx_map(
        self, source: PreContext, target: PreContext, terms: Sequence[PreTerm]
    ) -> CheckedMap:
        """Derive the n+2 judgements of ``terms: source -> target``."""
        with self._session():
            return self._map(source, target, tuple(terms))

    def check(self, judgement: Judgement) -> Derivation:
        if isinstance(judgement, IsContext):
            return self.check_context(judgement.context)
        if isinstance(judgement, IsType):
            return self.check_type(judgement.context, judgement.type)
        return self.check_term(judgement.context, judgement.term, judgement.type)

    def accepts(self, judgement: Judgement) -> bool:
        try:
            self.check(judgement)
        except KernelError:
            return False
        return True

    def identity(self, ctx: PreContext) -> CheckedMap:
        """The identity map OV(ctx): ctx -> ctx."""
        return self.check_ctx_map(ctx, ctx, ctx.as_terms())

    def compose(
        self, t: Union[CheckedMap, ContextMap], s: Union[CheckedMap, ContextMap]
    ) -> CheckedMap:
        """``t o s`` for ``s: Δ -> Γ`` and ``t: Γ -> Ξ``, i.e. (t_j[s/Γ])."""
        if t.source != s.target:
            raise CheckError(
                f"cannot compose: {s.target} is not {t.source}", rule="compose"
            )
        terms = tuple(subst(tj, s.terms, s.target.variables) for tj in t.terms)
        return self.check_ctx_map(s.source, t.target, terms)

    def solve_arguments(
        self, decl: Union[TypeDecl, FunDecl, PredDecl], explicit: Sequence[PreTerm], ctx: PreContext
    ) -> CheckedMap:
        """Reconstruct the full argument list of ``decl`` from its explicit arguments."""
        with self._session():
            self._context(ctx)
            return self._solve(decl, tuple(explicit), ctx)

    # ------------------------------------------------------------------
    # internals
    # ------------------------------------------------------------------

    @contextmanager
    def _session(self) -> Iterator[None]:
        with self._lock:
            if self._depth == 0:
                self._steps = 0
            self._depth += 1
            try:
                yield
            except RecursionError:
                raise UndecidedError("derivation search nested too deeply", rule="fuel") from None
            finally:
                self._depth -= 1

    def _tick(self) -> None:
        self._steps += 1
        if self._steps > self.fuel:
            raise UndecidedError(
                f"no verdict within {self.fuel} inference steps", rule="fuel"
            )

    def _context(self, ctx: PreContext) -> Derivation:
        cached = self._contexts.get(ctx)
        if cached is not None:
            return cached
        self._tick()
        if not ctx:
            derivation = Derivation.build(Rule.R1, IsContext(ctx))
        else:
            n = len(ctx)
            prefix = ctx.prefix(n - 1)
            x, A = ctx.entries[-1]
            before = self._context(prefix)
            if not self.signature.is_fresh(x, prefix):
                raise CheckError(
                    f"variable {x} is not fresh for {prefix}", rule=Rule.R2.value, path=(n,)
                )
            try:
                type_derivation = self._type(prefix, A)
            except KernelError as e:
                raise e.at(n)
            derivation = Derivation.build(Rule.R2, IsContext(ctx), (before, type_derivation))
        self._contexts[ctx] = derivation
        return derivation

    def _type(self, ctx: PreContext, A: PreType) -> Derivation:
        key = (ctx, A)
        cached = self._types.get(key)
        if cached is not None:
            return cached
        self._tick()
        decl = self.signature.get(A.head)
        if decl is None:
            raise CheckError(f"undeclared type symbol {A.head}", rule=Rule.R4.value)
        if not isinstance(decl, TypeDecl):
            raise CheckError(f"{A.head} is not a type symbol", rule=Rule.R4.value)
        cmap = self._solve(decl, A.args, ctx)
        derivation = Derivation.build(Rule.R4, IsType(ctx, A), cmap.premises())
        logger.debug("R4 %s type %s", A, ctx)
        self._types[key] = derivation
        return derivation

    def _infer(self, ctx: PreContext, a: PreTerm) -> Tuple[PreType, Derivation]:
        key = (ctx, a)
        cached = self._terms.get(key)
        if cached is not None:
            return cached
        self._tick()
        if isinstance(a, Var):
            A = ctx.type_of(a.name)
            if A is None:
                raise CheckError(f"variable {a} is not declared in {ctx}", rule=Rule.R3.value)
            result = (A, Derivation.build(Rule.R3, HasType(ctx, a, A), (self._context(ctx),)))
        else:
            result = self._infer_application(ctx, a)
        self._terms[key] = result
        return result

    def _infer_application(self, ctx: PreContext, a: App) -> Tuple[PreType, Derivation]:
        decl = self.signature.get(a.head)
        if decl is None:
            raise CheckError(f"undeclared function symbol {a.head}", rule=Rule.R5.value)
        if not isinstance(decl, FunDecl):
            raise CheckError(f"{a.head} is not a function symbol", rule=Rule.R5.value)
        cmap = self._solve(decl, a.args, ctx)
        U = subst(decl.result, cmap.terms, decl.context.variables)
        premises = cmap.premises()
        if self.mode is Mode.R5:
            premises += (self._type(ctx, U),)
            rule = Rule.R5
        else:
            rule = Rule.R5STAR
        logger.debug("%s %s : %s %s", rule.value, a, U, ctx)
        return U, Derivation.build(rule, HasType(ctx, a, U), premises)

    def _check_term(self, ctx: PreContext, a: PreTerm, A: PreType) -> Derivation:
        inferred, derivation = self._infer(ctx, a)
        if inferred != A:
            raise CheckError(f"{a} has type {inferred}, not {A}", rule="check")
        return derivation

    def _solve(
        self,
        decl: Union[TypeDecl, FunDecl, PredDecl],
        explicit: Tuple[PreTerm, ...],
        ctx: PreContext,
    ) -> CheckedMap:
        rule = Rule.R5.value if isinstance(decl, FunDecl) else Rule.R4.value
        if len(explicit) != decl.arity:
            raise CheckError(
                f"{decl.symbol} takes {decl.arity} explicit arguments, got {len(explicit)}",
                rule=rule,
            )
        home = decl.context
        slots = {x: k for k, x in enumerate(home.variables)}
        solved = seed(decl, explicit)
        for k in reversed(range(len(home))):
            self._tick()
            a_k: Optional[PreTerm] = solved[k]
            if a_k is None:
                raise ReconstructionError(
                    f"hidden argument {home.variables[k]} of {decl.symbol} is not determined",
                    rule=rule,
                    path=(k + 1,),
                )
            try:
                C, _ = self._infer(ctx, a_k)
                match(home.types[k], C, slots, solved)
            except KernelError as e:
                raise e.at(k + 1)
        return self._map(ctx, home, tuple(solved))  # type: ignore[arg-type]

    def _map(
        self, source: PreContext, target: PreContext, terms: Tuple[PreTerm, ...]
    ) -> CheckedMap:
        if len(terms) != len(target):
            raise CheckError(
                f"context map has {len(terms)} terms for a context of length {len(target)}",
                rule="map",
            )
        source_derivation = self._context(source)
        target_derivation = self._context(target)
        components = []
        for k, (_, A) in enumerate(target.entries):
            expected = subst(A, terms[:k], target.variables[:k])
            try:
                components.append(self._check_term(source, terms[k], expected))
            except KernelError as e:
                raise e.at(k + 1)
        return CheckedMap(
            ContextMap(source, target, terms),
            source_derivation,
            target_derivation,
            tuple(components),
        )


def check_context(sig: Signature, ctx: PreContext, fuel: int = DEFAULT_FUEL) -> Derivation:
    return Kernel(sig, fuel=fuel).check_context(ctx)


def check_type(sig: Signature, ctx: PreContext, A: PreType, fuel: int = DEFAULT_FUEL) -> Derivation:
    return Kernel(sig, fuel=fuel).check_type(ctx, A)


def infer_type(
    sig: Signature, ctx: PreContext, a: PreTerm, fuel: int = DEFAULT_FUEL
) -> Tuple[PreType, Derivation]:
    return Kernel(sig, fuel=fuel).infer_type(ctx, a)


def check_term(
    sig: Signature, ctx: PreContext, a: PreTerm, A: PreType, fuel: int = DEFAULT_FUEL
) -> Derivation:
    return Kernel(sig, fuel=fuel).check_term(ctx, a, A)


def check_ctx_map(
    sig: Signature,
    source: PreContext,
    target: PreContext,
    terms: Sequence[PreTerm],
    fuel: int = DEFAULT_FUEL,
) -> CheckedMap:
    return Kernel(sig, fuel=fuel).check_ctx_map(source, target, terms)


def check_mode_r5star(sig: Signature, judgement: Judgement, fuel: int = DEFAULT_FUEL) -> Derivation:
    """Check ``judgement`` with R5* in place of R5."""
    return Kernel(sig, mode=Mode.R5STAR, fuel=fuel).check(judgement)
