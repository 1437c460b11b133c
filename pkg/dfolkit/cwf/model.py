"""Models of a signature in a cwf and their interpretation of judgements.

A :class:`ModelAssignment` gives every type symbol a semantic type over the
interpretation of its declaration context, and every function symbol a
semantic term of the interpreted result type. Assignments are built one
declaration at a time along the signature's build order, so each value is
checked against a fiber computed from earlier values.

Interpretation recurses over the accepted judgement:

- the empty context goes to the terminal object and ``Γ, x:A`` to ``⟦Γ⟧.⟦A⟧``;
- the k-th variable of a context of length n goes to ``x_k``;
- ``S(a1..an)`` and ``f(a1..an)`` substitute the tuple ``[⟦a1⟧..⟦an⟧]`` into the
  assigned type or term.

Judgements and context maps are moved onto the signature's canonical
variables with :func:`~dfolkit.checker.standardize.standardize` before they
are interpreted, so named syntax means what its standardization means.
Declaration contexts are read by position, so signatures not on standard
form are interpreted too.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from dfolkit.checker.judgements import ContextMap, IsContext, IsType, Judgement
from dfolkit.checker.kernel import Kernel
from dfolkit.checker.standardize import is_standard, standardize
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.base import CwF
from dfolkit.cwf.finset import FinSetCwF, FinTerm, FinType, Token, environment, unfold
from dfolkit.exceptions import KernelError, ModelError
from dfolkit.signature.build import extend
from dfolkit.signature.declarations import Declaration, FunDecl, PredDecl, TypeDecl
from dfolkit.signature.signature import Signature, empty_signature
from dfolkit.syntax.terms import App, PreContext, PreTerm, PreType, Var, subst
from dfolkit.syntax.variables import VariableSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelAssignment:
    target: CwF
    signature: Signature
    types: Mapping[str, Any] = field(default_factory=dict)
    funs: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def empty(cls, target: CwF, variables: Optional[VariableSystem] = None) -> "ModelAssignment":
        return cls(target, empty_signature(variables))

    def interpretation(self, fuel: int = DEFAULT_FUEL) -> "Interpretation":
        return Interpretation(self, fuel)


class Interpretation:
    """The cwf morphism from the free cwf induced by one assignment.

    Results are cached per instance; an instance never outlives its assignment.
    """

    def __init__(self, model: ModelAssignment, fuel: int = DEFAULT_FUEL):
        self.model = model
        self.target = model.target
        self.kernel = Kernel(model.signature, fuel=fuel)
        self._telescopes: Dict[PreContext, Tuple[Any, ...]] = {}
        self._types: Dict[Tuple[PreContext, PreType], Any] = {}
        self._terms: Dict[Tuple[PreContext, PreTerm], Any] = {}

    def telescope(self, ctx: PreContext) -> Tuple[Any, ...]:
        """``(⟦A1⟧, ..., ⟦An⟧)`` with ``⟦Ak⟧`` over ``⟦x1:A1..x(k-1):A(k-1)⟧``."""
        cached = self._telescopes.get(ctx)
        if cached is not None:
            return cached
        if not ctx:
            result: Tuple[Any, ...] = ()
        else:
            prefix = ctx.prefix(len(ctx) - 1)
            result = self.telescope(prefix) + (self._type(prefix, ctx.types[-1]),)
        self._telescopes[ctx] = result
        return result

    def context(self, ctx: PreContext) -> Any:
        self.kernel.check_context(ctx)
        return self.target.telescope(self.telescope(ctx))

    def type(self, ctx: PreContext, A: PreType) -> Any:
        self.kernel.check_type(ctx, A)
        return self._type(ctx, A)

    def term(self, ctx: PreContext, a: PreTerm) -> Any:
        self.kernel.infer_type(ctx, a)
        return self._term(ctx, a)

    def ctx_map(self, f: ContextMap) -> Any:
        """``[⟦t1⟧, ..., ⟦tn⟧]: ⟦Δ^σ⟧ -> ⟦Γ^σ⟧`` for ``f: Δ -> Γ``."""
        f = self.standard_map(f)
        self.kernel.check_ctx_map(f.source, f.target, f.terms)
        return self._tuple(f.source, f.target, f.terms)

    def judgement(self, j: Judgement) -> Any:
        """The value of ``j^σ``; standard judgements are taken as they are."""
        j = self.standard(j)
        if isinstance(j, IsContext):
            return self.context(j.context)
        if isinstance(j, IsType):
            return self.type(j.context, j.type)
        self.kernel.check_term(j.context, j.term, j.type)
        value = self._term(j.context, j.term)
        self.target.require_term(value, self._type(j.context, j.type), "interpret")
        return value

    def standard(self, j: Judgement) -> Judgement:
        sig = self.model.signature
        if is_standard(sig, j.context):
            return j
        return standardize(sig, j, fuel=self.kernel.fuel).judgement

    def standard_map(self, f: ContextMap) -> ContextMap:
        """``f`` between standardized contexts, its terms renamed onto ``Δ^σ``."""
        sig = self.model.signature
        if is_standard(sig, f.source) and is_standard(sig, f.target):
            return f
        source = standardize(sig, IsContext(f.source), fuel=self.kernel.fuel)
        target = self.standard(IsContext(f.target)).context
        renamed = source.forward.map.terms
        terms = tuple(subst(t, renamed, f.source.variables) for t in f.terms)
        return ContextMap(source.context, target, terms)

    # ------------------------------------------------------------------

    def _tuple(self, source: PreContext, target: PreContext, terms: Iterable[PreTerm]) -> Any:
        return self.target.tuple_mor(
            self.target.telescope(self.telescope(source)),
            self.telescope(target),
            [self._term(source, t) for t in terms],
        )

    def _type(self, ctx: PreContext, A: PreType) -> Any:
        key = (ctx, A)
        if key not in self._types:
            decl = self.model.signature.type_decl(A.head)
            value = self.model.types.get(decl.symbol)
            if value is None:
                raise ModelError(f"type symbol {decl.symbol} is not interpreted", rule="model")
            args = self.kernel.solve_arguments(decl, A.args, ctx)
            self._types[key] = self.target.ty_subst(
                value, self._tuple(ctx, decl.context, args.terms)
            )
        return self._types[key]

    def _term(self, ctx: PreContext, a: PreTerm) -> Any:
        key = (ctx, a)
        if key not in self._terms:
            if isinstance(a, Var):
                types = self.telescope(ctx)
                self._terms[key] = self.target.var_proj(types, ctx.position(a.name))
            else:
                self._terms[key] = self._application(ctx, a)
        return self._terms[key]

    def _application(self, ctx: PreContext, a: App) -> Any:
        decl = self.model.signature.fun_decl(a.head)
        value = self.model.funs.get(decl.symbol)
        if value is None:
            raise ModelError(f"function symbol {decl.symbol} is not interpreted", rule="model")
        args = self.kernel.solve_arguments(decl, a.args, ctx)
        return self.target.tm_subst(value, self._tuple(ctx, decl.context, args.terms))


def interpret(
    model: ModelAssignment,
    j: Union[Judgement, ContextMap],
    fuel: int = DEFAULT_FUEL,
) -> Any:
    """The semantic value of an accepted judgement or context map."""
    interp = model.interpretation(fuel)
    if isinstance(j, ContextMap):
        return interp.ctx_map(j)
    return interp.judgement(j)


def _extended(model: ModelAssignment, decl: Declaration, fuel: int) -> Signature:
    try:
        return extend(model.signature, decl, fuel=fuel)
    except KernelError as e:
        raise e.at(len(model.signature) + 1)


def extend_model_by_type(
    model: ModelAssignment, decl: TypeDecl, value: Any, fuel: int = DEFAULT_FUEL
) -> ModelAssignment:
    """Add ``decl`` interpreted as ``value``, a type over ``⟦Γ_S⟧``.

    Raises:
        DuplicateSymbolError: If the symbol is already declared
        FiberMismatchError: If ``value`` lives over another object
    """
    sig = _extended(model, decl, fuel)
    home = model.interpretation(fuel).context(decl.context)
    model.target.require_over(value, home, decl.symbol)
    logger.debug("model: %s interpreted", decl.symbol)
    return ModelAssignment(model.target, sig, {**model.types, decl.symbol: value}, model.funs)


def extend_model_by_fun(
    model: ModelAssignment, decl: FunDecl, value: Any, fuel: int = DEFAULT_FUEL
) -> ModelAssignment:
    """Add ``decl`` interpreted as ``value``, a term of ``⟦U_f⟧`` over ``⟦Γ_f⟧``.

    Raises:
        DuplicateSymbolError: If the symbol is already declared
        FiberMismatchError: If ``value`` is not a term of the interpreted result type
    """
    sig = _extended(model, decl, fuel)
    expected = model.interpretation(fuel).type(decl.context, decl.result)
    model.target.require_term(value, expected, decl.symbol)
    logger.debug("model: %s interpreted", decl.symbol)
    return ModelAssignment(model.target, sig, model.types, {**model.funs, decl.symbol: value})


def extend_model_by_pred(
    model: ModelAssignment, decl: PredDecl, fuel: int = DEFAULT_FUEL
) -> ModelAssignment:
    """Declare a predicate; its meaning is supplied to the doctrine evaluator."""
    return ModelAssignment(model.target, _extended(model, decl, fuel), model.types, model.funs)


def build_model(
    target: CwF, sig: Signature, values: Mapping[str, Any], fuel: int = DEFAULT_FUEL
) -> ModelAssignment:
    """Replay ``sig`` in build order, interpreting each symbol by ``values``.

    Raises:
        ModelError: If a type or function symbol has no value
    """
    model = ModelAssignment.empty(target, sig.variables)
    for index, decl in enumerate(sig, start=1):
        if isinstance(decl, PredDecl):
            model = extend_model_by_pred(model, decl, fuel)
            continue
        if decl.symbol not in values:
            raise ModelError(f"symbol {decl.symbol} has no value", rule="model", path=(index,))
        if isinstance(decl, TypeDecl):
            model = extend_model_by_type(model, decl, values[decl.symbol], fuel)
        else:
            model = extend_model_by_fun(model, decl, values[decl.symbol], fuel)
    return model


# ----------------------------------------------------------------------
# tabulated values in the finite-set cwf
# ----------------------------------------------------------------------


def _finset(model: ModelAssignment) -> FinSetCwF:
    if not isinstance(model.target, FinSetCwF):
        raise ModelError("tabulated values need a finite-set target", rule="model")
    return model.target


def tabulated_type(
    model: ModelAssignment,
    decl: TypeDecl,
    fibers: Mapping[Tuple[Token, ...], Iterable[Token]],
    fuel: int = DEFAULT_FUEL,
) -> FinType:
    """The family over ``⟦Γ_S⟧`` whose fiber at ``(v1..vn)`` is ``fibers[(v1..vn)]``.

    Environments missing from ``fibers`` get the empty fiber.
    """
    cwf = _finset(model)
    home = model.interpretation(fuel).context(decl.context)
    unknown = [k for k in fibers if environment(k) not in home]
    if unknown:
        raise ModelError(
            f"{decl.symbol}: {unknown[0]} is not an element of its context", rule="model"
        )
    return cwf.family(home, lambda env: tuple(fibers.get(unfold(env), ())))


def tabulated_term(
    model: ModelAssignment,
    decl: FunDecl,
    values: Mapping[Tuple[Token, ...], Token],
    fuel: int = DEFAULT_FUEL,
) -> FinTerm:
    """The section of ``⟦U_f⟧`` whose value at ``(v1..vn)`` is ``values[(v1..vn)]``."""
    cwf = _finset(model)
    U = model.interpretation(fuel).type(decl.context, decl.result)
    return cwf.section(U, {environment(k): v for k, v in values.items()})


def tabulate_model(
    target: FinSetCwF,
    sig: Signature,
    fibers: Mapping[str, Mapping[Tuple[Token, ...], Iterable[Token]]],
    values: Mapping[str, Mapping[Tuple[Token, ...], Token]],
    fuel: int = DEFAULT_FUEL,
) -> ModelAssignment:
    """Replay ``sig`` with every type and function given by a table.

    Keys list the values of the declaration context variables in order.

    Raises:
        ModelError: If a type or function symbol has no table
    """
    model = ModelAssignment.empty(target, sig.variables)
    for index, decl in enumerate(sig, start=1):
        try:
            if isinstance(decl, PredDecl):
                model = extend_model_by_pred(model, decl, fuel)
            elif isinstance(decl, TypeDecl):
                if decl.symbol not in fibers:
                    raise ModelError(f"type symbol {decl.symbol} has no fibers", rule="model")
                value = tabulated_type(model, decl, fibers[decl.symbol], fuel)
                model = extend_model_by_type(model, decl, value, fuel)
            else:
                if decl.symbol not in values:
                    raise ModelError(f"function symbol {decl.symbol} has no values", rule="model")
                term = tabulated_term(model, decl, values[decl.symbol], fuel)
                model = extend_model_by_fun(model, decl, term, fuel)
        except KernelError as e:
            if not e.path:
                e.at(index)
            raise
    logger.debug("tabulated model of %d declarations", len(sig))
    return model
