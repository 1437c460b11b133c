"""Indexed signatures over a symbol system."""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import AbstractSet, Iterator, Mapping, Optional, Tuple

from dfolkit.exceptions import CheckError, DuplicateSymbolError
from dfolkit.signature.declarations import Declaration, FunDecl, PredDecl, TypeDecl
from dfolkit.syntax.terms import PreContext
from dfolkit.syntax.variables import Variable, VariableSystem


@dataclass(frozen=True)
class Signature:
    """A consistent, indexed set of declarations.

    ``build_order`` lists the symbols in the order they were added; every
    signature obtained through :func:`dfolkit.signature.build.extend` is
    inductive along that order. Predicate declarations share the symbol
    namespace but never take part in type or term judgements.
    """

    variables: VariableSystem = field(default_factory=VariableSystem)
    build_order: Tuple[str, ...] = ()
    _decls: Mapping[str, Declaration] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_decls", MappingProxyType(dict(self._decls)))

    def __len__(self) -> int:
        return len(self.build_order)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._decls

    def __iter__(self) -> Iterator[Declaration]:
        return (self._decls[s] for s in self.build_order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.build_order == other.build_order
            and dict(self._decls) == dict(other._decls)
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.build_order))

    def lookup(self, symbol: str) -> Declaration:
        try:
            return self._decls[symbol]
        except KeyError:
            raise CheckError(f"undeclared symbol {symbol}", rule="lookup") from None

    def get(self, symbol: str) -> Optional[Declaration]:
        return self._decls.get(symbol)

    def type_decl(self, symbol: str) -> TypeDecl:
        decl = self.lookup(symbol)
        if not isinstance(decl, TypeDecl):
            raise CheckError(f"{symbol} is not a type symbol", rule="R4")
        return decl

    def fun_decl(self, symbol: str) -> FunDecl:
        decl = self.lookup(symbol)
        if not isinstance(decl, FunDecl):
            raise CheckError(f"{symbol} is not a function symbol", rule="R5")
        return decl

    def pred_decl(self, symbol: str) -> PredDecl:
        decl = self.lookup(symbol)
        if not isinstance(decl, PredDecl):
            raise CheckError(f"{symbol} is not a predicate symbol", rule="F1")
        return decl

    @property
    def symbols(self) -> AbstractSet[str]:
        return frozenset(self._decls)

    @property
    def type_decls(self) -> Tuple[TypeDecl, ...]:
        return tuple(d for d in self if isinstance(d, TypeDecl))

    @property
    def fun_decls(self) -> Tuple[FunDecl, ...]:
        return tuple(d for d in self if isinstance(d, FunDecl))

    @property
    def pred_decls(self) -> Tuple[PredDecl, ...]:
        return tuple(d for d in self if isinstance(d, PredDecl))

    @property
    def standard_form(self) -> bool:
        return all(d.standard_form for d in self)

    @property
    def folds_like(self) -> bool:
        """Only type declarations (predicates are ignored)."""
        return not self.fun_decls

    @property
    def is_debruijn(self) -> bool:
        return self.variables.is_debruijn

    def fresh(self, ctx: PreContext) -> Variable:
        """fresh(ctx): the chosen variable outside V(ctx) and the symbol names."""
        return self.variables.pick(frozenset(ctx.variables), self.symbols)

    def is_fresh(self, x: Variable, ctx: PreContext) -> bool:
        """x in Fresh(ctx)."""
        return self.variables.provides(x, frozenset(ctx.variables), self.symbols)

    def standard_sequence(self, n: int) -> Tuple[Variable, ...]:
        return self.variables.sequence(n, self.symbols)

    def add(self, decl: Declaration) -> "Signature":
        """Add without checking; see :func:`dfolkit.signature.build.extend`."""
        if decl.symbol in self._decls:
            raise DuplicateSymbolError(f"symbol {decl.symbol} already declared", rule="extend")
        decls = dict(self._decls)
        decls[decl.symbol] = decl
        return Signature(self.variables, self.build_order + (decl.symbol,), decls)

    def restrict(self, count: int) -> "Signature":
        """The prefix signature of the first ``count`` declarations."""
        order = self.build_order[:count]
        return Signature(self.variables, order, {s: self._decls[s] for s in order})

    def unrestricted(self) -> "Signature":
        """Same declarations over the unrestricted provider on the same carrier."""
        return Signature(self.variables.widen(), self.build_order, dict(self._decls))

    def without_predicates(self) -> "Signature":
        order = tuple(s for s in self.build_order if not isinstance(self._decls[s], PredDecl))
        return Signature(self.variables, order, {s: self._decls[s] for s in order})


def empty_signature(variables: Optional[VariableSystem] = None) -> Signature:
    """The empty signature."""
    return Signature(variables or VariableSystem())
