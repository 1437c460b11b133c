"""The cwf of finite sets and tabulated families.

Objects are finite sets of tokens (ints, strings or tuples of tokens). A
type over ``Γ`` assigns a finite fiber to every element of ``Γ``; a term is a
section choosing one fiber element per element of ``Γ``. ``Γ.A`` is the set
of pairs ``(γ, a)`` and the terminal object is ``{()}``.

Every value is stored in a canonical order, so all cwf equations hold as
plain ``==`` on the data.
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from dfolkit.cwf.base import CwF
from dfolkit.exceptions import FiberMismatchError

Token = Any

POINT: Token = ()


def token_key(t: Token) -> Tuple[Any, ...]:
    """Total order on tokens: ints, then strings, then tuples elementwise."""
    if isinstance(t, bool):
        return (0, int(t))
    if isinstance(t, int):
        return (0, t)
    if isinstance(t, str):
        return (1, t)
    if isinstance(t, tuple):
        return (2, tuple(token_key(x) for x in t))
    raise TypeError(f"unsupported token {t!r}")


def canonical(tokens: Iterable[Token]) -> Tuple[Token, ...]:
    return tuple(sorted(set(tokens), key=token_key))


def show(t: Token) -> str:
    if isinstance(t, tuple):
        return "(" + " ".join(show(x) for x in t) + ")"
    return str(t)


@dataclass(frozen=True)
class FinObject:
    elements: Tuple[Token, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", canonical(self.elements))

    def __iter__(self) -> Iterator[Token]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, t: object) -> bool:
        return t in set(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(show(t) for t in self.elements) + "}"


@dataclass(frozen=True)
class FinMorphism:
    """A function ``dom -> cod`` tabulated in the order of ``dom``."""

    dom: FinObject
    cod: FinObject
    table: Tuple[Token, ...]
    _lookup: Dict[Token, Token] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(zip(self.dom.elements, self.table)))

    def __call__(self, x: Token) -> Token:
        return self._lookup[x]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{show(x)} -> {show(y)}" for x, y in self._lookup.items()) + "}"


@dataclass(frozen=True)
class FinType:
    """A family of finite fibers over ``context``, tabulated in context order."""

    context: FinObject
    fibers: Tuple[Tuple[Token, ...], ...]
    _lookup: Dict[Token, Tuple[Token, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "fibers", tuple(canonical(f) for f in self.fibers))
        object.__setattr__(self, "_lookup", dict(zip(self.context.elements, self.fibers)))

    def fiber(self, g: Token) -> Tuple[Token, ...]:
        return self._lookup[g]

    def __str__(self) -> str:
        return (
            "{"
            + ", ".join(
                f"{show(g)} |-> {{{', '.join(show(a) for a in fib)}}}"
                for g, fib in self._lookup.items()
            )
            + "}"
        )


@dataclass(frozen=True)
class FinTerm:
    """A section of ``type``, tabulated in context order."""

    type: FinType
    values: Tuple[Token, ...]
    _lookup: Dict[Token, Token] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(zip(self.type.context.elements, self.values)))

    @property
    def context(self) -> FinObject:
        return self.type.context

    def __call__(self, g: Token) -> Token:
        return self._lookup[g]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{show(g)} -> {show(a)}" for g, a in self._lookup.items()) + "}"


Table = Union[Mapping[Token, Any], Callable[[Token], Any]]


def _read(table: Table, x: Token) -> Any:
    if callable(table):
        return table(x)
    try:
        return table[x]
    except KeyError:
        raise FiberMismatchError(f"no entry for {show(x)}", rule="tabulate") from None


def environment(values: Iterable[Token]) -> Token:
    """The element ``((((), v1), v2), ...)`` of an iterated comprehension."""
    env: Token = POINT
    for v in values:
        env = (env, v)
    return env


def unfold(env: Token) -> Tuple[Token, ...]:
    """Inverse of :func:`environment`."""
    values = []
    while env != POINT:
        env, v = env
        values.append(v)
    return tuple(reversed(values))


class FinSetCwF(CwF):
    """Finite sets, functions, tabulated families and sections."""

    name = "finset"

    # ------------------------------------------------------------------
    # builders
    # ------------------------------------------------------------------

    @staticmethod
    def obj(*elements: Token) -> FinObject:
        return FinObject(tuple(elements))

    def morphism(self, dom: FinObject, cod: FinObject, table: Table) -> FinMorphism:
        values = []
        for x in dom:
            y = _read(table, x)
            if y not in cod:
                raise FiberMismatchError(
                    f"{show(x)} is sent to {show(y)}, outside {cod}", rule="morphism"
                )
            values.append(y)
        return FinMorphism(dom, cod, tuple(values))

    @staticmethod
    def family(context: FinObject, table: Table) -> FinType:
        return FinType(context, tuple(tuple(_read(table, g)) for g in context))

    @staticmethod
    def constant_family(context: FinObject, fiber: Iterable[Token]) -> FinType:
        fiber = tuple(fiber)
        return FinType(context, tuple(fiber for _ in context))

    def section(self, A: FinType, table: Table) -> FinTerm:
        values = []
        for g in A.context:
            a = _read(table, g)
            if a not in set(A.fiber(g)):
                raise FiberMismatchError(
                    f"value {show(a)} at {show(g)} is outside the fiber {set(A.fiber(g))}",
                    rule="section",
                )
            values.append(a)
        return FinTerm(A, tuple(values))

    # ------------------------------------------------------------------
    # cwf structure
    # ------------------------------------------------------------------

    def dom(self, f: FinMorphism) -> FinObject:
        return f.dom

    def cod(self, f: FinMorphism) -> FinObject:
        return f.cod

    def type_context(self, A: FinType) -> FinObject:
        return A.context

    def term_context(self, a: FinTerm) -> FinObject:
        return a.context

    def term_type(self, a: FinTerm) -> FinType:
        return a.type

    def identity(self, G: FinObject) -> FinMorphism:
        return FinMorphism(G, G, G.elements)

    def compose(self, f: FinMorphism, g: FinMorphism) -> FinMorphism:
        self.require_composable(f, g)
        return FinMorphism(g.dom, f.cod, tuple(f(g(x)) for x in g.dom))

    def terminal(self) -> FinObject:
        return FinObject((POINT,))

    def bang(self, G: FinObject) -> FinMorphism:
        return FinMorphism(G, self.terminal(), tuple(POINT for _ in G))

    def ty_subst(self, A: FinType, f: FinMorphism) -> FinType:
        self.require_over(A, f.cod, "ty_subst")
        return FinType(f.dom, tuple(A.fiber(f(x)) for x in f.dom))

    def tm_subst(self, a: FinTerm, f: FinMorphism) -> FinTerm:
        self.require_over(a.type, f.cod, "tm_subst")
        return FinTerm(self.ty_subst(a.type, f), tuple(a(f(x)) for x in f.dom))

    def comprehend(self, A: FinType) -> FinObject:
        return FinObject(tuple((g, a) for g in A.context for a in A.fiber(g)))

    def proj(self, A: FinType) -> FinMorphism:
        GA = self.comprehend(A)
        return FinMorphism(GA, A.context, tuple(g for g, _ in GA))

    def var(self, A: FinType) -> FinTerm:
        GA = self.comprehend(A)
        return FinTerm(self.ty_subst(A, self.proj(A)), tuple(a for _, a in GA))

    def pair(self, f: FinMorphism, A: FinType, a: FinTerm) -> FinMorphism:
        self.require_over(A, f.cod, "pair")
        self.require_term(a, self.ty_subst(A, f), "pair")
        return FinMorphism(f.dom, self.comprehend(A), tuple((f(x), a(x)) for x in f.dom))

    def inhabited(self, A: FinType) -> bool:
        return all(A.fiber(g) for g in A.context)

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------

    def all_morphisms(self, dom: FinObject, cod: FinObject) -> Iterator[FinMorphism]:
        for values in itertools.product(cod.elements, repeat=len(dom)):
            yield FinMorphism(dom, cod, values)

    def monotone_morphisms(self, dom: FinObject, cod: FinObject) -> Iterator[FinMorphism]:
        """Maps whose table is nondecreasing; any map is one of these after relabeling ``dom``."""
        for values in itertools.combinations_with_replacement(cod.elements, len(dom)):
            yield FinMorphism(dom, cod, values)

    def all_sections(self, A: FinType) -> Iterator[FinTerm]:
        for values in itertools.product(*(A.fiber(g) for g in A.context)):
            yield FinTerm(A, values)

    def all_types(
        self, G: FinObject, universe: Iterable[Token], representatives: bool = False
    ) -> Iterator[FinType]:
        """Every family over ``G`` whose fibers are subsets of ``universe``.

        With ``representatives`` the fibers are prefixes of ``universe`` only,
        one per cardinality.
        """
        subsets = list(prefixes(universe) if representatives else powerset(universe))
        for fibers in itertools.product(subsets, repeat=len(G)):
            yield FinType(G, fibers)

    def all_objects(self, universe: Iterable[Token]) -> Iterator[FinObject]:
        for subset in powerset(universe):
            yield FinObject(subset)

    def representative_objects(self, universe: Iterable[Token]) -> Iterator[FinObject]:
        for prefix in prefixes(universe):
            yield FinObject(prefix)


def powerset(universe: Iterable[Token]) -> Iterator[Tuple[Token, ...]]:
    items = canonical(universe)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def prefixes(universe: Iterable[Token]) -> Iterator[Tuple[Token, ...]]:
    items = canonical(universe)
    for r in range(len(items) + 1):
        yield items[:r]
