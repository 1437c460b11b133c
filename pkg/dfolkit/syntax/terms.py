"""Raw terms, types and contexts over a symbol system.

Nothing here consults a signature: these are the pre-syntactic objects that
the checker later accepts or rejects. All values are immutable.
"""

from dataclasses import dataclass, field
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from dfolkit.exceptions import SubstitutionError
from dfolkit.syntax.variables import Variable


@dataclass(frozen=True)
class Var:
    name: Variable

    def __str__(self) -> str:
        return str(self.name)


@dataclass(frozen=True)
class App:
    """Function symbol applied to its explicit arguments."""

    head: str
    args: Tuple["PreTerm", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.head
        return "(" + " ".join([self.head] + [str(a) for a in self.args]) + ")"


PreTerm = Union[Var, App]


@dataclass(frozen=True)
class PreType:
    head: str
    args: Tuple[PreTerm, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.head
        return "(" + " ".join([self.head] + [str(a) for a in self.args]) + ")"


@dataclass(frozen=True)
class PreContext:
    """An ordered list of variable declarations ``x1:A1, ..., xn:An``."""

    entries: Tuple[Tuple[Variable, PreType], ...] = ()
    _index: Dict[Variable, int] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        index = {}
        for k, (x, _) in enumerate(self.entries):
            index.setdefault(x, k)
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *entries: Tuple[Variable, PreType]) -> "PreContext":
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[Variable, PreType]]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "(ctx" + "".join(f" ({x} {A})" for x, A in self.entries) + ")"

    @property
    def variables(self) -> Tuple[Variable, ...]:
        """OV: the declared variables in order."""
        return tuple(x for x, _ in self.entries)

    @property
    def types(self) -> Tuple[PreType, ...]:
        return tuple(A for _, A in self.entries)

    def declares(self, x: Variable) -> bool:
        return x in self._index

    def position(self, x: Variable) -> int:
        """1-based position of the first declaration of ``x``."""
        return self._index[x] + 1

    def type_of(self, x: Variable) -> Optional[PreType]:
        k = self._index.get(x)
        return None if k is None else self.entries[k][1]

    def extend(self, x: Variable, A: PreType) -> "PreContext":
        return PreContext(self.entries + ((x, A),))

    def concat(self, other: "PreContext") -> "PreContext":
        return PreContext(self.entries + other.entries)

    def prefix(self, k: int) -> "PreContext":
        return PreContext(self.entries[:k])

    def suffix(self, k: int) -> "PreContext":
        return PreContext(self.entries[k:])

    def as_terms(self) -> Tuple[Var, ...]:
        return tuple(Var(x) for x in self.variables)


Expr = Union[Var, App, PreType, PreContext]


def iter_vars(E: Union[Expr, Iterable[Expr]]) -> Iterator[Variable]:
    if isinstance(E, Var):
        yield E.name
    elif isinstance(E, (App, PreType)):
        for a in E.args:
            yield from iter_vars(a)
    elif isinstance(E, PreContext):
        for x, A in E.entries:
            yield x
            yield from iter_vars(A)
    else:
        for item in E:
            yield from iter_vars(item)


def free_vars(E: Union[Expr, Iterable[Expr]]) -> FrozenSet[Variable]:
    """V(E): every variable occurring in ``E``."""
    return frozenset(iter_vars(E))


def symbols(E: Union[Expr, Iterable[Expr]]) -> FrozenSet[str]:
    """Every function or type symbol occurring in ``E``."""
    found: Set[str] = set()

    def walk(e: object) -> None:
        if isinstance(e, (App, PreType)):
            found.add(e.head)
            for a in e.args:
                walk(a)
        elif isinstance(e, PreContext):
            for _, A in e.entries:
                walk(A)
        elif isinstance(e, (tuple, list, set, frozenset)):
            for item in e:
                walk(item)

    walk(E)
    return frozenset(found)


def substitution_map(
    values: Sequence[PreTerm], over: Sequence[Variable]
) -> Mapping[Variable, PreTerm]:
    if len(values) != len(over):
        raise SubstitutionError(
            f"substitution of {len(values)} values for {len(over)} variables", rule="subst"
        )
    mapping: Dict[Variable, PreTerm] = {}
    for k, x in enumerate(over, start=1):
        if x in mapping:
            raise SubstitutionError(f"variable {x} targeted twice", rule="subst", path=(k,))
        mapping[x] = values[k - 1]
    return mapping


def apply_map(E: Any, mapping: Mapping[Variable, PreTerm]) -> Any:
    """Simultaneous replacement along an already validated mapping."""
    if isinstance(E, Var):
        return mapping.get(E.name, E)
    if isinstance(E, App):
        return App(E.head, tuple(apply_map(a, mapping) for a in E.args))
    if isinstance(E, PreType):
        return PreType(E.head, tuple(apply_map(a, mapping) for a in E.args))
    if isinstance(E, PreContext):
        return PreContext(tuple((x, apply_map(A, mapping)) for x, A in E.entries))
    raise TypeError(f"cannot substitute into {type(E).__name__}")


def subst(E: Any, values: Sequence[PreTerm], over: Sequence[Variable]) -> Any:
    """E[values/over], simultaneously.

    Raises:
        SubstitutionError: on length mismatch or a repeated target variable
    """
    mapping = substitution_map(values, over)
    if not mapping:
        return E
    return apply_map(E, mapping)


def subst_ctx(E: Any, values: Sequence[PreTerm], ctx: PreContext) -> Any:
    """E[values/ctx], i.e. substitution for OV(ctx)."""
    return subst(E, values, ctx.variables)


def top_vars(ctx: PreContext) -> FrozenSet[Variable]:
    """TV: the variables not consumed by any later type in the context."""
    tv: FrozenSet[Variable] = frozenset()
    for x, A in ctx.entries:
        tv = (tv - free_vars(A)) | {x}
    return tv


def term_size(t: PreTerm) -> int:
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(a) for a in t.args)


def subterm(E: Union[PreTerm, PreType], path: Sequence[int]) -> Union[PreTerm, PreType]:
    """The sub-term at a 1-based argument path."""
    for k in path:
        if isinstance(E, Var):
            raise IndexError(f"no argument {k} under a variable")
        E = E.args[k - 1]
    return E
