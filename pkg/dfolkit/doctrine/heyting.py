"""Heyting prealgebras.

A Heyting prealgebra is a preorder with a top, a bottom, binary meets and
joins and an implication with ``z ≤ (x → y)`` iff ``z ∧ x ≤ y``. The order is
not required to be antisymmetric, so the operations are determined up to
``≤``-equivalence only.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, FrozenSet, Generic, Iterable, Iterator, TypeVar

from dfolkit.cwf.finset import Token, canonical, powerset

E = TypeVar("E")


class HeytingPrealgebra(ABC, Generic[E]):
    @abstractmethod
    def le(self, x: E, y: E) -> bool:
        pass

    @abstractmethod
    def top(self) -> E:
        pass

    @abstractmethod
    def bot(self) -> E:
        pass

    @abstractmethod
    def meet(self, x: E, y: E) -> E:
        pass

    @abstractmethod
    def join(self, x: E, y: E) -> E:
        pass

    @abstractmethod
    def imp(self, x: E, y: E) -> E:
        pass

    def elements(self) -> Iterable[E]:
        """A finite sample of the carrier; finite algebras return all of it."""
        return ()

    def equiv(self, x: E, y: E) -> bool:
        return self.le(x, y) and self.le(y, x)


@dataclass(frozen=True)
class PowersetAlgebra(HeytingPrealgebra[FrozenSet[Token]]):
    """Subsets of a finite universe ordered by inclusion."""

    universe: FrozenSet[Token]

    @classmethod
    def over(cls, universe: Iterable[Token]) -> "PowersetAlgebra":
        return cls(frozenset(universe))

    def le(self, x: FrozenSet[Token], y: FrozenSet[Token]) -> bool:
        return x <= y

    def top(self) -> FrozenSet[Token]:
        return self.universe

    def bot(self) -> FrozenSet[Token]:
        return frozenset()

    def meet(self, x: FrozenSet[Token], y: FrozenSet[Token]) -> FrozenSet[Token]:
        return x & y

    def join(self, x: FrozenSet[Token], y: FrozenSet[Token]) -> FrozenSet[Token]:
        return x | y

    def imp(self, x: FrozenSet[Token], y: FrozenSet[Token]) -> FrozenSet[Token]:
        return (self.universe - x) | y

    def elements(self) -> Iterator[FrozenSet[Token]]:
        for subset in powerset(canonical(self.universe)):
            yield frozenset(subset)


class FiberAlgebra(HeytingPrealgebra[Any]):
    """The prealgebra ``Pr(Γ)`` of one doctrine at one object."""

    def __init__(self, doctrine: Any, G: Any):
        self.doctrine = doctrine
        self.G = G

    def le(self, x: Any, y: Any) -> bool:
        return bool(self.doctrine.le(x, y))

    def top(self) -> Any:
        return self.doctrine.top(self.G)

    def bot(self) -> Any:
        return self.doctrine.bot(self.G)

    def meet(self, x: Any, y: Any) -> Any:
        return self.doctrine.conj(x, y)

    def join(self, x: Any, y: Any) -> Any:
        return self.doctrine.disj(x, y)

    def imp(self, x: Any, y: Any) -> Any:
        return self.doctrine.imp(x, y)

    def elements(self) -> Iterable[Any]:
        return self.doctrine.elements(self.G)
