"""The hyperdoctrine interface.

A hyperdoctrine over a cwf assigns a Heyting prealgebra ``Pr(Γ)`` to every
object, acts on it by substitution along morphisms and has quantifiers
``∀_S, ∃_S : Pr(Γ.S) -> Pr(Γ)`` for every type ``S`` over ``Γ``. Elements
carry the object they live over, so every operation can check its inputs.
"""

from abc import ABC, abstractmethod
from typing import Any, Generic, Iterable, TypeVar

from dfolkit.cwf.base import CwF
from dfolkit.doctrine.heyting import FiberAlgebra
from dfolkit.exceptions import DoctrineError

P = TypeVar("P")


class Hyperdoctrine(ABC, Generic[P]):
    name = "doctrine"

    def __init__(self, base: CwF):
        self.base = base

    @abstractmethod
    def context_of(self, x: P) -> Any:
        """The object an element lives over."""

    @abstractmethod
    def le(self, x: P, y: P) -> bool:
        pass

    @abstractmethod
    def top(self, G: Any) -> P:
        pass

    @abstractmethod
    def bot(self, G: Any) -> P:
        pass

    @abstractmethod
    def conj(self, x: P, y: P) -> P:
        pass

    @abstractmethod
    def disj(self, x: P, y: P) -> P:
        pass

    @abstractmethod
    def imp(self, x: P, y: P) -> P:
        pass

    @abstractmethod
    def subst(self, x: P, f: Any) -> P:
        """``x{f}`` over ``dom f`` for ``x`` over ``cod f``."""

    @abstractmethod
    def forall(self, S: Any, x: P) -> P:
        """``∀_S x`` over ``Γ`` for ``x`` over ``Γ.S``."""

    @abstractmethod
    def exists(self, S: Any, x: P) -> P:
        pass

    def elements(self, G: Any) -> Iterable[P]:
        raise DoctrineError(f"{self.name} cannot enumerate Pr({G})", rule="elements")

    def equiv(self, x: P, y: P) -> bool:
        return self.le(x, y) and self.le(y, x)

    def fiber(self, G: Any) -> FiberAlgebra:
        return FiberAlgebra(self, G)

    # ------------------------------------------------------------------

    def require_at(self, x: P, G: Any, rule: str) -> None:
        if self.context_of(x) != G:
            raise DoctrineError(f"{x} does not live over {G}", rule=rule)

    def require_same(self, x: P, y: P, rule: str) -> Any:
        G = self.context_of(x)
        self.require_at(y, G, rule)
        return G

    def require_quantifiable(self, S: Any, x: P, rule: str) -> None:
        self.require_at(x, self.base.comprehend(S), rule)
