"""The Horn doctrine ``Pr^∧`` of any cwf.

An element over ``Γ`` is a finite sequence of types over ``Γ``, read as their
conjunction. ``⟨A1..An⟩ ≤ ⟨B1..Bm⟩`` iff every ``Bj`` weakened to the iterated
comprehension ``Γ.A1.A2..An`` (each ``Ak`` weakened along the earlier
projections) has a term. ``⊤`` is the empty sequence and ``∧`` is
concatenation, which is a meet up to ``≤``-equivalence.
"""

from dataclasses import dataclass
from typing import Any, Tuple

from dfolkit.cwf.base import CwF
from dfolkit.exceptions import DoctrineError


@dataclass(frozen=True)
class Conjunction:
    context: Any
    types: Tuple[Any, ...] = ()

    def __str__(self) -> str:
        return "<" + ", ".join(str(A) for A in self.types) + ">"


class HornDoctrine:
    name = "horn"

    def __init__(self, base: CwF):
        self.base = base

    def element(self, G: Any, *types: Any) -> Conjunction:
        for A in types:
            self.base.require_over(A, G, "horn")
        return Conjunction(G, tuple(types))

    def _require_same(self, x: Conjunction, y: Conjunction, rule: str) -> None:
        if x.context != y.context:
            raise DoctrineError(f"{x} and {y} live over different objects", rule=rule)

    def extension(self, x: Conjunction) -> Tuple[Any, Any]:
        """``Γ.A1..An`` with its composite projection to ``Γ``."""
        C = self.base
        weakening = C.identity(x.context)
        for A in x.types:
            moved = C.ty_subst(A, weakening)
            weakening = C.compose(weakening, C.proj(moved))
        return C.dom(weakening), weakening

    def le(self, x: Conjunction, y: Conjunction) -> bool:
        self._require_same(x, y, "le")
        _, weakening = self.extension(x)
        return all(self.base.inhabited(self.base.ty_subst(B, weakening)) for B in y.types)

    def equiv(self, x: Conjunction, y: Conjunction) -> bool:
        return self.le(x, y) and self.le(y, x)

    def top(self, G: Any) -> Conjunction:
        return Conjunction(G)

    def conj(self, x: Conjunction, y: Conjunction) -> Conjunction:
        self._require_same(x, y, "and")
        return Conjunction(x.context, x.types + y.types)

    def subst(self, x: Conjunction, f: Any) -> Conjunction:
        if x.context != self.base.cod(f):
            raise DoctrineError(f"{x} does not live over the codomain of {f}", rule="subst")
        return Conjunction(self.base.dom(f), tuple(self.base.ty_subst(A, f) for A in x.types))


def horn_doctrine(base: CwF) -> HornDoctrine:
    return HornDoctrine(base)
