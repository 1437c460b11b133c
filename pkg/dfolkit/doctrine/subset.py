"""The subset doctrine over the finite-set cwf.

``Pr(Γ)`` is the powerset of ``Γ``, substitution is preimage and

- ``∀_S(R) = {γ | (γ, a) ∈ R for every a ∈ S(γ)}``,
- ``∃_S(R) = {γ | (γ, a) ∈ R for some a ∈ S(γ)}``.

It is the target of formula evaluation in finite models.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator

from dfolkit.cwf.finset import FinMorphism, FinObject, FinSetCwF, FinType, Token, show
from dfolkit.doctrine.base import Hyperdoctrine
from dfolkit.doctrine.heyting import PowersetAlgebra
from dfolkit.exceptions import DoctrineError


@dataclass(frozen=True)
class Subset:
    context: FinObject
    members: FrozenSet[Token]

    def __post_init__(self) -> None:
        stray = [m for m in self.members if m not in self.context]
        if stray:
            raise DoctrineError(f"{show(stray[0])} is not an element of {self.context}")

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def __str__(self) -> str:
        return "{" + ", ".join(show(g) for g in self.context if g in self.members) + "}"


class SubsetDoctrine(Hyperdoctrine[Subset]):
    name = "subset"

    def __init__(self, base: FinSetCwF):
        super().__init__(base)
        self.cwf = base

    def subset(self, G: FinObject, members: Iterable[Token]) -> Subset:
        return Subset(G, frozenset(members))

    def _algebra(self, G: FinObject) -> PowersetAlgebra:
        return PowersetAlgebra.over(G)

    def context_of(self, x: Subset) -> FinObject:
        return x.context

    def le(self, x: Subset, y: Subset) -> bool:
        G = self.require_same(x, y, "le")
        return self._algebra(G).le(x.members, y.members)

    def top(self, G: FinObject) -> Subset:
        return Subset(G, self._algebra(G).top())

    def bot(self, G: FinObject) -> Subset:
        return Subset(G, self._algebra(G).bot())

    def conj(self, x: Subset, y: Subset) -> Subset:
        G = self.require_same(x, y, "and")
        return Subset(G, self._algebra(G).meet(x.members, y.members))

    def disj(self, x: Subset, y: Subset) -> Subset:
        G = self.require_same(x, y, "or")
        return Subset(G, self._algebra(G).join(x.members, y.members))

    def imp(self, x: Subset, y: Subset) -> Subset:
        G = self.require_same(x, y, "imp")
        return Subset(G, self._algebra(G).imp(x.members, y.members))

    def subst(self, x: Subset, f: FinMorphism) -> Subset:
        self.require_at(x, f.cod, "subst")
        return Subset(f.dom, frozenset(d for d in f.dom if f(d) in x.members))

    def forall(self, S: FinType, x: Subset) -> Subset:
        self.require_quantifiable(S, x, "forall")
        G = S.context
        return Subset(G, frozenset(g for g in G if all((g, a) in x for a in S.fiber(g))))

    def exists(self, S: FinType, x: Subset) -> Subset:
        self.require_quantifiable(S, x, "exists")
        G = S.context
        return Subset(G, frozenset(g for g in G if any((g, a) in x for a in S.fiber(g))))

    def elements(self, G: FinObject) -> Iterator[Subset]:
        for members in self._algebra(G).elements():
            yield Subset(G, members)


def subset_doctrine(base: FinSetCwF) -> SubsetDoctrine:
    return SubsetDoctrine(base)
