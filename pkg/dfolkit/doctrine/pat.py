"""The propositions-as-types doctrine ``Pr_C`` over the finite-set cwf.

``Pr_C(Γ) = Ty(Γ)`` with ``A ≤ B`` iff ``Tm(Γ.A, B{p(A)})`` is inhabited.
The connectives are type constructions: ⊤ is N₁, ⊥ is N₀, ∧ is ×, ∨ is +,
→ is the function type, ∀_S is Π(S, -) and ∃_S is Σ(S, -).
"""

from typing import Iterable, Iterator, Optional

from dfolkit.cwf.constructions import Constructions
from dfolkit.cwf.finset import FinMorphism, FinObject, FinSetCwF, FinType, Token
from dfolkit.doctrine.base import Hyperdoctrine


class PatDoctrine(Hyperdoctrine[FinType]):
    """Types ordered by inhabitation.

    Args:
        base: The finite-set cwf
        universe: Fibers of the enumerated elements are subsets of it
    """

    name = "pat"

    def __init__(self, base: FinSetCwF, universe: Optional[Iterable[Token]] = None):
        super().__init__(base)
        self.cwf = base
        self.types = Constructions(base)
        self.universe = tuple(universe) if universe is not None else (0,)

    def context_of(self, x: FinType) -> FinObject:
        return x.context

    def le(self, x: FinType, y: FinType) -> bool:
        self.require_same(x, y, "le")
        return self.cwf.inhabited(self.types.weakened(x, y))

    def top(self, G: FinObject) -> FinType:
        return self.types.nk(G, 1)

    def bot(self, G: FinObject) -> FinType:
        return self.types.nk(G, 0)

    def conj(self, x: FinType, y: FinType) -> FinType:
        self.require_same(x, y, "and")
        return self.types.product(x, y)

    def disj(self, x: FinType, y: FinType) -> FinType:
        self.require_same(x, y, "or")
        return self.types.plus(x, y)

    def imp(self, x: FinType, y: FinType) -> FinType:
        self.require_same(x, y, "imp")
        return self.types.arrow(x, y)

    def subst(self, x: FinType, f: FinMorphism) -> FinType:
        self.require_at(x, f.cod, "subst")
        return self.cwf.ty_subst(x, f)

    def forall(self, S: FinType, x: FinType) -> FinType:
        self.require_quantifiable(S, x, "forall")
        return self.types.pi(S, x)

    def exists(self, S: FinType, x: FinType) -> FinType:
        self.require_quantifiable(S, x, "exists")
        return self.types.sigma(S, x)

    def elements(self, G: FinObject) -> Iterator[FinType]:
        return self.cwf.all_types(G, self.universe)


def pat_doctrine(base: FinSetCwF, universe: Optional[Iterable[Token]] = None) -> PatDoctrine:
    return PatDoctrine(base, universe)
