"""Type constructions in the finite-set cwf: N_k, Σ, Π and +.

Every constructor and eliminator is defined pointwise on tabulated data, so
the conversion and substitution equations hold exactly. Elements of ``N_k``
are ``0..k-1``; Σ elements are pairs ``(a, b)``; Π elements are tuples of
``(a, b)`` pairs in the order of the domain fiber; + elements are tagged
``("inl", a)`` or ``("inr", b)``.
"""

from typing import Dict, Sequence, Tuple

from dfolkit.cwf.finset import FinMorphism, FinObject, FinSetCwF, FinTerm, FinType, Token, show
from dfolkit.exceptions import FiberMismatchError

INL = "inl"
INR = "inr"


class Constructions:
    """N_k, Σ, Π and + over one :class:`FinSetCwF`."""

    def __init__(self, cwf: FinSetCwF):
        self.cwf = cwf

    def point(self, a: FinTerm) -> FinMorphism:
        """``<1, a>_A: Γ -> Γ.A`` for ``a`` in ``Tm(Γ, A)``."""
        C = self.cwf
        return C.pair(C.identity(a.context), a.type, a)

    # ------------------------------------------------------------------
    # finite types
    # ------------------------------------------------------------------

    def nk(self, G: FinObject, k: int) -> FinType:
        if k < 0:
            raise FiberMismatchError(f"N_{k} is not a type", rule="N_k")
        return self.cwf.constant_family(G, range(k))

    def ik(self, G: FinObject, k: int, i: int) -> FinTerm:
        """The constant ``i`` in ``Tm(Γ, N_k)``."""
        if not 0 <= i < k:
            raise FiberMismatchError(f"{i} is not an element of N_{k}", rule="i_k")
        return self.cwf.section(self.nk(G, k), lambda _: i)

    def rk(self, C: FinType, branches: Sequence[FinTerm], n: FinTerm) -> FinTerm:
        """``R_k(C, M_0, ..., M_(k-1), n)`` in ``Tm(Γ, C{<1, n>})``.

        ``C`` lives over ``Γ.N_k`` and ``M_i`` in ``Tm(Γ, C{<1, i_k>})``.
        """
        cwf = self.cwf
        G = n.context
        k = len(branches)
        if n.type != self.nk(G, k):
            raise FiberMismatchError(f"eliminated term is not in N_{k}", rule="R_k")
        cwf.require_over(C, cwf.comprehend(self.nk(G, k)), "R_k")
        for i, M in enumerate(branches):
            cwf.require_term(M, cwf.ty_subst(C, self.point(self.ik(G, k, i))), "R_k")
        target = cwf.ty_subst(C, self.point(n))
        return cwf.section(target, lambda g: branches[n(g)](g))

    # ------------------------------------------------------------------
    # Σ
    # ------------------------------------------------------------------

    def sigma(self, A: FinType, B: FinType) -> FinType:
        cwf = self.cwf
        cwf.require_over(B, cwf.comprehend(A), "Σ")
        return cwf.family(
            A.context, lambda g: [(a, b) for a in A.fiber(g) for b in B.fiber((g, a))]
        )

    def pair_sigma(self, A: FinType, B: FinType, a: FinTerm, b: FinTerm) -> FinTerm:
        """``Pair(a, b)`` for ``a`` in ``Tm(Γ, A)`` and ``b`` in ``Tm(Γ, B{<1, a>})``."""
        cwf = self.cwf
        cwf.require_term(a, A, "Pair")
        cwf.require_term(b, cwf.ty_subst(B, self.point(a)), "Pair")
        return cwf.section(self.sigma(A, B), lambda g: (a(g), b(g)))

    def split(self, A: FinType, B: FinType, C: FinType, c: FinTerm, z: FinTerm) -> FinTerm:
        """``E(C, c, z)`` in ``Tm(Γ, C{<1, z>})``.

        ``C`` lives over ``Γ.Σ(A, B)`` and ``c`` over ``Γ.A.B`` with
        ``c((γ, a), b)`` in the fiber of ``C`` at ``(γ, (a, b))``.
        """
        cwf = self.cwf
        S = self.sigma(A, B)
        cwf.require_term(z, S, "E")
        cwf.require_over(C, cwf.comprehend(S), "E")
        cwf.require_over(c.type, cwf.comprehend(B), "E")
        for g in A.context:
            for a, b in S.fiber(g):
                if c(((g, a), b)) not in set(C.fiber((g, (a, b)))):
                    raise FiberMismatchError(
                        f"branch value at {show(((g, a), b))} is outside C", rule="E"
                    )
        return cwf.section(cwf.ty_subst(C, self.point(z)), lambda g: c(((g, z(g)[0]), z(g)[1])))

    # ------------------------------------------------------------------
    # Π
    # ------------------------------------------------------------------

    def pi(self, A: FinType, B: FinType) -> FinType:
        cwf = self.cwf
        cwf.require_over(B, cwf.comprehend(A), "Π")

        def functions(g: Token) -> list:
            domain = A.fiber(g)
            choices = [B.fiber((g, a)) for a in domain]
            found = [()]  # type: list
            for a, fiber in zip(domain, choices):
                found = [f + ((a, b),) for f in found for b in fiber]
            return found

        return cwf.family(A.context, functions)

    def lam(self, A: FinType, b: FinTerm) -> FinTerm:
        """``λ(b)`` in ``Tm(Γ, Π(A, B))`` for ``b`` in ``Tm(Γ.A, B)``."""
        cwf = self.cwf
        cwf.require_over(b.type, cwf.comprehend(A), "λ")
        return cwf.section(
            self.pi(A, b.type), lambda g: tuple((a, b((g, a))) for a in A.fiber(g))
        )

    def app(self, A: FinType, B: FinType, c: FinTerm, a: FinTerm) -> FinTerm:
        """``App(c, a)`` in ``Tm(Γ, B{<1, a>})``."""
        cwf = self.cwf
        cwf.require_term(c, self.pi(A, B), "App")
        cwf.require_term(a, A, "App")
        return cwf.section(cwf.ty_subst(B, self.point(a)), lambda g: dict(c(g))[a(g)])

    # ------------------------------------------------------------------
    # +
    # ------------------------------------------------------------------

    def plus(self, A: FinType, B: FinType) -> FinType:
        cwf = self.cwf
        cwf.require_over(B, A.context, "+")
        return cwf.family(
            A.context,
            lambda g: [(INL, a) for a in A.fiber(g)] + [(INR, b) for b in B.fiber(g)],
        )

    def inl(self, a: FinTerm, B: FinType) -> FinTerm:
        return self.cwf.section(self.plus(a.type, B), lambda g: (INL, a(g)))

    def inr(self, A: FinType, b: FinTerm) -> FinTerm:
        return self.cwf.section(self.plus(A, b.type), lambda g: (INR, b(g)))

    def case(
        self, A: FinType, B: FinType, C: FinType, d: FinTerm, e: FinTerm, z: FinTerm
    ) -> FinTerm:
        """``D(C, d, e, z)`` in ``Tm(Γ, C{<1, z>})``.

        ``d`` lives over ``Γ.A`` with ``d(γ, a)`` in ``C`` at ``(γ, inl a)``;
        ``e`` likewise over ``Γ.B``.
        """
        cwf = self.cwf
        P = self.plus(A, B)
        cwf.require_term(z, P, "D")
        cwf.require_over(C, cwf.comprehend(P), "D")
        cwf.require_over(d.type, cwf.comprehend(A), "D")
        cwf.require_over(e.type, cwf.comprehend(B), "D")

        def branch(g: Token) -> Token:
            tag, x = z(g)
            return d((g, x)) if tag == INL else e((g, x))

        for g in A.context:
            for tag, x in P.fiber(g):
                value = d((g, x)) if tag == INL else e((g, x))
                if value not in set(C.fiber((g, (tag, x)))):
                    raise FiberMismatchError(
                        f"{tag} branch value at {show((g, x))} is outside C", rule="D"
                    )
        return cwf.section(cwf.ty_subst(C, self.point(z)), branch)

    # ------------------------------------------------------------------
    # non-dependent products and functions
    # ------------------------------------------------------------------

    def weakened(self, A: FinType, B: FinType) -> FinType:
        """``B{p(A)}``."""
        return self.cwf.ty_subst(B, self.cwf.proj(A))

    def product(self, A: FinType, B: FinType) -> FinType:
        return self.sigma(A, self.weakened(A, B))

    def arrow(self, A: FinType, B: FinType) -> FinType:
        return self.pi(A, self.weakened(A, B))

    def pair(self, a: FinTerm, b: FinTerm) -> FinTerm:
        """``pair_(A,B)(a, b)`` in ``Tm(Γ, A × B)``."""
        cwf = self.cwf
        cwf.require_over(b.type, a.context, "pair")
        return cwf.section(self.product(a.type, b.type), lambda g: (a(g), b(g)))

    def fst(self, A: FinType, B: FinType, z: FinTerm) -> FinTerm:
        self.cwf.require_term(z, self.product(A, B), "π1")
        return self.cwf.section(A, lambda g: z(g)[0])

    def snd(self, A: FinType, B: FinType, z: FinTerm) -> FinTerm:
        self.cwf.require_term(z, self.product(A, B), "π2")
        return self.cwf.section(B, lambda g: z(g)[1])

    def unpair(self, A: FinType, B: FinType, z: FinTerm) -> Tuple[FinTerm, FinTerm]:
        return self.fst(A, B, z), self.snd(A, B, z)

    def apply(self, A: FinType, B: FinType, c: FinTerm, a: FinTerm) -> FinTerm:
        """Non-dependent application: ``c`` in ``Tm(Γ, A → B)``, result in ``Tm(Γ, B)``."""
        cwf = self.cwf
        cwf.require_term(c, self.arrow(A, B), "app")
        cwf.require_term(a, A, "app")
        table: Dict[Token, Token] = {g: dict(c(g))[a(g)] for g in A.context}
        return cwf.section(B, table)
