"""The category-with-families interface.

A concrete cwf supplies the primitive structure; tuples, iterated projections,
projection variables and the q-maps are derived here once for every instance.

Conventions: ``compose(f, g)`` is ``f o g`` (apply ``g`` first), ``ty_subst(A, f)``
is ``A{f}`` and ``pair(f, A, a)`` is ``<f, a>_A``.
"""

from abc import ABC, abstractmethod
from typing import Any, Sequence, Tuple

from dfolkit.exceptions import DoctrineError, FiberMismatchError

Obj = Any
Mor = Any
Ty = Any
Tm = Any


class CwF(ABC):
    """A category with families with decidable equality on all four sorts."""

    name: str = "cwf"

    # ------------------------------------------------------------------
    # primitive structure
    # ------------------------------------------------------------------

    @abstractmethod
    def dom(self, f: Mor) -> Obj:
        ...

    @abstractmethod
    def cod(self, f: Mor) -> Obj:
        ...

    @abstractmethod
    def type_context(self, A: Ty) -> Obj:
        """The object ``Γ`` with ``A`` in ``Ty(Γ)``."""

    @abstractmethod
    def term_context(self, a: Tm) -> Obj:
        ...

    @abstractmethod
    def term_type(self, a: Tm) -> Ty:
        ...

    @abstractmethod
    def identity(self, G: Obj) -> Mor:
        ...

    @abstractmethod
    def compose(self, f: Mor, g: Mor) -> Mor:
        ...

    @abstractmethod
    def terminal(self) -> Obj:
        ...

    @abstractmethod
    def bang(self, G: Obj) -> Mor:
        """The unique map ``G -> terminal``."""

    @abstractmethod
    def ty_subst(self, A: Ty, f: Mor) -> Ty:
        ...

    @abstractmethod
    def tm_subst(self, a: Tm, f: Mor) -> Tm:
        ...

    @abstractmethod
    def comprehend(self, A: Ty) -> Obj:
        """``Γ.A``."""

    @abstractmethod
    def proj(self, A: Ty) -> Mor:
        """``p(A): Γ.A -> Γ``."""

    @abstractmethod
    def var(self, A: Ty) -> Tm:
        """``v_A`` in ``Tm(Γ.A, A{p(A)})``."""

    @abstractmethod
    def pair(self, f: Mor, A: Ty, a: Tm) -> Mor:
        """``<f, a>_A: Δ -> Γ.A`` for ``f: Δ -> Γ`` and ``a`` in ``Tm(Δ, A{f})``."""

    def inhabited(self, A: Ty) -> bool:
        """Whether ``Tm(Γ, A)`` is non-empty; only some instances decide this."""
        raise DoctrineError(f"{self.name} does not decide inhabitation", rule="inhabited")

    # ------------------------------------------------------------------
    # checks
    # ------------------------------------------------------------------

    def require_composable(self, f: Mor, g: Mor) -> None:
        if self.dom(f) != self.cod(g):
            raise FiberMismatchError(
                f"cannot compose: codomain {self.cod(g)} is not domain {self.dom(f)}",
                rule="compose",
            )

    def require_over(self, A: Ty, G: Obj, rule: str) -> None:
        if self.type_context(A) != G:
            raise FiberMismatchError(
                f"type {A} lives over {self.type_context(A)}, expected {G}", rule=rule
            )

    def require_term(self, a: Tm, A: Ty, rule: str) -> None:
        if self.term_type(a) != A:
            raise FiberMismatchError(
                f"term {a} has type {self.term_type(a)}, expected {A}", rule=rule
            )

    # ------------------------------------------------------------------
    # derived combinators
    # ------------------------------------------------------------------

    def telescope(self, types: Sequence[Ty]) -> Obj:
        """``⊤.A1...An`` for a telescope with ``A(k+1)`` over ``⊤.A1...Ak``."""
        G = self.terminal()
        for k, A in enumerate(types, start=1):
            try:
                self.require_over(A, G, "telescope")
            except FiberMismatchError as e:
                raise e.at(k)
            G = self.comprehend(A)
        return G

    def tuple_mor(self, theta: Obj, types: Sequence[Ty], terms: Sequence[Tm]) -> Mor:
        """``[a1, ..., an]: Θ -> ⊤.A1...An``.

        ``[] = ε_Θ`` and ``[a1..a(k+1)] = <[a1..ak], a(k+1)>_A(k+1)``, so
        ``a(k+1)`` must live in ``Tm(Θ, A(k+1){[a1..ak]})``.
        """
        if len(types) != len(terms):
            raise FiberMismatchError(
                f"{len(terms)} terms for a telescope of length {len(types)}", rule="tuple"
            )
        f = self.bang(theta)
        for k, (A, a) in enumerate(zip(types, terms), start=1):
            try:
                f = self.pair(f, A, a)
            except FiberMismatchError as e:
                raise e.at(k)
        return f

    def iterated_proj(self, types: Sequence[Ty], i: int) -> Mor:
        """``p^(i) = p(A(n-i+1)) o ... o p(An): ⊤.A1...An -> ⊤.A1...A(n-i)``."""
        n = len(types)
        if not 0 <= i <= n:
            raise FiberMismatchError(f"no projection p^({i}) out of length {n}", rule="proj")
        f = self.identity(self.telescope(types))
        for k in range(n - 1, n - 1 - i, -1):
            f = self.compose(self.proj(types[k]), f)
        return f

    def var_proj(self, types: Sequence[Ty], i: int) -> Tm:
        """``x_i = v_(A_i){p^(n-i)}``, the i-th variable of ``⊤.A1...An`` (1-based)."""
        n = len(types)
        if not 1 <= i <= n:
            raise FiberMismatchError(f"no variable x{i} in a telescope of length {n}", rule="var")
        return self.tm_subst(self.var(types[i - 1]), self.iterated_proj(types, n - i))

    def components(self, f: Mor, types: Sequence[Ty]) -> Tuple[Tm, ...]:
        """``f_(i) = x_i{f}`` for ``f: Θ -> ⊤.A1...An``."""
        return tuple(self.tm_subst(self.var_proj(types, i), f) for i in range(1, len(types) + 1))

    def q(self, f: Mor, S: Ty) -> Mor:
        """``f.S = <f o p(S{f}), v_(S{f})>_S: Δ.S{f} -> Γ.S``."""
        Sf = self.ty_subst(S, f)
        return self.pair(self.compose(f, self.proj(Sf)), S, self.var(Sf))
