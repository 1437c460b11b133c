"""Variable systems and fresh-variable providers."""

from dataclasses import dataclass
from enum import Enum
from itertools import count, product
from typing import AbstractSet, FrozenSet, Iterator, Tuple, Union

from dfolkit.constants import IDENTIFIER_ALPHABET

Variable = Union[int, str]


class Flavor(str, Enum):
    """How many fresh variables a provider offers."""

    UNRESTRICTED = "unrestricted"
    DEBRUIJN = "debruijn"


class Carrier(str, Enum):
    """The universe variables are drawn from."""

    IDENT = "ident"
    NAT = "nat"


def identifiers() -> Iterator[str]:
    """Enumerate identifiers in shortlex order: a, ..., z, aa, ab, ..."""
    for length in count(1):
        for letters in product(IDENTIFIER_ALPHABET, repeat=length):
            yield "".join(letters)


def is_identifier(name: object) -> bool:
    if not isinstance(name, str) or not name:
        return False
    if not (name[0].isalpha() or name[0] == "_"):
        return False
    return all(ch.isalnum() or ch in "_'" for ch in name)


@dataclass(frozen=True)
class VariableSystem:
    """A discrete carrier of variables with a fresh-variable provider.

    ``provides(x, used)`` decides ``x in provide(used)`` and ``pick(used)``
    is the chosen fresh variable. For the de Bruijn flavor the carrier is
    the positive naturals and ``provide(X) = {pick(X)}`` with
    ``pick(X) = max{1, x + 1 | x in X}``. For the unrestricted flavor every
    carrier element outside ``X`` is available; ``pick`` returns the least one
    (shortlex order for identifiers, numeric order for naturals).
    """

    flavor: Flavor = Flavor.UNRESTRICTED
    carrier: Carrier = Carrier.IDENT

    def __post_init__(self) -> None:
        if self.flavor is Flavor.DEBRUIJN and self.carrier is not Carrier.NAT:
            raise ValueError("de Bruijn variable systems range over the positive naturals")

    @classmethod
    def debruijn(cls) -> "VariableSystem":
        return cls(Flavor.DEBRUIJN, Carrier.NAT)

    @classmethod
    def unrestricted(cls, carrier: Carrier = Carrier.IDENT) -> "VariableSystem":
        return cls(Flavor.UNRESTRICTED, carrier)

    @property
    def is_debruijn(self) -> bool:
        return self.flavor is Flavor.DEBRUIJN

    def widen(self) -> "VariableSystem":
        """The unrestricted provider over the same carrier."""
        return VariableSystem(Flavor.UNRESTRICTED, self.carrier)

    def in_carrier(self, x: object) -> bool:
        if self.carrier is Carrier.NAT:
            return isinstance(x, int) and not isinstance(x, bool) and x >= 1
        return is_identifier(x)

    def pick(
        self, used: AbstractSet[Variable], avoid: AbstractSet[object] = frozenset()
    ) -> Variable:
        if self.carrier is Carrier.NAT:
            if self.flavor is Flavor.DEBRUIJN:
                return max([1] + [x + 1 for x in used if isinstance(x, int)])
            for n in count(1):
                if n not in used and n not in avoid:
                    return n
        for name in identifiers():
            if name not in used and name not in avoid:
                return name
        raise AssertionError("unreachable")  # pragma: no cover

    def provides(
        self, x: Variable, used: AbstractSet[Variable], avoid: AbstractSet[object] = frozenset()
    ) -> bool:
        if not self.in_carrier(x) or x in avoid:
            return False
        if self.flavor is Flavor.DEBRUIJN:
            return x == self.pick(used)
        return x not in used

    def sequence(self, n: int, avoid: AbstractSet[object] = frozenset()) -> Tuple[Variable, ...]:
        """The canonical fresh sequence sigma(0), ..., sigma(n-1).

        ``sigma(k) = pick({sigma(0), ..., sigma(k-1)})``.
        """
        chosen: list = []
        for _ in range(n):
            chosen.append(self.pick(frozenset(chosen), avoid))
        return tuple(chosen)

    def provide_sample(self, used: AbstractSet[Variable], limit: int = 3) -> FrozenSet[Variable]:
        """A finite sample of ``provide(used)``; exact for the de Bruijn flavor."""
        if self.flavor is Flavor.DEBRUIJN:
            return frozenset({self.pick(used)})
        taken = set(used)
        sample = []
        for _ in range(limit):
            x = self.pick(taken)
            sample.append(x)
            taken.add(x)
        return frozenset(sample)
