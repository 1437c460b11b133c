"""Theories: a signature with predicates and a list of named axiom sequents."""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.formation import FormulaChecker
from dfolkit.dfol.formulas import Sequent
from dfolkit.dfol.standardize import standardize_sequent
from dfolkit.exceptions import KernelError, SignatureError
from dfolkit.signature.build import extend
from dfolkit.signature.declarations import Declaration
from dfolkit.signature.signature import Signature
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Theory:
    """A theory ``T`` over ``(Σ, Π)``.

    Axioms keep their insertion order; names are unique.
    """

    name: str
    signature: Signature
    axioms: Mapping[str, Sequent] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "axioms", MappingProxyType(dict(self.axioms)))

    def __iter__(self) -> Iterator[Tuple[str, Sequent]]:
        return iter(self.axioms.items())

    def __len__(self) -> int:
        return len(self.axioms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Theory):
            return NotImplemented
        return (
            self.name == other.name
            and self.signature == other.signature
            and list(self.axioms.items()) == list(other.axioms.items())
        )

    def __hash__(self) -> int:
        return hash((self.name, self.signature, tuple(self.axioms)))

    def axiom(self, name: str) -> Optional[Sequent]:
        return self.axioms.get(name)

    def validate(self, star: bool = False, fuel: int = DEFAULT_FUEL) -> None:
        """Check every axiom as a sequent.

        Raises:
            FormulaError: Located at the 1-based index of the failing axiom
        """
        checker = FormulaChecker(self.signature, star=star, fuel=fuel)
        for index, (name, seq) in enumerate(self.axioms.items(), start=1):
            try:
                checker.check_sequent(seq)
            except KernelError as e:
                logger.debug("axiom %s rejected: %s", name, e)
                raise e.at(index)

    def add_axiom(self, name: str, seq: Sequent, fuel: int = DEFAULT_FUEL) -> "Theory":
        if name in self.axioms:
            raise SignatureError(f"axiom {name} already declared", rule="axiom")
        FormulaChecker(self.signature, fuel=fuel).check_sequent(seq)
        return Theory(self.name, self.signature, {**self.axioms, name: seq})

    def extend(self, decl: Declaration, fuel: int = DEFAULT_FUEL) -> "Theory":
        return Theory(self.name, extend(self.signature, decl, fuel=fuel), self.axioms)

    def standardized(self, sigma: Optional[Sequence[Variable]] = None) -> "Theory":
        """``T^σ``: every axiom standardized in its own context."""
        axioms = {
            name: standardize_sequent(self.signature, seq, sigma) for name, seq in self
        }
        return Theory(self.name, self.signature, axioms)

    @property
    def on_standard_form(self) -> bool:
        """Every axiom is its own standardization."""
        return all(standardize_sequent(self.signature, seq) == seq for _, seq in self)


def build_theory(
    name: str,
    signature: Signature,
    axioms: Iterable[Tuple[str, Sequent]] = (),
    fuel: int = DEFAULT_FUEL,
) -> Theory:
    """Add the axioms one at a time, checking each.

    Raises:
        SignatureError: On a repeated axiom name
        FormulaError: If an axiom does not form a sequent
    """
    theory = Theory(name, signature)
    for index, (axiom_name, seq) in enumerate(axioms, start=1):
        try:
            theory = theory.add_axiom(axiom_name, seq, fuel=fuel)
        except KernelError as e:
            raise e.at(index)
    logger.debug("theory %s: %d axioms", name, len(theory))
    return theory