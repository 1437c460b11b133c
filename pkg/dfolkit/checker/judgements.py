"""Judgements, context maps and derivation trees."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Tuple, Union

from dfolkit.syntax.terms import PreContext, PreTerm, PreType


@dataclass(frozen=True)
class IsContext:
    context: PreContext

    def __str__(self) -> str:
        return f"(context {self.context})"


@dataclass(frozen=True)
class IsType:
    context: PreContext
    type: PreType

    def __str__(self) -> str:
        return f"(type {self.context} {self.type})"


@dataclass(frozen=True)
class HasType:
    context: PreContext
    term: PreTerm
    type: PreType

    def __str__(self) -> str:
        return f"(term {self.context} {self.term} {self.type})"


Judgement = Union[IsContext, IsType, HasType]


class Rule(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R5STAR = "R5*"


class Mode(str, Enum):
    """Which function-application rule the kernel uses."""

    R5 = "r5"
    R5STAR = "r5star"


@dataclass(frozen=True)
class Derivation:
    """A rule-tagged tree witnessing ``conclusion``.

    Premise order follows the rule displays: R2 is (Γ context, A type (Γ));
    R3 is (Γ context); R4 is (Δ context, Γ context, a1, ..., an) for a map
    ā: Δ → Γ; R5 appends the result-type premise to that list and R5* does
    not.
    """

    rule: Rule
    conclusion: Judgement
    premises: Tuple["Derivation", ...] = ()
    height: int = 0

    @classmethod
    def build(
        cls, rule: Rule, conclusion: Judgement, premises: Sequence["Derivation"] = ()
    ) -> "Derivation":
        premises = tuple(premises)
        height = 0 if rule is Rule.R1 else 1 + max((p.height for p in premises), default=0)
        return cls(rule, conclusion, premises, height)

    def walk(self) -> Iterator["Derivation"]:
        yield self
        for p in self.premises:
            yield from p.walk()

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "conclusion": str(self.conclusion),
            "height": self.height,
            "premises": [p.to_dict() for p in self.premises],
        }


@dataclass(frozen=True)
class ContextMap:
    """A candidate substitution ā: Δ → Γ."""

    source: PreContext
    target: PreContext
    terms: Tuple[PreTerm, ...]

    def __str__(self) -> str:
        return f"(map {self.source} {self.target} ({' '.join(str(t) for t in self.terms)}))"


@dataclass(frozen=True)
class CheckedMap:
    """A context map together with derivations of its n+2 judgements.

    ``components[k]`` derives ``a_k : A_k[a_1..a_{k-1}/x_1..x_{k-1}] (Δ)``.
    """

    map: ContextMap
    source_derivation: Derivation
    target_derivation: Derivation
    components: Tuple[Derivation, ...]

    @property
    def source(self) -> PreContext:
        return self.map.source

    @property
    def target(self) -> PreContext:
        return self.map.target

    @property
    def terms(self) -> Tuple[PreTerm, ...]:
        return self.map.terms

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(d.height for d in self.components)

    @property
    def height(self) -> int:
        """Largest height among the n+2 derivations."""
        return max(
            (self.source_derivation.height, self.target_derivation.height) + self.heights
        )

    def premises(self) -> Tuple[Derivation, ...]:
        return (self.source_derivation, self.target_derivation) + self.components
