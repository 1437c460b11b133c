"""FOLDS vocabularies: finite one-way skeletal categories given by a composition table."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Sequence, Tuple

from dfolkit.exceptions import VocabularyError

logger = logging.getLogger(__name__)


def identity_name(obj: str) -> str:
    return f"(id {obj})"


@dataclass(frozen=True)
class Arrow:
    name: str
    dom: str
    cod: str
    identity: bool = False

    def __str__(self) -> str:
        if self.identity:
            return self.name
        return f"{self.name}: {self.dom} -> {self.cod}"


@dataclass(frozen=True)
class Equation:
    """``g . f = h``; ``h`` may name an identity as ``(id X)``."""

    g: str
    f: str
    h: str


@dataclass(frozen=True)
class RawVocabulary:
    """Unvalidated input: objects, arrows and a composition table."""

    name: str
    objects: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    equations: Tuple[Equation, ...] = ()


@dataclass(frozen=True)
class Vocabulary:
    """A validated vocabulary.

    ``table`` maps every composable pair ``(g, f)`` of non-identity arrows to the
    name of ``g . f``; composites with identities are implicit.
    """

    name: str
    objects: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    table: Mapping[Tuple[str, str], str] = field(default_factory=dict)

    @cached_property
    def _by_name(self) -> Dict[str, Arrow]:
        found = {a.name: a for a in self.arrows}
        for obj in self.objects:
            found[identity_name(obj)] = Arrow(identity_name(obj), obj, obj, identity=True)
        return found

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise VocabularyError(f"unknown arrow {name}", law="structure") from None

    def identity(self, obj: str) -> Arrow:
        self._require_object(obj)
        return self._by_name[identity_name(obj)]

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        """``g . f`` for ``f: A -> B`` and ``g: B -> C``."""
        if f.cod != g.dom:
            raise VocabularyError(f"{g.name} . {f.name} is not composable", law="structure")
        if f.identity:
            return g
        if g.identity:
            return f
        return self.arrow(self.table[(g.name, f.name)])

    def hom(self, source: str, target: str) -> Tuple[Arrow, ...]:
        self._require_object(source)
        self._require_object(target)
        found = tuple(a for a in self.arrows if a.dom == source and a.cod == target)
        if source == target:
            return (self.identity(source),) + found
        return found

    def out_of(self, obj: str) -> Tuple[Arrow, ...]:
        """Non-identity arrows with domain ``obj``, in input order."""
        self._require_object(obj)
        return tuple(a for a in self.arrows if a.dom == obj)

    def le(self, a: str, b: str) -> bool:
        """``a <= b``: there is an arrow ``b -> a``."""
        return bool(self.hom(b, a))

    @cached_property
    def level_order(self) -> Tuple[str, ...]:
        """A linear extension of ``le``: stable topological sort, smallest first."""
        remaining = list(self.objects)
        ordered: List[str] = []
        while remaining:
            for obj in remaining:
                if all(other == obj or not self.le(other, obj) for other in remaining):
                    ordered.append(obj)
                    remaining.remove(obj)
                    break
            else:  # pragma: no cover - excluded by validation
                raise VocabularyError("reachability order has a cycle", law="one-way")
        return tuple(ordered)

    def rank(self, obj: str) -> int:
        return self.level_order.index(obj)

    def enumeration(self, obj: str) -> Tuple[Arrow, ...]:
        """x^obj_1, ..., x^obj_n: arrows out of ``obj`` by (codomain rank, input order)."""
        position = {a.name: k for k, a in enumerate(self.arrows)}
        return tuple(
            sorted(self.out_of(obj), key=lambda a: (self.rank(a.cod), position[a.name]))
        )

    def irreducible(self, obj: str) -> Tuple[Arrow, ...]:
        """Arrows out of ``obj`` that are not ``g . h`` with both factors non-identity."""
        reducible = {
            self.table[(g.name, h.name)]
            for h in self.out_of(obj)
            for g in self.out_of(h.cod)
        }
        return tuple(a for a in self.out_of(obj) if a.name not in reducible)

    def to_raw(self) -> RawVocabulary:
        equations = tuple(Equation(g, f, h) for (g, f), h in self.table.items())
        return RawVocabulary(self.name, self.objects, self.arrows, equations)

    def _require_object(self, obj: str) -> None:
        if obj not in self.objects:
            raise VocabularyError(f"unknown object {obj}", law="structure")


def _structure(raw: RawVocabulary) -> Dict[Tuple[str, str], str]:
    objects = set(raw.objects)
    if len(objects) != len(raw.objects):
        raise VocabularyError("an object is listed twice", law="structure")
    names: Dict[str, Arrow] = {}
    for k, a in enumerate(raw.arrows, start=1):
        if a.name in names or a.name in objects:
            raise VocabularyError(f"arrow name {a.name} is used twice", law="structure", path=(k,))
        if a.dom not in objects or a.cod not in objects:
            raise VocabularyError(f"arrow {a.name} has an unknown end", law="structure", path=(k,))
        names[a.name] = a
    for obj in raw.objects:
        names[identity_name(obj)] = Arrow(identity_name(obj), obj, obj, identity=True)

    table: Dict[Tuple[str, str], str] = {}
    for k, eq in enumerate(raw.equations, start=1):
        g, f, h = (names.get(n) for n in (eq.g, eq.f, eq.h))
        if g is None or f is None or h is None or g.identity or f.identity:
            raise VocabularyError(
                f"equation {eq.g} . {eq.f} = {eq.h} names an unknown or identity operand",
                law="structure",
                path=(k,),
            )
        if f.cod != g.dom or h.dom != f.dom or h.cod != g.cod:
            raise VocabularyError(
                f"equation {eq.g} . {eq.f} = {eq.h} is ill-typed", law="structure", path=(k,)
            )
        previous = table.setdefault((g.name, f.name), h.name)
        if previous != h.name:
            raise VocabularyError(
                f"{g.name} . {f.name} is given as both {previous} and {h.name}",
                law="structure",
                path=(k,),
            )
    for f in raw.arrows:
        for g in raw.arrows:
            if f.cod == g.dom and (g.name, f.name) not in table:
                raise VocabularyError(
                    f"composite {g.name} . {f.name} is missing from the table", law="structure"
                )
    return table


def validate_vocabulary(raw: RawVocabulary) -> Vocabulary:
    """Check the category laws and the FOLDS conditions, in that order.

    Raises:
        VocabularyError: naming the first violated law: ``structure``,
            ``associativity``, ``one-way`` or ``skeletal``
    """
    table = _structure(raw)
    candidate = Vocabulary(raw.name, tuple(raw.objects), tuple(raw.arrows), table)

    for f in raw.arrows:
        for g in candidate.out_of(f.cod):
            gf = candidate.compose(g, f)
            for h in candidate.out_of(g.cod):
                if candidate.compose(h, gf) != candidate.compose(candidate.compose(h, g), f):
                    raise VocabularyError(
                        f"({h.name} . {g.name}) . {f.name} differs from "
                        f"{h.name} . ({g.name} . {f.name})",
                        law="associativity",
                    )
    for a in raw.arrows:
        if a.dom == a.cod:
            raise VocabularyError(f"{a.name} is a non-identity endomorphism", law="one-way")
    for f in raw.arrows:
        for g in raw.arrows:
            if f.cod == g.dom and g.cod == f.dom:
                raise VocabularyError(
                    f"{f.name} and {g.name} are mutually inverse", law="skeletal"
                )
    logger.debug(
        "vocabulary %s: %d objects, %d arrows", raw.name, len(raw.objects), len(raw.arrows)
    )
    return candidate


def discrete_vocabulary(name: str, objects: Sequence[str]) -> Vocabulary:
    return validate_vocabulary(RawVocabulary(name, tuple(objects), ()))

