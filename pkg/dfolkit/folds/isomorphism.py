"""Exhaustive isomorphism search between small vocabularies."""

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Tuple

from dfolkit.folds.vocabulary import Arrow, Vocabulary


@dataclass(frozen=True)
class Isomorphism:
    objects: Dict[str, str]
    arrows: Dict[str, str]


def _profile(vocab: Vocabulary, obj: str) -> Tuple[int, int]:
    return (len(vocab.out_of(obj)), sum(1 for a in vocab.arrows if a.cod == obj))


def _object_maps(left: Vocabulary, right: Vocabulary) -> Iterator[Dict[str, str]]:
    for image in permutations(right.objects):
        mapping = dict(zip(left.objects, image))
        if any(_profile(left, a) != _profile(right, mapping[a]) for a in left.objects):
            continue
        if all(
            len(left.hom(a, b)) == len(right.hom(mapping[a], mapping[b]))
            for a in left.objects
            for b in left.objects
        ):
            yield mapping


def _respects_composition(
    left: Vocabulary, right: Vocabulary, arrows: Dict[str, str], f: Arrow
) -> bool:
    """Every table entry involving ``f`` whose three arrows are mapped is preserved."""
    for (g, h), gh in left.table.items():
        if f.name not in (g, h, gh) or not {g, h, gh} <= arrows.keys():
            continue
        if right.table[(arrows[g], arrows[h])] != arrows[gh]:
            return False
    return True


def _arrow_search(
    left: Vocabulary,
    right: Vocabulary,
    objects: Dict[str, str],
    pending: List[Arrow],
    arrows: Dict[str, str],
) -> Optional[Dict[str, str]]:
    if not pending:
        return dict(arrows)
    f, rest = pending[0], pending[1:]
    used = set(arrows.values())
    for candidate in right.hom(objects[f.dom], objects[f.cod]):
        if candidate.identity or candidate.name in used:
            continue
        arrows[f.name] = candidate.name
        if _respects_composition(left, right, arrows, f):
            found = _arrow_search(left, right, objects, rest, arrows)
            if found is not None:
                return found
        del arrows[f.name]
    return None


def find_isomorphism(left: Vocabulary, right: Vocabulary) -> Optional[Isomorphism]:
    """A bijection on objects and arrows preserving ends and composition, if one exists."""
    if len(left.objects) != len(right.objects) or len(left.arrows) != len(right.arrows):
        return None
    for objects in _object_maps(left, right):
        found = _arrow_search(left, right, objects, list(left.arrows), {})
        if found is not None:
            return Isomorphism(objects, found)
    return None


def isomorphic(left: Vocabulary, right: Vocabulary) -> bool:
    return find_isomorphism(left, right) is not None
