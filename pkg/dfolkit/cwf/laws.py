"""Generic law checks for any :class:`~dfolkit.cwf.base.CwF` instance.

Each check runs over a :class:`CwFSample` and returns a :class:`LawReport`
counting the instances examined and describing every failure. A construction
that raises :class:`~dfolkit.exceptions.KernelError` on well-typed sample data
counts as a failure.

Finite-set samples come in two flavors. The full one takes every subset of
``0..size-1`` as a context and as a fiber. The representative one takes the
prefixes ``{0, ..., k-1}`` only and puts the innermost map of each equation
in nondecreasing form. Every finite-set operation commutes with relabeling
elements, so both cover the same equations; the second stays tractable at
size 3.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import (
    Any,
    Callable,
    DefaultDict,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from dfolkit.cwf.base import CwF
from dfolkit.cwf.constructions import INL, INR, Constructions
from dfolkit.cwf.finset import FinMorphism, FinObject, FinSetCwF, FinType
from dfolkit.exceptions import KernelError

logger = logging.getLogger(__name__)


@dataclass
class LawReport:
    law: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, holds: Callable[[], bool], describe: Callable[[], str]) -> None:
        self.checked += 1
        try:
            if holds():
                return
            self.failures.append(describe())
        except KernelError as e:
            self.failures.append(f"{describe()}: {e}")

    def to_dict(self) -> dict:
        return {"law": self.law, "checked": self.checked, "failures": list(self.failures)}


@dataclass(frozen=True)
class CwFSample:
    """Finite slices of the four sorts.

    ``between`` enumerates maps ``Δ -> Γ`` for objects outside ``objects``
    (comprehensions); without it only ``morphisms`` are searched. ``inner``
    holds the maps tried in the innermost position of a composite; it
    defaults to ``morphisms``. Lookups are grouped by context on first use,
    so a sample belongs to the cwf it was first queried with.
    """

    objects: Sequence[Any]
    morphisms: Sequence[Any]
    types: Sequence[Any]
    terms: Sequence[Any]
    between: Optional[Callable[[Any, Any], Iterable[Any]]] = None
    inner: Optional[Sequence[Any]] = None
    _index: Dict[str, Dict[Any, List[Any]]] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def _grouped(
        self, name: str, items: Iterable[Any], key: Callable[[Any], Any]
    ) -> Dict[Any, List[Any]]:
        if name not in self._index:
            groups: DefaultDict[Any, List[Any]] = defaultdict(list)
            for x in items:
                groups[key(x)].append(x)
            self._index[name] = dict(groups)
        return self._index[name]

    def hom(self, cwf: CwF, source: Any, target: Any) -> List[Any]:
        if self.between is not None:
            return list(self.between(source, target))
        homs = self._grouped("hom", self.morphisms, lambda f: (cwf.dom(f), cwf.cod(f)))
        return homs.get((source, target), [])

    def into(self, cwf: CwF, target: Any) -> List[Any]:
        return self._grouped("into", self.morphisms, cwf.cod).get(target, [])

    def inner_into(self, cwf: CwF, target: Any) -> List[Any]:
        maps = self.morphisms if self.inner is None else self.inner
        return self._grouped("inner", maps, cwf.cod).get(target, [])

    def types_over(self, cwf: CwF, G: Any) -> List[Any]:
        return self._grouped("types", self.types, cwf.type_context).get(G, [])

    def terms_over(self, cwf: CwF, G: Any) -> List[Any]:
        return self._grouped("terms over", self.terms, cwf.term_context).get(G, [])

    def terms_of(self, cwf: CwF, A: Any) -> List[Any]:
        return self._grouped("terms", self.terms, cwf.term_type).get(A, [])


def _composable(cwf: CwF, sample: CwFSample) -> Iterator[Tuple[Any, Any]]:
    for f in sample.morphisms:
        for g in sample.inner_into(cwf, cwf.dom(f)):
            yield f, g


def category_laws(cwf: CwF, sample: CwFSample) -> List[LawReport]:
    unit = LawReport("identity")
    assoc = LawReport("associativity")
    for f in sample.morphisms:
        unit.check(
            lambda: cwf.compose(cwf.identity(cwf.cod(f)), f) == f
            and cwf.compose(f, cwf.identity(cwf.dom(f))) == f,
            lambda: f"1 o {f} or {f} o 1",
        )
    for f in sample.morphisms:
        for g in sample.into(cwf, cwf.dom(f)):
            fg = cwf.compose(f, g)
            for h in sample.inner_into(cwf, cwf.dom(g)):
                assoc.check(
                    lambda: cwf.compose(fg, h) == cwf.compose(f, cwf.compose(g, h)),
                    lambda: f"({f} o {g}) o {h}",
                )
    return [unit, assoc]


def terminal_law(cwf: CwF, sample: CwFSample) -> LawReport:
    report = LawReport("terminal")
    top = cwf.terminal()
    for G in sample.objects:
        for f in sample.hom(cwf, G, top):
            report.check(lambda: f == cwf.bang(G), lambda: f"{f} differs from the bang of {G}")
    return report


def substitution_laws(cwf: CwF, sample: CwFSample) -> List[LawReport]:
    types = LawReport("type substitution")
    terms = LawReport("term substitution")
    for A in sample.types:
        one = cwf.identity(cwf.type_context(A))
        types.check(lambda: cwf.ty_subst(A, one) == A, lambda: f"{A}{{1}}")
    for a in sample.terms:
        one = cwf.identity(cwf.term_context(a))
        terms.check(lambda: cwf.tm_subst(a, one) == a, lambda: f"{a}{{1}}")
    for f, g in _composable(cwf, sample):
        fg = cwf.compose(f, g)
        for A in sample.types_over(cwf, cwf.cod(f)):
            types.check(
                lambda: cwf.ty_subst(A, fg) == cwf.ty_subst(cwf.ty_subst(A, f), g),
                lambda: f"{A}{{{f} o {g}}}",
            )
        for a in sample.terms_over(cwf, cwf.cod(f)):
            terms.check(
                lambda: cwf.tm_subst(a, fg) == cwf.tm_subst(cwf.tm_subst(a, f), g),
                lambda: f"{a}{{{f} o {g}}}",
            )
    return [types, terms]


def comprehension_laws(cwf: CwF, sample: CwFSample) -> List[LawReport]:
    """``p o <f,a> = f``, ``v{<f,a>} = a``, ``<f,a> o g = <f o g, a{g}>``, ``<p o h, v{h}> = h``."""
    beta_p = LawReport("projection")
    beta_v = LawReport("generic term")
    natural = LawReport("pairing naturality")
    eta = LawReport("pairing uniqueness")
    for f in sample.morphisms:
        under = sample.inner_into(cwf, cwf.dom(f))
        for A in sample.types_over(cwf, cwf.cod(f)):
            p, v = cwf.proj(A), cwf.var(A)
            for a in sample.terms_of(cwf, cwf.ty_subst(A, f)):
                fa = cwf.pair(f, A, a)
                beta_p.check(lambda: cwf.compose(p, fa) == f, lambda: f"p o <{f}, {a}>")
                beta_v.check(lambda: cwf.tm_subst(v, fa) == a, lambda: f"v{{<{f}, {a}>}}")
                for g in under:
                    natural.check(
                        lambda: cwf.compose(fa, g)
                        == cwf.pair(cwf.compose(f, g), A, cwf.tm_subst(a, g)),
                        lambda: f"<{f}, {a}> o {g}",
                    )
    for A in sample.types:
        GA = cwf.comprehend(A)
        p, v = cwf.proj(A), cwf.var(A)
        for D in sample.objects:
            for h in sample.hom(cwf, D, GA):
                eta.check(
                    lambda: cwf.pair(cwf.compose(p, h), A, cwf.tm_subst(v, h)) == h,
                    lambda: f"<p o {h}, v{{{h}}}>",
                )
    return [beta_p, beta_v, natural, eta]


def q_laws(cwf: CwF, sample: CwFSample) -> LawReport:
    """``1.S = 1`` and ``(f o g).S = (f.S) o (g.S{f})``."""
    report = LawReport("q functoriality")
    for S in sample.types:
        report.check(
            lambda: cwf.q(cwf.identity(cwf.type_context(S)), S) == cwf.identity(cwf.comprehend(S)),
            lambda: f"1.{S}",
        )
    for f, g in _composable(cwf, sample):
        fg = cwf.compose(f, g)
        for S in sample.types_over(cwf, cwf.cod(f)):
            report.check(
                lambda: cwf.q(fg, S) == cwf.compose(cwf.q(f, S), cwf.q(g, cwf.ty_subst(S, f))),
                lambda: f"({f} o {g}).{S}",
            )
    return report


def q_pullback(cwf: FinSetCwF, sample: CwFSample) -> LawReport:
    """Every q-square is a pullback.

    Cones are enumerated from the one-point set: each pair ``(δ, (γ, s))`` with
    ``f(δ) = γ`` must have exactly one element of ``Δ.S{f}`` over it.
    """
    report = LawReport("q pullback")
    for f in sample.morphisms:
        for S in sample.types_over(cwf, cwf.cod(f)):
            q = cwf.q(f, S)
            Sf = cwf.ty_subst(S, f)
            p = cwf.proj(Sf)
            apex = cwf.comprehend(Sf)
            for d in f.dom:
                for gs in cwf.comprehend(S):
                    if gs[0] != f(d):
                        continue
                    report.check(
                        lambda: sum(1 for e in apex if p(e) == d and q(e) == gs) == 1,
                        lambda: f"cone ({d}, {gs}) over {f} and {S}",
                    )
    return report


def run_cwf_laws(cwf: CwF, sample: CwFSample) -> List[LawReport]:
    reports = category_laws(cwf, sample)
    reports.append(terminal_law(cwf, sample))
    reports.extend(substitution_laws(cwf, sample))
    reports.extend(comprehension_laws(cwf, sample))
    reports.append(q_laws(cwf, sample))
    if isinstance(cwf, FinSetCwF):
        reports.append(q_pullback(cwf, sample))
    for r in reports:
        logger.debug("%s: %d checked, %d failed", r.law, r.checked, len(r.failures))
    return reports


def _contexts(cwf: FinSetCwF, size: int, representatives: bool) -> List[FinObject]:
    universe = range(size)
    found = cwf.representative_objects(universe) if representatives else cwf.all_objects(universe)
    objects: List[FinObject] = list(found)
    if cwf.terminal() not in objects:
        objects.append(cwf.terminal())
    return objects


def finset_sample(cwf: FinSetCwF, size: int, representatives: bool = False) -> CwFSample:
    """Every subset of ``0..size-1`` and the point, all maps between them,
    every family with fibers inside ``0..size-1`` and all of their sections.

    With ``representatives`` contexts and fibers are the prefixes of
    ``0..size-1`` and the inner maps are the nondecreasing ones.
    """
    universe = range(size)
    objects = _contexts(cwf, size, representatives)
    pairs = list(itertools.product(objects, repeat=2))
    morphisms = [f for D, G in pairs for f in cwf.all_morphisms(D, G)]
    inner = [f for D, G in pairs for f in cwf.monotone_morphisms(D, G)] if representatives else None
    types: List[FinType] = [
        A for G in objects for A in cwf.all_types(G, universe, representatives)
    ]
    terms = [a for A in types for a in cwf.all_sections(A)]
    logger.debug(
        "finset sample of size %d: %d objects, %d maps, %d types, %d terms",
        size,
        len(objects),
        len(morphisms),
        len(types),
        len(terms),
    )
    return CwFSample(objects, morphisms, types, terms, between=cwf.all_morphisms, inner=inner)


def _take(items: Iterable[Any], limit: int) -> List[Any]:
    return list(itertools.islice(items, limit))


def _spread(items: Sequence[Any], limit: int) -> List[Any]:
    """At most ``limit`` items, evenly spaced, first and last included."""
    if len(items) <= limit:
        return list(items)
    if limit < 2:
        return list(items[:limit])
    step = (len(items) - 1) / (limit - 1)
    return [items[round(i * step)] for i in range(limit)]


CONSTRUCTION_LAWS = (
    "N_k substitution",
    "N_k conversion",
    "Σ substitution",
    "Σ conversion",
    "Π substitution",
    "Π conversion",
    "Π uniqueness",
    "+ substitution",
    "+ conversion",
    "pair and unpair",
)


def _finite_type_laws(
    cons: Constructions,
    G: FinObject,
    into: List[FinMorphism],
    size: int,
    representatives: bool,
    limit: int,
    reports: Dict[str, LawReport],
) -> None:
    cwf = cons.cwf
    subst, conv = reports["N_k substitution"], reports["N_k conversion"]
    for k in range(size + 1):
        N = cons.nk(G, k)
        for f in into:
            subst.check(lambda: cwf.ty_subst(N, f) == cons.nk(f.dom, k), lambda: f"N_{k}{{{f}}}")
            for i in range(k):
                subst.check(
                    lambda: cwf.tm_subst(cons.ik(G, k, i), f) == cons.ik(f.dom, k, i),
                    lambda: f"{i}_{k}{{{f}}}",
                )
        motives = cwf.all_types(cwf.comprehend(N), range(size), representatives)
        for C in _take(motives, limit):
            choices = [
                list(cwf.all_sections(cwf.ty_subst(C, cons.point(cons.ik(G, k, i)))))
                for i in range(k)
            ]
            for branches in _take(itertools.product(*choices), limit):
                for i in range(k):
                    conv.check(
                        lambda: cons.rk(C, branches, cons.ik(G, k, i)) == branches[i],
                        lambda: f"R_{k}(C, ..., {i}_{k}) over {G}",
                    )


def _dependent_laws(
    cons: Constructions,
    A: FinType,
    into: List[FinMorphism],
    size: int,
    representatives: bool,
    limit: int,
    reports: Dict[str, LawReport],
) -> None:
    """Σ and Π over ``A`` with ``limit`` families ``B`` over ``Γ.A``."""
    cwf = cons.cwf
    universe = range(size)
    sections_A = list(cwf.all_sections(A))
    p = cwf.proj(A)
    for B in _take(cwf.all_types(cwf.comprehend(A), universe, representatives), limit):
        S = cons.sigma(A, B)
        P = cons.pi(A, B)
        for f in into:
            Af, Bq = cwf.ty_subst(A, f), cwf.ty_subst(B, cwf.q(f, A))
            reports["Σ substitution"].check(
                lambda: cwf.ty_subst(S, f) == cons.sigma(Af, Bq), lambda: f"Σ{{{f}}}"
            )
            reports["Π substitution"].check(
                lambda: cwf.ty_subst(P, f) == cons.pi(Af, Bq), lambda: f"Π{{{f}}}"
            )
        for a in sections_A:
            for b in _take(cwf.all_sections(cwf.ty_subst(B, cons.point(a))), limit):
                z = cons.pair_sigma(A, B, a, b)
                for f in into:
                    reports["Σ substitution"].check(
                        lambda: cwf.tm_subst(z, f)
                        == cons.pair_sigma(
                            cwf.ty_subst(A, f),
                            cwf.ty_subst(B, cwf.q(f, A)),
                            cwf.tm_subst(a, f),
                            cwf.tm_subst(b, f),
                        ),
                        lambda: f"Pair({a}, {b}){{{f}}}",
                    )
                for C in _take(cwf.all_types(cwf.comprehend(S), universe, representatives), limit):
                    motive = cwf.family(
                        cwf.comprehend(B),
                        lambda e, C=C: C.fiber((e[0][0], (e[0][1], e[1]))),
                    )
                    for c in _take(cwf.all_sections(motive), limit):
                        reports["Σ conversion"].check(
                            lambda: cons.split(A, B, C, c, z).values
                            == cwf.tm_subst(c, cwf.pair(cons.point(a), B, b)).values,
                            lambda: f"E(C, {c}, Pair({a}, {b}))",
                        )
        for b in _take(cwf.all_sections(B), limit):
            lam = cons.lam(A, b)
            for a in sections_A:
                reports["Π conversion"].check(
                    lambda: cons.app(A, B, lam, a) == cwf.tm_subst(b, cons.point(a)),
                    lambda: f"App(λ({b}), {a})",
                )
            for f in into:
                reports["Π substitution"].check(
                    lambda: cwf.tm_subst(lam, f)
                    == cons.lam(cwf.ty_subst(A, f), cwf.tm_subst(b, cwf.q(f, A))),
                    lambda: f"λ({b}){{{f}}}",
                )
        Ap, Bp = cwf.ty_subst(A, p), cwf.ty_subst(B, cwf.q(p, A))
        for c in _take(cwf.all_sections(P), limit):
            reports["Π uniqueness"].check(
                lambda: cons.lam(A, cons.app(Ap, Bp, cwf.tm_subst(c, p), cwf.var(A))) == c,
                lambda: f"λ(App({c}{{p}}, v))",
            )


def _binary_laws(
    cons: Constructions,
    types: List[FinType],
    into: List[FinMorphism],
    size: int,
    representatives: bool,
    limit: int,
    reports: Dict[str, LawReport],
) -> None:
    """``+`` and ``×`` over one context.

    The type equation of ``+`` runs over every pair of families; injections,
    eliminations and pairing pair each family with ``limit`` spread partners.
    """
    cwf = cons.cwf
    universe = range(size)
    subst, conv, products = (
        reports["+ substitution"],
        reports["+ conversion"],
        reports["pair and unpair"],
    )
    for A, B in itertools.product(types, repeat=2):
        E = cons.plus(A, B)
        for f in into:
            subst.check(
                lambda: cwf.ty_subst(E, f) == cons.plus(cwf.ty_subst(A, f), cwf.ty_subst(B, f)),
                lambda: f"+{{{f}}}",
            )
    partners = _spread(types, limit)
    for A in types:
        sections_A = list(cwf.all_sections(A))
        for B in partners:
            sections_B = list(cwf.all_sections(B))
            for f in into:
                for a in sections_A:
                    subst.check(
                        lambda: cwf.tm_subst(cons.inl(a, B), f)
                        == cons.inl(cwf.tm_subst(a, f), cwf.ty_subst(B, f)),
                        lambda: f"inl({a}){{{f}}}",
                    )
                for b in sections_B:
                    subst.check(
                        lambda: cwf.tm_subst(cons.inr(A, b), f)
                        == cons.inr(cwf.ty_subst(A, f), cwf.tm_subst(b, f)),
                        lambda: f"inr({b}){{{f}}}",
                    )
            E = cons.plus(A, B)
            for C in _take(cwf.all_types(cwf.comprehend(E), universe, representatives), limit):
                left = cwf.family(cwf.comprehend(A), lambda e, C=C: C.fiber((e[0], (INL, e[1]))))
                right = cwf.family(cwf.comprehend(B), lambda e, C=C: C.fiber((e[0], (INR, e[1]))))
                branches = itertools.product(cwf.all_sections(left), cwf.all_sections(right))
                for d, e in _take(branches, limit):
                    for a in sections_A:
                        conv.check(
                            lambda: cons.case(A, B, C, d, e, cons.inl(a, B)).values
                            == cwf.tm_subst(d, cons.point(a)).values,
                            lambda: f"D(C, {d}, {e}, inl({a}))",
                        )
                    for b in sections_B:
                        conv.check(
                            lambda: cons.case(A, B, C, d, e, cons.inr(A, b)).values
                            == cwf.tm_subst(e, cons.point(b)).values,
                            lambda: f"D(C, {d}, {e}, inr({b}))",
                        )
            for a, b in itertools.product(sections_A, sections_B):
                products.check(
                    lambda: cons.unpair(A, B, cons.pair(a, b)) == (a, b),
                    lambda: f"unpair(pair({a}, {b}))",
                )
            for z in cwf.all_sections(cons.product(A, B)):
                products.check(
                    lambda: cons.pair(*cons.unpair(A, B, z)) == z, lambda: f"pair(unpair({z}))"
                )


def construction_laws(
    cons: Constructions, size: int, limit: int = 4, representatives: bool = False
) -> List[LawReport]:
    """Substitution and conversion equations of N_k, Σ, Π, + and binary products.

    Contexts are every subset of ``0..size-1`` plus the point, or their
    prefixes with ``representatives``. Each context is checked on its own:
    its families, their sections and the maps into it. Families over a
    comprehension, eliminator motives and their branches are cut off after
    ``limit`` each. Conversions compare tabulated values.
    """
    cwf = cons.cwf
    universe = range(size)
    contexts = _contexts(cwf, size, representatives)
    maps = cwf.monotone_morphisms if representatives else cwf.all_morphisms
    reports = {law: LawReport(law) for law in CONSTRUCTION_LAWS}
    for G in contexts:
        into = [f for D in contexts for f in maps(D, G)]
        types = list(cwf.all_types(G, universe, representatives))
        logger.debug("constructions over %s: %d maps in, %d families", G, len(into), len(types))
        _finite_type_laws(cons, G, into, size, representatives, limit, reports)
        for A in types:
            _dependent_laws(cons, A, into, size, representatives, limit, reports)
        _binary_laws(cons, types, into, size, representatives, limit, reports)
    for r in reports.values():
        logger.debug("%s: %d checked, %d failed", r.law, r.checked, len(r.failures))
    return list(reports.values())
