"""Law checks for hyperdoctrines over a finite sample of their base cwf.

All comparisons go through ``≡`` (``≤`` both ways), since the fibers are only
prealgebras. Elements are enumerated with :meth:`Hyperdoctrine.elements`, so
the suites apply to doctrines with finite fibers.
"""

import itertools
import logging
from typing import Any, Iterable, List

from dfolkit.cwf.laws import CwFSample, LawReport
from dfolkit.doctrine.base import Hyperdoctrine
from dfolkit.doctrine.heyting import HeytingPrealgebra
from dfolkit.doctrine.horn import HornDoctrine

logger = logging.getLogger(__name__)


def heyting_laws(algebra: HeytingPrealgebra, elements: Iterable[Any]) -> List[LawReport]:
    """Preorder, bounds, meet, join and implication over ``elements``."""
    xs = list(elements)
    preorder = LawReport("preorder")
    bounds = LawReport("top and bottom")
    meet = LawReport("meet")
    join = LawReport("join")
    imp = LawReport("implication")
    A = algebra
    for x in xs:
        preorder.check(lambda: A.le(x, x), lambda: f"{x} <= {x}")
        bounds.check(lambda: A.le(x, A.top()) and A.le(A.bot(), x), lambda: f"bot <= {x} <= top")
    for x, y, z in itertools.product(xs, repeat=3):
        preorder.check(
            lambda: not (A.le(x, y) and A.le(y, z)) or A.le(x, z),
            lambda: f"{x} <= {y} <= {z}",
        )
        meet.check(
            lambda: A.le(z, A.meet(x, y)) == (A.le(z, x) and A.le(z, y)),
            lambda: f"{z} <= {x} and {y}",
        )
        join.check(
            lambda: A.le(A.join(x, y), z) == (A.le(x, z) and A.le(y, z)),
            lambda: f"{x} or {y} <= {z}",
        )
        imp.check(
            lambda: A.le(z, A.imp(x, y)) == A.le(A.meet(z, x), y),
            lambda: f"{z} <= {x} -> {y}",
        )
    return [preorder, bounds, meet, join, imp]


def fiber_laws(D: Hyperdoctrine, sample: CwFSample) -> List[LawReport]:
    reports: List[LawReport] = []
    for G in sample.objects:
        for report in heyting_laws(D.fiber(G), D.elements(G)):
            report.law = f"{report.law} at {G}"
            reports.append(report)
    return reports


def substitution_laws(D: Hyperdoctrine, sample: CwFSample) -> List[LawReport]:
    """``(-){f}`` is monotone and preserves every operation up to ``≡``."""
    monotone = LawReport("substitution is monotone")
    preserves = LawReport("substitution preserves connectives")
    C = D.base
    for f in sample.morphisms:
        G, Delta = C.cod(f), C.dom(f)
        preserves.check(
            lambda: D.equiv(D.subst(D.top(G), f), D.top(Delta))
            and D.equiv(D.subst(D.bot(G), f), D.bot(Delta)),
            lambda: f"top and bot along {f}",
        )
        elements = list(D.elements(G))
        for x, y in itertools.product(elements, repeat=2):
            xf, yf = D.subst(x, f), D.subst(y, f)
            monotone.check(lambda: not D.le(x, y) or D.le(xf, yf), lambda: f"{x} <= {y} along {f}")
            for op in (D.conj, D.disj, D.imp):
                preserves.check(
                    lambda: D.equiv(D.subst(op(x, y), f), op(xf, yf)),
                    lambda: f"{op.__name__}({x}, {y}) along {f}",
                )
    return [monotone, preserves]


def adjunction_laws(D: Hyperdoctrine, sample: CwFSample) -> List[LawReport]:
    """``∃_S ⊣ (-){p(S)} ⊣ ∀_S`` on every sampled type."""
    universal = LawReport("forall is right adjoint to weakening")
    existential = LawReport("exists is left adjoint to weakening")
    C = D.base
    for S in sample.types:
        G = C.type_context(S)
        p = C.proj(S)
        ups = list(D.elements(C.comprehend(S)))
        for q in D.elements(G):
            qp = D.subst(q, p)
            for r in ups:
                universal.check(
                    lambda: D.le(qp, r) == D.le(q, D.forall(S, r)),
                    lambda: f"{q}{{p}} <= {r} over {S}",
                )
                existential.check(
                    lambda: D.le(D.exists(S, r), q) == D.le(r, qp),
                    lambda: f"exists {r} <= {q} over {S}",
                )
    return [universal, existential]


def beck_chevalley_laws(D: Hyperdoctrine, sample: CwFSample) -> List[LawReport]:
    """``Q_S(r){f} ≡ Q_{S{f}}(r{q(f, S)})`` for both quantifiers."""
    reports = {
        True: LawReport("Beck-Chevalley for forall"),
        False: LawReport("Beck-Chevalley for exists"),
    }
    C = D.base
    for f in sample.morphisms:
        for S in sample.types_over(C, C.cod(f)):
            Sf = C.ty_subst(S, f)
            qf = C.q(f, S)
            for r in D.elements(C.comprehend(S)):
                for universal, report in reports.items():
                    quantify = D.forall if universal else D.exists
                    report.check(
                        lambda: D.equiv(D.subst(quantify(S, r), f), quantify(Sf, D.subst(r, qf))),
                        lambda: f"{r} over {S} along {f}",
                    )
    return list(reports.values())


def frobenius_law(D: Hyperdoctrine, sample: CwFSample) -> LawReport:
    """``∃_S(r ∧ q{p}) ≡ ∃_S(r) ∧ q``."""
    report = LawReport("Frobenius")
    C = D.base
    for S in sample.types:
        G = C.type_context(S)
        p = C.proj(S)
        ups = list(D.elements(C.comprehend(S)))
        for q in D.elements(G):
            qp = D.subst(q, p)
            for r in ups:
                report.check(
                    lambda: D.equiv(D.exists(S, D.conj(r, qp)), D.conj(D.exists(S, r), q)),
                    lambda: f"{r} and {q} over {S}",
                )
    return report


def horn_laws(H: HornDoctrine, sample: CwFSample, length: int = 1) -> List[LawReport]:
    """Top, meet up to ``≡`` and substitution in the Horn doctrine.

    Elements are the sequences of at most ``length`` sampled types.
    """
    top = LawReport("horn top")
    meet = LawReport("horn meet")
    monotone = LawReport("horn substitution is monotone")
    C = H.base
    for G in sample.objects:
        types = sample.types_over(C, G)
        xs = [
            H.element(G, *seq)
            for n in range(length + 1)
            for seq in itertools.product(types, repeat=n)
        ]
        for x in xs:
            top.check(lambda: H.le(x, H.top(G)), lambda: f"{x} <= <>")
        for x, y, z in itertools.product(xs, repeat=3):
            meet.check(
                lambda: H.le(z, H.conj(x, y)) == (H.le(z, x) and H.le(z, y)),
                lambda: f"{z} <= {x} and {y}",
            )
        for f in sample.morphisms:
            if C.cod(f) != G:
                continue
            for x, y in itertools.product(xs, repeat=2):
                monotone.check(
                    lambda: not H.le(x, y) or H.le(H.subst(x, f), H.subst(y, f)),
                    lambda: f"{x} <= {y} along {f}",
                )
    return [top, meet, monotone]


def run_doctrine_laws(
    D: Hyperdoctrine, sample: CwFSample, frobenius: bool = True
) -> List[LawReport]:
    reports = fiber_laws(D, sample)
    reports.extend(substitution_laws(D, sample))
    reports.extend(adjunction_laws(D, sample))
    reports.extend(beck_chevalley_laws(D, sample))
    if frobenius:
        reports.append(frobenius_law(D, sample))
    for r in reports:
        logger.debug("%s %s: %d checked, %d failed", D.name, r.law, r.checked, len(r.failures))
    return reports
