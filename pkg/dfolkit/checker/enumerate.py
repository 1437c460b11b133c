"""Bounded forward enumeration of derivable judgements.

Judgements are generated level by level: round ``h`` applies every rule to
premises found in earlier rounds, so each judgement is recorded with the height
of its derivation. Extended contexts always use the canonical fresh variable,
which keeps the enumeration finite for any height bound.
"""

import logging
from collections import defaultdict
from typing import DefaultDict, Dict, Iterator, List, Tuple, Union

from dfolkit.checker.judgements import HasType, IsContext, IsType, Judgement, Mode
from dfolkit.checker.kernel import Kernel
from dfolkit.signature.declarations import FunDecl, TypeDecl
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import App, PreContext, PreTerm, PreType, Var, subst

logger = logging.getLogger(__name__)

TermPool = DefaultDict[PreContext, DefaultDict[PreType, Dict[PreTerm, int]]]


class _Pool:
    def __init__(self) -> None:
        self.contexts: Dict[PreContext, int] = {}
        self.types: DefaultDict[PreContext, Dict[PreType, int]] = defaultdict(dict)
        self.terms: TermPool = defaultdict(lambda: defaultdict(dict))

    def snapshot(self) -> "_Pool":
        copy = _Pool()
        copy.contexts = dict(self.contexts)
        for ctx, types in self.types.items():
            copy.types[ctx] = dict(types)
        for ctx, by_type in self.terms.items():
            for A, terms in by_type.items():
                copy.terms[ctx][A] = dict(terms)
        return copy

    def judgements(self) -> Dict[Judgement, int]:
        found: Dict[Judgement, int] = {IsContext(c): h for c, h in self.contexts.items()}
        for ctx, types in self.types.items():
            found.update({IsType(ctx, A): h for A, h in types.items()})
        for ctx, by_type in self.terms.items():
            for A, terms in by_type.items():
                found.update({HasType(ctx, a, A): h for a, h in terms.items()})
        return found


def _maps(
    pool: _Pool, ctx: PreContext, target: PreContext
) -> Iterator[Tuple[Tuple[PreTerm, ...], int]]:
    """Every candidate map ``ctx -> target`` built from pooled terms, with its height."""

    def extend(
        k: int, chosen: List[PreTerm], height: int
    ) -> Iterator[Tuple[Tuple[PreTerm, ...], int]]:
        if k == len(target):
            yield tuple(chosen), height
            return
        A = subst(target.types[k], chosen, target.variables[:k])
        for a, h in pool.terms.get(ctx, {}).get(A, {}).items():
            yield from extend(k + 1, chosen + [a], max(height, h))

    yield from extend(0, [], 0)


def enumerate_judgements(
    sig: Signature, max_height: int, mode: Mode = Mode.R5
) -> Dict[Judgement, int]:
    """All judgements derivable with height at most ``max_height``.

    Returns:
        Each judgement mapped to the height of its derivation
    """
    kernel = Kernel(sig, mode=mode)
    homes: Dict[str, int] = {}
    decls: List[Union[TypeDecl, FunDecl]] = [
        d for d in sig if isinstance(d, (TypeDecl, FunDecl))
    ]
    for decl in decls:
        homes[decl.symbol] = kernel.check_context(decl.context).height

    pool = _Pool()
    pool.contexts[PreContext()] = 0
    for h in range(1, max_height + 1):
        before = pool.snapshot()
        for ctx, hc in before.contexts.items():
            for A, ht in before.types.get(ctx, {}).items():
                extended = ctx.extend(sig.fresh(ctx), A)
                pool.contexts.setdefault(extended, 1 + max(hc, ht))
            for x, A in ctx.entries:
                pool.terms[ctx][A].setdefault(Var(x), 1 + hc)
            for decl in decls:
                if homes[decl.symbol] >= h:
                    continue
                for terms, hm in _maps(before, ctx, decl.context):
                    explicit = tuple(terms[i - 1] for i in decl.positions)
                    premises = max(hc, homes[decl.symbol], hm)
                    if isinstance(decl, TypeDecl):
                        pool.types[ctx].setdefault(PreType(decl.symbol, explicit), 1 + premises)
                        continue
                    U = subst(decl.result, terms, decl.context.variables)
                    if mode is Mode.R5:
                        hu = before.types.get(ctx, {}).get(U)
                        if hu is None:
                            continue
                        premises = max(premises, hu)
                    pool.terms[ctx][U].setdefault(App(decl.symbol, explicit), 1 + premises)
        logger.debug("height %d: %d contexts", h, len(pool.contexts))
    return pool.judgements()
