"""Hypothesis strategies for small signatures, terms, context maps and finite models."""

import functools

import hypothesis.strategies as strat

from dfolkit.checker.enumerate import enumerate_judgements
from dfolkit.checker.judgements import HasType, IsType
from dfolkit.signature.build import extend
from dfolkit.signature.declarations import FunDecl, PredDecl, TypeDecl
from dfolkit.signature.signature import empty_signature
from dfolkit.syntax.terms import App, PreContext, PreType, Var, subst

ARGUMENT_NAMES = ("x", "y")


def _fun(ctx: PreContext, symbol: str, result: PreType, positions=None) -> FunDecl:
    if positions is None:
        positions = tuple(range(1, len(ctx) + 1))
    return FunDecl(ctx, symbol, tuple(positions), result)


@strat.composite
def signatures(draw, max_bases: int = 2, max_funs: int = 3):
    """Inductive signatures of base sorts, one optional family ``T`` and a few functions.

    With the family present a function ``h`` hiding its first argument is
    added, so reconstruction is exercised.
    """
    sig = empty_signature()
    bases = [f"S{k}" for k in range(draw(strat.integers(1, max_bases)))]
    for S in bases:
        sig = extend(sig, TypeDecl(PreContext(), S, ()))

    family = None
    if draw(strat.booleans()):
        family = draw(strat.sampled_from(bases))
        sig = extend(sig, TypeDecl(PreContext.of(("x", PreType(family))), "T", (1,)))

    for k in range(draw(strat.integers(1, max_funs))):
        arity = draw(strat.integers(0, 2))
        dom = [draw(strat.sampled_from(bases)) for _ in range(arity)]
        ctx = PreContext(tuple((x, PreType(S)) for x, S in zip(ARGUMENT_NAMES, dom)))
        results = [PreType(S) for S in bases]
        if family is not None:
            results += [PreType("T", (Var(x),)) for x, S in zip(ARGUMENT_NAMES, dom) if S == family]
        sig = extend(sig, _fun(ctx, f"f{k}", draw(strat.sampled_from(results))))

    if family is not None:
        ctx = PreContext.of(("x", PreType(family)), ("p", PreType("T", (Var("x"),))))
        sig = extend(sig, _fun(ctx, "h", PreType(family), positions=(2,)))
    return sig


@functools.lru_cache(maxsize=None)
def judgement_pool(sig, max_height: int = 3):
    """Enumerated once per signature; callers share the mapping."""
    return enumerate_judgements(sig, max_height)


@strat.composite
def accepted_terms(draw, max_height: int = 3):
    """A signature with one of its enumerated term judgements."""
    sig = draw(signatures())
    terms = sorted(
        (j for j in judgement_pool(sig, max_height) if isinstance(j, HasType)), key=str
    )
    return sig, draw(strat.sampled_from(terms))


def raw_terms(sig, ctx: PreContext, max_leaves: int = 6):
    """Arbitrary pre-terms over the symbols of ``sig``; most do not type check."""
    leaves = [Var(x) for x in ctx.variables] + [App(d.symbol) for d in sig.fun_decls if not d.arity]
    symbols = [d for d in sig.fun_decls if d.arity]
    if not leaves:
        leaves = [Var("x")]
    base = strat.sampled_from(leaves)
    if not symbols:
        return base

    def grow(children):
        return strat.sampled_from(symbols).flatmap(
            lambda d: strat.tuples(*([children] * d.arity)).map(lambda args: App(d.symbol, args))
        )

    return strat.recursive(base, grow, max_leaves=max_leaves)


@strat.composite
def context_maps(draw, max_height: int = 3):
    """A signature, a type or term judgement over Γ and terms of a map Θ → Γ.

    The terms are drawn from the enumerated pool so they type check; when no
    other source fits, the identity on Γ is returned.
    """
    sig = draw(signatures())
    pool = judgement_pool(sig, max_height)
    bodies = sorted((j for j in pool if isinstance(j, (IsType, HasType))), key=str)
    j = draw(strat.sampled_from(bodies))
    target = j.context
    sources = sorted({k.context for k in pool if isinstance(k, HasType)} | {target}, key=str)
    source = draw(strat.sampled_from(sources))

    chosen = []
    for k, (_, A) in enumerate(target.entries):
        expected = subst(A, tuple(chosen), target.variables[:k])
        fits = sorted(
            (t.term for t in pool if isinstance(t, HasType)
             and t.context == source and t.type == expected),
            key=str,
        )
        if not fits:
            return sig, j, target, target.as_terms()
        chosen.append(draw(strat.sampled_from(fits)))
    return sig, j, source, tuple(chosen)


def unary_signature():
    """``S`` type, ``c : S``, ``f(x) : S`` over ``x:S`` and a predicate ``P`` over ``x:S``."""
    over_s = PreContext.of(("x", PreType("S")))
    sig = extend(empty_signature(), TypeDecl(PreContext(), "S", ()))
    sig = extend(sig, _fun(PreContext(), "c", PreType("S")))
    sig = extend(sig, _fun(over_s, "f", PreType("S")))
    return extend(sig, PredDecl(over_s, "P", (1,)))


@strat.composite
def unary_tables(draw, size: int = 3):
    """Fibers, values and predicate extents for :func:`unary_signature`."""
    carrier = draw(
        strat.lists(strat.integers(0, size - 1), min_size=1, max_size=size, unique=True)
    )
    element = strat.sampled_from(sorted(carrier))
    fibers = {"S": {(): carrier}}
    values = {
        "c": {(): draw(element)},
        "f": {(v,): draw(element) for v in sorted(carrier)},
    }
    holds = {"P": {(v,) for v in sorted(carrier) if draw(strat.booleans())}}
    return fibers, values, holds
