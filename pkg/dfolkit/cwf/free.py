"""The free cwf of a signature.

Objects are contexts, morphisms are context maps, types and terms are pairs of
a context with a type or a typed term. Equality is syntactic. ``Γ.S`` binds
``fresh(Γ)``, ``p(S)`` is ``OV(Γ)`` and ``v_S`` is the fresh variable; under a
de Bruijn variable system this calls the n-th variable ``n``.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import islice
from typing import Callable, DefaultDict, Dict, Iterator, List, Tuple, TypeVar

from dfolkit.checker.enumerate import enumerate_judgements
from dfolkit.checker.judgements import ContextMap, HasType, IsContext, IsType
from dfolkit.checker.kernel import Kernel
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.base import CwF
from dfolkit.cwf.laws import CwFSample
from dfolkit.exceptions import FiberMismatchError, KernelError
from dfolkit.signature.signature import Signature
from dfolkit.syntax.terms import PreContext, PreTerm, PreType, Var, subst

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class FreeType:
    context: PreContext
    type: PreType

    def __str__(self) -> str:
        return f"{self.type} over {self.context}"


@dataclass(frozen=True)
class FreeTerm:
    context: PreContext
    term: PreTerm
    type: PreType

    def __str__(self) -> str:
        return f"{self.term} : {self.type} over {self.context}"


class FreeCwF(CwF):
    """F_Σ over a signature.

    With ``verify`` set every constructed morphism, type and term is run
    through the kernel, so a construction that leaves the set of derivable
    judgements raises :class:`FiberMismatchError`.
    """

    name = "free"

    def __init__(self, signature: Signature, verify: bool = False, fuel: int = DEFAULT_FUEL):
        self.signature = signature
        self.verify = verify
        self.kernel = Kernel(signature, fuel=fuel)

    def _checked(self, value: T, check: Callable[[T], object]) -> T:
        if self.verify:
            try:
                check(value)
            except KernelError as e:
                raise FiberMismatchError(f"{value} is not derivable: {e}", rule="free") from e
        return value

    # ------------------------------------------------------------------
    # constructors from raw syntax
    # ------------------------------------------------------------------

    def obj(self, ctx: PreContext) -> PreContext:
        self.kernel.check(IsContext(ctx))
        return ctx

    def type_over(self, ctx: PreContext, A: PreType) -> FreeType:
        self.kernel.check(IsType(ctx, A))
        return FreeType(ctx, A)

    def term_over(self, ctx: PreContext, a: PreTerm) -> FreeTerm:
        A, _ = self.kernel.infer_type(ctx, a)
        return FreeTerm(ctx, a, A)

    def ctx_map(
        self, source: PreContext, target: PreContext, terms: Tuple[PreTerm, ...]
    ) -> ContextMap:
        return self.kernel.check_ctx_map(source, target, terms).map

    # ------------------------------------------------------------------
    # cwf structure
    # ------------------------------------------------------------------

    def dom(self, f: ContextMap) -> PreContext:
        return f.source

    def cod(self, f: ContextMap) -> PreContext:
        return f.target

    def type_context(self, A: FreeType) -> PreContext:
        return A.context

    def term_context(self, a: FreeTerm) -> PreContext:
        return a.context

    def term_type(self, a: FreeTerm) -> FreeType:
        return FreeType(a.context, a.type)

    def identity(self, G: PreContext) -> ContextMap:
        return ContextMap(G, G, G.as_terms())

    def compose(self, f: ContextMap, g: ContextMap) -> ContextMap:
        self.require_composable(f, g)
        terms = tuple(subst(t, g.terms, g.target.variables) for t in f.terms)
        return self._checked(ContextMap(g.source, f.target, terms), self._check_map)

    def terminal(self) -> PreContext:
        return PreContext()

    def bang(self, G: PreContext) -> ContextMap:
        return ContextMap(G, PreContext(), ())

    def ty_subst(self, A: FreeType, f: ContextMap) -> FreeType:
        self.require_over(A, f.target, "ty_subst")
        result = FreeType(f.source, subst(A.type, f.terms, f.target.variables))
        return self._checked(result, lambda B: self.kernel.check(IsType(B.context, B.type)))

    def tm_subst(self, a: FreeTerm, f: ContextMap) -> FreeTerm:
        if a.context != f.target:
            raise FiberMismatchError(f"term {a} does not live over {f.target}", rule="tm_subst")
        over = f.target.variables
        result = FreeTerm(f.source, subst(a.term, f.terms, over), subst(a.type, f.terms, over))
        return self._checked(
            result, lambda b: self.kernel.check(HasType(b.context, b.term, b.type))
        )

    def comprehend(self, A: FreeType) -> PreContext:
        return A.context.extend(self.signature.fresh(A.context), A.type)

    def proj(self, A: FreeType) -> ContextMap:
        return ContextMap(self.comprehend(A), A.context, A.context.as_terms())

    def var(self, A: FreeType) -> FreeTerm:
        GA = self.comprehend(A)
        return FreeTerm(GA, Var(GA.variables[-1]), A.type)

    def pair(self, f: ContextMap, A: FreeType, a: FreeTerm) -> ContextMap:
        self.require_over(A, f.target, "pair")
        self.require_term(a, self.ty_subst(A, f), "pair")
        return self._checked(
            ContextMap(f.source, self.comprehend(A), f.terms + (a.term,)), self._check_map
        )

    def _check_map(self, f: ContextMap) -> None:
        self.kernel.check_ctx_map(f.source, f.target, f.terms)


def free_sample(sig: Signature, max_height: int = 3, limit: int = 200) -> CwFSample:
    """Contexts, types and terms derivable up to ``max_height`` and the maps between them.

    Maps are assembled from the enumerated terms; at most ``limit`` are kept.
    """
    found = enumerate_judgements(sig, max_height)
    objects: List[PreContext] = []
    types: List[FreeType] = []
    terms: List[FreeTerm] = []
    pool: DefaultDict[PreContext, Dict[PreType, List[PreTerm]]] = defaultdict(dict)
    for j in found:
        if isinstance(j, IsContext):
            objects.append(j.context)
        elif isinstance(j, IsType):
            types.append(FreeType(j.context, j.type))
        else:
            terms.append(FreeTerm(j.context, j.term, j.type))
            pool[j.context].setdefault(j.type, []).append(j.term)

    def maps(source: PreContext, target: PreContext) -> Iterator[ContextMap]:
        def extend(k: int, chosen: Tuple[PreTerm, ...]) -> Iterator[ContextMap]:
            if k == len(target):
                yield ContextMap(source, target, chosen)
                return
            A = subst(target.types[k], chosen, target.variables[:k])
            for a in pool[source].get(A, []):
                yield from extend(k + 1, chosen + (a,))

        yield from extend(0, ())

    every = (f for source in objects for target in objects for f in maps(source, target))
    morphisms: List[ContextMap] = list(islice(every, limit))
    logger.debug(
        "free sample: %d objects, %d maps, %d types, %d terms",
        len(objects),
        len(morphisms),
        len(types),
        len(terms),
    )
    return CwFSample(objects, morphisms, types, terms)
