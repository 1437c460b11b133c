"""Local propositions as types.

For a formula ``φ`` over ``Γ`` a fresh type family ``F(x̄) type (Γ)`` is made
to stand for the proofs of ``φ`` by two axioms::

    ⊤ ⟹ φ{p}            (Γ, p:F(x̄))
    φ ⟹ (∃p:F(x̄)) ⊤      (Γ)

so a term of ``F(x̄)`` witnesses ``φ`` and ``φ`` guarantees one exists. A
partial function is a total function on such a family: ``f(x̄, p) : B`` over
``Γ, p:D(x̄)`` where ``D`` stands for the domain condition.
"""

import logging
from typing import Optional, Tuple

from dfolkit.checker.judgements import ContextMap
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.formulas import Atom, Exists, Formula, Sequent, Top
from dfolkit.dfol.substitution import projection, subst_formula
from dfolkit.dfol.theory import Theory
from dfolkit.exceptions import SignatureError
from dfolkit.signature.declarations import FunDecl, TypeDecl, standard_positions
from dfolkit.syntax.terms import App, PreContext, PreType, Var
from dfolkit.syntax.variables import Variable

logger = logging.getLogger(__name__)


def local_axioms(
    theory: Theory,
    ctx: PreContext,
    phi: Formula,
    symbol: str,
    fuel: int = DEFAULT_FUEL,
) -> Theory:
    """Add ``symbol`` as a type family over ``ctx`` standing for the proofs of ``phi``.

    The axioms are named ``<symbol>_intro`` and ``<symbol>_elim``.

    Raises:
        DuplicateSymbolError: If ``symbol`` is already declared
        FormulaError: If ``phi`` is not a formula over ``ctx``
    """
    theory = theory.extend(TypeDecl(ctx, symbol, standard_positions(ctx)), fuel=fuel)
    sig = theory.signature
    family = PreType(symbol, ctx.as_terms())
    p = sig.fresh(ctx)
    witnessed = subst_formula(sig, phi, projection(ctx, p, family))
    theory = theory.add_axiom(
        f"{symbol}_intro", Sequent(ctx.extend(p, family), Top(), witnessed), fuel=fuel
    )
    theory = theory.add_axiom(
        f"{symbol}_elim", Sequent(ctx, phi, Exists(p, family, Top())), fuel=fuel
    )
    logger.debug("%s stands for %s over %s", symbol, phi, ctx)
    return theory


def predicate_type(
    theory: Theory, pred: str, symbol: Optional[str] = None, fuel: int = DEFAULT_FUEL
) -> Theory:
    """The proof-relevant type family of a declared predicate ``R``.

    The family lives over the predicate's context and defaults to ``<R>_proof``.
    """
    decl = theory.signature.pred_decl(pred)
    ctx = decl.context
    explicit = tuple(Var(ctx.variables[i - 1]) for i in decl.positions)
    return local_axioms(theory, ctx, Atom(pred, explicit), symbol or f"{pred}_proof", fuel)


def partial_function(
    theory: Theory,
    ctx: PreContext,
    y: Variable,
    codomain: PreType,
    graph: Formula,
    domain: str,
    fun: str,
    fuel: int = DEFAULT_FUEL,
) -> Tuple[Theory, FunDecl]:
    """Declare ``fun`` as defined exactly where ``graph`` has a solution.

    ``graph`` is a formula over ``ctx, y:codomain``. The result carries

    - ``domain(x̄) type (ctx)`` with the axiom ``graph ⟹ (∃p:domain(x̄)) ⊤``
      over ``ctx, y:codomain``,
    - ``fun(x̄, p) : codomain`` over ``ctx, p:domain(x̄)``,
    - the axiom ``⊤ ⟹ graph[fun(x̄, p)/y]`` over ``ctx, p:domain(x̄)``.

    Raises:
        SignatureError: If ``y`` is already bound in ``ctx``
    """
    if ctx.declares(y):
        raise SignatureError(f"{y} is already bound in {ctx}", rule="partial")
    theory = theory.extend(TypeDecl(ctx, domain, standard_positions(ctx)), fuel=fuel)
    sig = theory.signature
    dom = PreType(domain, ctx.as_terms())
    graph_ctx = ctx.extend(y, codomain)
    p = sig.fresh(graph_ctx)
    theory = theory.add_axiom(
        f"{domain}_dom", Sequent(graph_ctx, graph, Exists(p, dom, Top())), fuel=fuel
    )

    q = sig.fresh(ctx)
    fun_ctx = ctx.extend(q, dom)
    decl = FunDecl(fun_ctx, fun, standard_positions(fun_ctx), codomain)
    theory = theory.extend(decl, fuel=fuel)
    value = App(fun, fun_ctx.as_terms())
    at_value = ContextMap(fun_ctx, graph_ctx, ctx.as_terms() + (value,))
    spec = subst_formula(theory.signature, graph, at_value)
    theory = theory.add_axiom(f"{fun}_spec", Sequent(fun_ctx, Top(), spec), fuel=fuel)
    logger.debug("%s defined on %s", fun, domain)
    return theory, decl
