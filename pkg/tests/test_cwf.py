import functools

import hypothesis
import hypothesis.strategies as strat
import pytest

from dfolkit.cwf import (
    Constructions,
    CwFSample,
    FinSetCwF,
    FreeCwF,
    ModelAssignment,
    construction_laws,
    extend_model_by_fun,
    extend_model_by_type,
    finset_sample,
    free_sample,
    interpret,
    run_cwf_laws,
    tabulate_model,
)
from dfolkit.checker import ContextMap, IsContext, standardize
from dfolkit.checker.standardize import is_standard
from dfolkit.cwf.finset import POINT, environment, unfold
from dfolkit.exceptions import DuplicateSymbolError, FiberMismatchError, ModelError
from dfolkit.parsing import parse_context, parse_judgement, parse_term, parse_type
from dfolkit.signature import FunDecl, TypeDecl
from dfolkit.syntax import App, PreContext, PreType, Var

from .strategies import unary_signature, unary_tables


def failures(reports):
    return {r.law: r.failures[:1] for r in reports if not r.ok}


class TestFinSet:
    pytestmark = pytest.mark.unit

    def test_objects_are_canonical(self, finset):
        assert finset.obj(2, 1, 1, 0) == finset.obj(0, 1, 2)
        assert finset.obj("b", 1, (0,)).elements == (1, "b", (0,))

    def test_morphism_outside_codomain(self, finset):
        with pytest.raises(FiberMismatchError):
            finset.morphism(finset.obj(0, 1), finset.obj(0), {0: 0, 1: 1})

    def test_section_outside_fiber(self, finset):
        A = finset.constant_family(finset.obj(0, 1), ["a"])
        with pytest.raises(FiberMismatchError):
            finset.section(A, {0: "a", 1: "b"})

    def test_missing_table_entry(self, finset):
        A = finset.constant_family(finset.obj(0, 1), ["a"])
        with pytest.raises(FiberMismatchError, match="no entry"):
            finset.section(A, {0: "a"})

    def test_comprehension_and_projection(self, finset):
        G = finset.obj(0, 1)
        A = finset.family(G, {0: ["a"], 1: ["a", "b"]})
        GA = finset.comprehend(A)
        assert GA.elements == ((0, "a"), (1, "a"), (1, "b"))
        assert [finset.proj(A)(x) for x in GA] == [0, 1, 1]
        assert [finset.var(A)(x) for x in GA] == ["a", "a", "b"]

    def test_empty_fiber_is_not_inhabited(self, finset):
        G = finset.obj(0, 1)
        assert finset.inhabited(finset.constant_family(G, [0]))
        assert not finset.inhabited(finset.family(G, {0: [0], 1: []}))

    def test_environments(self):
        assert environment([]) == POINT
        assert environment([0, "r"]) == (((), 0), "r")
        assert unfold(environment([1, 2, 3])) == (1, 2, 3)

    def test_telescope_projections(self, finset):
        one = finset.terminal()
        A = finset.constant_family(one, [0, 1])
        B = finset.constant_family(finset.comprehend(A), ["u"])
        G = finset.telescope([A, B])
        assert len(G) == 2
        x1 = finset.var_proj([A, B], 1)
        assert [x1(g) for g in G] == [0, 1]

    def test_tuple_of_the_wrong_length(self, finset):
        A = finset.constant_family(finset.terminal(), [0])
        with pytest.raises(FiberMismatchError):
            finset.tuple_mor(finset.terminal(), [A], [])


@pytest.mark.integration
def test_finset_satisfies_the_cwf_laws(finset):
    reports = run_cwf_laws(finset, finset_sample(finset, 2))
    assert {r.law for r in reports} >= {"identity", "associativity", "terminal", "q pullback"}
    assert all(r.checked for r in reports)
    assert failures(reports) == {}


@pytest.mark.slow
def test_finset_satisfies_the_cwf_laws_at_size_three(finset):
    sample = finset_sample(finset, 3, representatives=True)
    # the empty set, three prefixes and the point
    assert len(sample.objects) == 5
    assert {len(A.context) for A in sample.types} == {0, 1, 2, 3}
    reports = run_cwf_laws(finset, sample)
    assert all(r.checked for r in reports)
    assert failures(reports) == {}


@pytest.mark.unit
class TestRepresentativeSample:
    def test_fibers_are_prefixes(self, finset):
        sample = finset_sample(finset, 3, representatives=True)
        fibers = {fib for A in sample.types for fib in A.fibers}
        assert fibers == {(), (0,), (0, 1), (0, 1, 2)}

    def test_inner_maps_are_monotone(self, finset):
        sample = finset_sample(finset, 3, representatives=True)
        three = finset.obj(0, 1, 2)
        inner = sample.inner_into(finset, three)
        assert all(list(f.table) == sorted(f.table) for f in inner)
        # 27 maps from {0,1,2} into itself, 10 of them monotone
        assert len([f for f in sample.into(finset, three) if f.dom == three]) == 27
        assert len([f for f in inner if f.dom == three]) == 10

    def test_lookups_are_grouped_by_context(self, finset):
        sample = finset_sample(finset, 2)
        G = finset.obj(0, 1)
        assert sample.types_over(finset, G) == [A for A in sample.types if A.context == G]
        assert sample.terms_over(finset, G) == [a for a in sample.terms if a.context == G]
        assert sample.hom(finset, G, finset.terminal()) == [finset.bang(G)]


@pytest.mark.slow
def test_finset_constructions_satisfy_their_equations(finset):
    reports = construction_laws(Constructions(finset), 2)
    assert "Π uniqueness" in {r.law for r in reports}
    assert failures(reports) == {}


@pytest.mark.slow
def test_finset_constructions_at_size_three(finset):
    reports = construction_laws(Constructions(finset), 3, representatives=True)
    assert all(r.checked for r in reports)
    assert failures(reports) == {}


@pytest.mark.integration
def test_free_cwf_satisfies_the_cwf_laws():
    sig = unary_signature().without_predicates()
    free = FreeCwF(sig, verify=True)
    reports = run_cwf_laws(free, free_sample(sig, max_height=2, limit=60))
    assert failures(reports) == {}


@functools.lru_cache(maxsize=None)
def free_pool():
    sig = unary_signature().without_predicates()
    return FreeCwF(sig, verify=True), free_sample(sig, max_height=3, limit=500)


@pytest.mark.slow
@hypothesis.settings(max_examples=500, deadline=None)
@hypothesis.given(strat.data())
def test_free_cwf_laws_on_drawn_instances(data):
    free, pool = free_pool()

    def draw_into(target):
        return data.draw(strat.sampled_from(pool.into(free, target) + [free.identity(target)]))

    f = data.draw(strat.sampled_from(pool.morphisms))
    g = draw_into(free.dom(f))
    h = draw_into(free.dom(g))
    types, terms = [], []
    over = pool.types_over(free, free.cod(f))
    if over:
        A = data.draw(strat.sampled_from(over))
        types.append(A)
        terms.extend(pool.terms_of(free, free.ty_subst(A, f))[:1])
    terms.extend(pool.terms_over(free, free.cod(f))[:1])
    objects = list(dict.fromkeys([free.cod(f), free.dom(f), free.dom(g), free.dom(h)]))
    slice_ = CwFSample(objects, list(dict.fromkeys([f, g, h])), types, terms)
    reports = run_cwf_laws(free, slice_)
    assert sum(r.checked for r in reports) > 0
    assert failures(reports) == {}


class TestConstructions:
    pytestmark = pytest.mark.unit

    @pytest.fixture
    def setup(self, finset):
        G = finset.terminal()
        A = finset.constant_family(G, [0, 1])
        B = finset.family(finset.comprehend(A), lambda ga: range(ga[1] + 1))
        return Constructions(finset), G, A, B

    def test_sigma_fiber(self, setup):
        cons, G, A, B = setup
        assert cons.sigma(A, B).fiber(POINT) == ((0, 0), (1, 0), (1, 1))

    def test_pi_fiber(self, setup):
        cons, G, A, B = setup
        assert len(cons.pi(A, B).fiber(POINT)) == 2

    def test_pair_and_split(self, setup):
        cons, G, A, B = setup
        cwf = cons.cwf
        a = cwf.section(A, {POINT: 1})
        b = cwf.section(cwf.ty_subst(B, cons.point(a)), {POINT: 1})
        z = cons.pair_sigma(A, B, a, b)
        assert z(POINT) == (1, 1)
        S = cons.sigma(A, B)
        C = cwf.constant_family(cwf.comprehend(S), [0, 1, 2])
        AB = cwf.comprehend(B)
        c = cwf.section(cwf.constant_family(AB, [0, 1, 2]), lambda gab: gab[0][1] + gab[1])
        assert cons.split(A, B, C, c, z)(POINT) == 2

    def test_lambda_and_application(self, setup):
        cons, G, A, B = setup
        cwf = cons.cwf
        b = cwf.section(B, lambda ga: ga[1])
        f = cons.lam(A, b)
        assert f(POINT) == ((0, 0), (1, 1))
        a = cwf.section(A, {POINT: 1})
        assert cons.app(A, B, f, a)(POINT) == 1

    def test_recursor(self, finset):
        cons = Constructions(finset)
        G = finset.terminal()
        N3 = cons.nk(G, 3)
        C = finset.constant_family(finset.comprehend(N3), ["a", "b"])
        branches = [
            finset.section(finset.ty_subst(C, cons.point(cons.ik(G, 3, i))), {POINT: v})
            for i, v in enumerate(["a", "a", "b"])
        ]
        assert cons.rk(C, branches, cons.ik(G, 3, 2))(POINT) == "b"
        with pytest.raises(FiberMismatchError):
            cons.ik(G, 3, 3)

    def test_sum_and_case(self, finset):
        cons = Constructions(finset)
        G = finset.terminal()
        A = finset.constant_family(G, [0])
        B = finset.constant_family(G, ["x", "y"])
        z = cons.inr(A, finset.section(B, {POINT: "y"}))
        P = cons.plus(A, B)
        assert len(P.fiber(POINT)) == 3
        C = finset.constant_family(finset.comprehend(P), [10, 20])
        d = finset.section(finset.constant_family(finset.comprehend(A), [10, 20]), lambda _: 10)
        e = finset.section(finset.constant_family(finset.comprehend(B), [10, 20]), lambda _: 20)
        assert cons.case(A, B, C, d, e, z)(POINT) == 20

    def test_binary_products(self, finset):
        cons = Constructions(finset)
        G = finset.obj(0, 1)
        A = finset.constant_family(G, ["a", "b"])
        B = finset.constant_family(G, [5])
        a = finset.section(A, {0: "a", 1: "b"})
        b = finset.section(B, lambda _: 5)
        fst, snd = cons.unpair(A, B, cons.pair(a, b))
        assert fst == a
        assert snd == b


class TestSemigroupModel:
    pytestmark = pytest.mark.integration

    def test_context(self, semigroup_model, semigroup_sig):
        interp = semigroup_model.model.interpretation()
        ctx = parse_context("(ctx (x y A) (p (E x y)))", semigroup_sig)
        assert len(interp.context(ctx)) == 2
        assert len(interp.context(ctx.prefix(2))) == 4

    def test_closed_terms(self, semigroup_model, semigroup_sig):
        interp = semigroup_model.model.interpretation()
        assert interp.term(PreContext(), parse_term("(m a b)", semigroup_sig))(POINT) == 1
        E = parse_type("(E (m a b) (m b c))", semigroup_sig)
        assert interp.type(PreContext(), E).fiber(POINT) == ("r",)
        assert interp.term(PreContext(), App("ax1"))(POINT) == "r"

    def test_reconstructed_arguments(self, semigroup_model, semigroup_sig):
        interp = semigroup_model.model.interpretation()
        ctx = parse_context("(ctx (x y A) (p (E x y)))", semigroup_sig)
        value = interp.term(ctx, App("sigma", (Var("p"),)))
        assert value(environment([1, 1, "r"])) == "r"

    def test_named_judgements_are_standardized_first(self, semigroup_model, semigroup_sig):
        model = semigroup_model.model
        j = parse_judgement("(term (ctx (u v A)) (m u v) A)", semigroup_sig)
        assert not is_standard(semigroup_sig, j.context)
        moved = standardize(semigroup_sig, j).judgement
        value = interpret(model, j)
        assert value == interpret(model, moved)
        assert value.context == interpret(model, IsContext(moved.context))
        assert value(environment([1, 0])) == 1

    def test_maps_between_named_contexts(self, semigroup_model, semigroup_sig):
        model = semigroup_model.model
        source = parse_context("(ctx (u A))", semigroup_sig)
        target = parse_context("(ctx (v A) (w A))", semigroup_sig)
        f = ContextMap(source, target, (Var("u"), App("m", (Var("u"), Var("u")))))
        moved = model.interpretation().standard_map(f)
        assert is_standard(semigroup_sig, moved.source)
        assert is_standard(semigroup_sig, moved.target)
        value = interpret(model, f)
        assert value.dom == interpret(model, IsContext(moved.source))
        # m is xor, so m(t, t) = 0
        assert [unfold(value(environment([t]))) for t in (0, 1)] == [(0, 0), (1, 0)]

    def test_missing_symbol(self, finset, semigroup_sig):
        with pytest.raises(ModelError) as info:
            tabulate_model(finset, semigroup_sig, {}, {})
        assert info.value.path == (1,)


@pytest.mark.unit
@hypothesis.settings(max_examples=100, deadline=None)
@hypothesis.given(unary_tables())
def test_tabulated_terms_follow_the_tables(tables):
    finset = FinSetCwF()
    fibers, values, _ = tables
    model = tabulate_model(finset, unary_signature(), fibers, values)
    interp = model.interpretation()
    c = values["c"][()]
    ffc = values["f"][(values["f"][(c,)],)]
    assert interp.term(PreContext(), parse_term("(f (f c))", model.signature))(POINT) == ffc


@pytest.mark.unit
@hypothesis.settings(max_examples=100, deadline=None)
@hypothesis.given(unary_tables())
def test_extension_keeps_earlier_values(tables):
    finset = FinSetCwF()
    fibers, values, _ = tables
    model = tabulate_model(finset, unary_signature(), fibers, values)
    t = App("f", (App("c"),))
    before = model.interpretation().term(PreContext(), t)

    Q = TypeDecl(PreContext(), "Q", ())
    wider = extend_model_by_type(model, Q, finset.constant_family(finset.terminal(), ["q"]))
    g = FunDecl(PreContext(), "g", (), PreType("Q"))
    wider = extend_model_by_fun(wider, g, finset.section(wider.types["Q"], {POINT: "q"}))

    interp = wider.interpretation()
    assert interp.term(PreContext(), t) == before
    assert interp.term(PreContext(), App("g"))(POINT) == "q"


class TestModelExtension:
    pytestmark = pytest.mark.unit

    def test_duplicate_symbol(self, finset):
        model = ModelAssignment.empty(finset)
        S = TypeDecl(PreContext(), "S", ())
        model = extend_model_by_type(model, S, finset.constant_family(finset.terminal(), [0]))
        with pytest.raises(DuplicateSymbolError):
            extend_model_by_type(model, S, finset.constant_family(finset.terminal(), [0]))

    def test_type_over_the_wrong_object(self, finset):
        model = ModelAssignment.empty(finset)
        S = TypeDecl(PreContext(), "S", ())
        with pytest.raises(FiberMismatchError):
            extend_model_by_type(model, S, finset.constant_family(finset.obj(0, 1), [0]))

    def test_function_outside_its_result_type(self, finset):
        model = ModelAssignment.empty(finset)
        one = finset.terminal()
        model = extend_model_by_type(
            model, TypeDecl(PreContext(), "S", ()), finset.constant_family(one, [0])
        )
        wrong = finset.section(finset.constant_family(one, [1]), {POINT: 1})
        with pytest.raises(FiberMismatchError):
            extend_model_by_fun(model, FunDecl(PreContext(), "c", (), PreType("S")), wrong)
