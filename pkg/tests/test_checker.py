import hypothesis
import hypothesis.strategies as strat
import pytest

from dfolkit.checker import (
    HasType,
    IsContext,
    IsType,
    Kernel,
    Mode,
    Rule,
    apply_substitution,
    check_mode_r5star,
    interchange,
    standardize,
    strengthen,
    structural_transform,
    weaken,
)
from dfolkit.checker.enumerate import enumerate_judgements
from dfolkit.checker.standardize import is_standard, standardize_context
from dfolkit.exceptions import (
    CheckError,
    ReconstructionError,
    SideConditionError,
    SubstitutionError,
    UndecidedError,
)
from dfolkit.parsing import parse_context, parse_judgement, parse_term, parse_type
from dfolkit.signature import FunDecl, TypeDecl, empty_signature
from dfolkit.signature.build import extend
from dfolkit.syntax import App, PreContext, PreType, Var, free_vars

from .strategies import accepted_terms, context_maps, raw_terms, signatures

A = PreType("A")


@pytest.fixture
def kernel(semigroup_sig):
    return Kernel(semigroup_sig)


def small_signature():
    """A, E over x,y:A and two constants."""
    sig = extend(empty_signature(), TypeDecl(PreContext(), "A", ()))
    sig = extend(sig, TypeDecl(PreContext.of(("x", A), ("y", A)), "E", (1, 2)))
    sig = extend(sig, FunDecl(PreContext(), "a", (), A))
    return extend(sig, FunDecl(PreContext(), "b", (), A))


@pytest.mark.unit
class TestContexts:
    def test_empty_context_is_r1(self, kernel):
        d = kernel.check_context(PreContext())
        assert d.rule is Rule.R1
        assert d.height == 0

    def test_congruence_context(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A) (p (E x y)))", semigroup_sig)
        d = kernel.check_context(ctx)
        assert d.rule is Rule.R2
        assert kernel.check_context(ctx.prefix(2)).height < d.height

    def test_repeated_variable(self, kernel):
        with pytest.raises(CheckError) as info:
            kernel.check_context(PreContext.of(("x", A), ("x", A)))
        assert info.value.rule == "R2"
        assert info.value.path == (2,)

    def test_bad_entry_is_located(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x A) (p (E x)))", semigroup_sig)
        with pytest.raises(CheckError) as info:
            kernel.check_context(ctx)
        assert info.value.path[0] == 2

    def test_symbol_names_are_not_fresh(self, kernel):
        with pytest.raises(CheckError):
            kernel.check_context(PreContext.of(("m", A)))


@pytest.mark.unit
class TestTypes:
    def test_dependent_type(self, kernel, semigroup_sig):
        j = parse_judgement("(type (ctx (x y A)) (E x y))", semigroup_sig)
        assert kernel.check(j).rule is Rule.R4

    def test_arity(self, kernel, semigroup_sig):
        with pytest.raises(CheckError) as info:
            kernel.check_type(
                parse_context("(ctx (x A))", semigroup_sig), parse_type("(E x)", semigroup_sig)
            )
        assert info.value.rule == "R4"

    def test_function_symbol_as_type(self, kernel):
        with pytest.raises(CheckError, match="not a type symbol"):
            kernel.check_type(PreContext(), PreType("m"))

    def test_universe_family_is_a_new_type(self, universe_sig):
        j = parse_judgement("(type (ctx (1 (T a))) (T (b 1)))", universe_sig)
        d = Kernel(universe_sig).check(j)
        assert d.conclusion == j

    def test_presupposed_context_is_lower(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        d = kernel.check_type(ctx, parse_type("(E x y)", semigroup_sig))
        assert kernel.check_context(ctx).height < d.height


@pytest.mark.unit
class TestTerms:
    def test_variable(self, kernel):
        ctx = PreContext.of(("x", A))
        T, d = kernel.infer_type(ctx, Var("x"))
        assert T == A
        assert d.rule is Rule.R3

    def test_application(self, kernel, semigroup_sig):
        T, d = kernel.infer_type(PreContext(), parse_term("(m a b)", semigroup_sig))
        assert T == A
        assert d.rule is Rule.R5

    def test_hidden_arguments_are_reconstructed(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (u v A) (q (E u v)))", semigroup_sig)
        T, d = kernel.infer_type(ctx, parse_term("(sigma q)", semigroup_sig))
        assert T == parse_type("(E v u)", semigroup_sig)
        args = kernel.solve_arguments(semigroup_sig.fun_decl("sigma"), (Var("q"),), ctx)
        assert args.terms == (Var("u"), Var("v"), Var("q"))

    def test_nested_reconstruction(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (u v w A) (p (E u v)) (q (E v w)))", semigroup_sig)
        T, _ = kernel.infer_type(ctx, parse_term("(tau (sigma (sigma p)) q)", semigroup_sig))
        assert T == parse_type("(E u w)", semigroup_sig)

    def test_ax1(self, kernel, semigroup_sig):
        kernel.check_term(
            PreContext(), App("ax1"), parse_type("(E (m a b) (m b c))", semigroup_sig)
        )

    def test_mismatch_names_both_types(self, kernel, semigroup_sig):
        ctx = PreContext.of(("x", A))
        with pytest.raises(CheckError) as info:
            kernel.check_term(ctx, Var("x"), parse_type("(E x x)", semigroup_sig))
        assert info.value.rule == "check"
        assert "(E x x)" in str(info.value)

    def test_undeclared_variable(self, kernel):
        with pytest.raises(CheckError) as info:
            kernel.infer_type(PreContext(), Var("z"))
        assert info.value.rule == "R3"

    def test_matching_conflict(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (u v A) (p (E u v)) (q (E u v)))", semigroup_sig)
        with pytest.raises(ReconstructionError):
            kernel.infer_type(ctx, parse_term("(tau p q)", semigroup_sig))

    def test_explicit_argument_of_the_wrong_kind(self, kernel):
        with pytest.raises(ReconstructionError) as info:
            kernel.infer_type(PreContext.of(("x", A)), App("sigma", (Var("x"),)))
        assert info.value.path[0] == 3

    def test_fuel(self, semigroup_sig):
        ctx = parse_context("(ctx (u v A) (q (E u v)))", semigroup_sig)
        with pytest.raises(UndecidedError):
            Kernel(semigroup_sig, fuel=3).infer_type(ctx, App("sigma", (Var("q"),)))

    def test_derivations_are_deterministic(self, semigroup_sig):
        ctx = parse_context("(ctx (u v A) (q (E u v)))", semigroup_sig)
        term = parse_term("(gamma (sigma q) (rho u))", semigroup_sig)
        first = Kernel(semigroup_sig).infer_type(ctx, term)
        second = Kernel(semigroup_sig).infer_type(ctx, term)
        assert first == second


@pytest.mark.unit
class TestContextMaps:
    def test_identity(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        ident = kernel.identity(ctx)
        assert ident.terms == (Var("x"), Var("y"))
        assert len(ident.components) == 2

    def test_constants(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        cmap = kernel.check_ctx_map(PreContext(), ctx, (App("a"), App("b")))
        assert cmap.height == max(cmap.heights + (cmap.target_derivation.height,))

    def test_length_mismatch(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        with pytest.raises(CheckError) as info:
            kernel.check_ctx_map(PreContext(), ctx, (App("a"),))
        assert info.value.rule == "map"

    def test_failing_component_is_indexed(self, kernel, semigroup_sig):
        target = parse_context("(ctx (x y A) (p (E x y)))", semigroup_sig)
        with pytest.raises(CheckError) as info:
            kernel.check_ctx_map(PreContext(), target, (App("a"), App("b"), App("ax1")))
        assert info.value.path == (3,)

    def test_composition(self, kernel, semigroup_sig):
        xy = parse_context("(ctx (x y A))", semigroup_sig)
        z = parse_context("(ctx (z A))", semigroup_sig)
        t = kernel.check_ctx_map(xy, z, (parse_term("(m y x)", semigroup_sig),))
        s = kernel.check_ctx_map(PreContext(), xy, (App("a"), App("b")))
        assert kernel.compose(t, s).terms == (parse_term("(m b a)", semigroup_sig),)
        with pytest.raises(CheckError):
            kernel.compose(s, t)


@pytest.mark.unit
class TestSubstitution:
    def test_identity_leaves_the_conclusion(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        d = kernel.check_type(ctx, parse_type("(E x y)", semigroup_sig))
        assert apply_substitution(semigroup_sig, d, kernel.identity(ctx)).conclusion == d.conclusion

    def test_closing_instance(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        d = kernel.check_type(ctx, parse_type("(E x y)", semigroup_sig))
        s = kernel.check_ctx_map(PreContext(), ctx, (App("a"), App("b")))
        result = apply_substitution(semigroup_sig, d, s, recheck=True)
        assert result.conclusion == IsType(PreContext(), parse_type("(E a b)", semigroup_sig))

    def test_composed_maps_substitute_twice(self, kernel, semigroup_sig):
        xy = parse_context("(ctx (x y A))", semigroup_sig)
        z = parse_context("(ctx (z A))", semigroup_sig)
        d = kernel.check_type(xy, parse_type("(E x (m y x))", semigroup_sig))
        t = kernel.check_ctx_map(z, xy, (Var("z"), parse_term("(m z z)", semigroup_sig)))
        s = kernel.check_ctx_map(PreContext(), z, (App("c"),))
        once = apply_substitution(semigroup_sig, d, kernel.compose(t, s))
        twice = apply_substitution(semigroup_sig, apply_substitution(semigroup_sig, d, t), s)
        assert once.conclusion == twice.conclusion

    def test_wrong_context(self, kernel, semigroup_sig):
        d = kernel.check_type(PreContext.of(("x", A)), A)
        with pytest.raises(SubstitutionError):
            apply_substitution(semigroup_sig, d, kernel.identity(PreContext()))


@pytest.mark.unit
class TestStructural:
    def test_weaken_then_strengthen(self, kernel, semigroup_sig):
        d = kernel.check_type(PreContext.of(("x", A)), A)
        wide = weaken(semigroup_sig, d, 1, "y", A)
        assert wide.conclusion == IsType(PreContext.of(("x", A), ("y", A)), A)
        assert strengthen(semigroup_sig, wide, 2).conclusion == d.conclusion

    def test_weaken_in_the_middle(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A) (p (E x y)))", semigroup_sig)
        d = kernel.check_context(ctx)
        wide = structural_transform("weaken", semigroup_sig, d, 2, "z", A)
        assert wide.conclusion.context.variables == ("x", "y", "z", "p")

    def test_weaken_needs_a_fresh_variable(self, kernel, semigroup_sig):
        d = kernel.check_type(PreContext.of(("x", A)), A)
        with pytest.raises(SideConditionError):
            weaken(semigroup_sig, d, 1, "x", A)

    def test_strengthen_a_used_variable(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        d = kernel.check_type(ctx, parse_type("(E x y)", semigroup_sig))
        with pytest.raises(SideConditionError):
            strengthen(semigroup_sig, d, 1)

    def test_interchange(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        d = kernel.infer_type(ctx, Var("x"))[1]
        swapped = interchange(semigroup_sig, d, 1)
        assert swapped.conclusion == HasType(PreContext.of(("y", A), ("x", A)), Var("x"), A)

    def test_interchange_past_a_dependency(self, kernel, semigroup_sig):
        ctx = parse_context("(ctx (x A) (p (E x x)))", semigroup_sig)
        with pytest.raises(SideConditionError):
            interchange(semigroup_sig, kernel.check_context(ctx), 1)

    def test_debruijn_signatures_are_refused(self, universe_sig):
        d = Kernel(universe_sig).check_context(parse_context("(ctx (1 U))", universe_sig))
        with pytest.raises(SideConditionError, match="unrestricted"):
            strengthen(universe_sig, d, 1)

    def test_unknown_kind(self, kernel, semigroup_sig):
        d = kernel.check_context(PreContext())
        with pytest.raises(ValueError):
            structural_transform("contract", semigroup_sig, d, 1)


@pytest.mark.unit
class TestStandardize:
    def test_renames_onto_the_canonical_sequence(self, semigroup_sig):
        j = parse_judgement("(type (ctx (u w A)) (E u w))", semigroup_sig)
        result = standardize(semigroup_sig, j)
        d, e = semigroup_sig.standard_sequence(2)
        assert result.judgement == IsType(
            PreContext.of((d, A), (e, A)), PreType("E", (Var(d), Var(e)))
        )
        assert result.forward.terms == (Var(d), Var(e))
        assert result.backward.terms == (Var("u"), Var("w"))
        assert is_standard(semigroup_sig, result.context)

    def test_round_trip(self, semigroup_sig):
        j = parse_judgement("(term (ctx (u v A) (q (E u v))) (sigma q) (E v u))", semigroup_sig)
        there = standardize(semigroup_sig, j)
        back = standardize(semigroup_sig, there.judgement, sigma=("u", "v", "q"))
        assert back.judgement == j

    def test_standard_debruijn_context(self, universe_sig):
        j = parse_judgement("(type (ctx (1 U)) (T 1))", universe_sig)
        result = standardize(universe_sig, j)
        assert result.judgement == j
        assert result.forward.terms == result.backward.terms == (Var(1),)

    def test_short_ordering(self, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        with pytest.raises(CheckError):
            standardize_context(ctx, ("d",))

    def test_rejected_judgement(self, semigroup_sig):
        with pytest.raises(CheckError):
            standardize(semigroup_sig, IsContext(PreContext.of(("x", PreType("B")))))


@pytest.mark.unit
class TestRuleModes:
    def test_r5_acceptance_carries_over(self, semigroup_sig):
        j = parse_judgement("(term (ctx (u v A) (q (E u v))) (sigma q) (E v u))", semigroup_sig)
        d = check_mode_r5star(semigroup_sig, j)
        assert any(n.rule is Rule.R5STAR for n in d.walk())
        assert d.height <= Kernel(semigroup_sig).check(j).height

    def test_both_reject_undeclared(self):
        for mode in Mode:
            with pytest.raises(CheckError):
                Kernel(empty_signature(), mode=mode).check_type(PreContext(), PreType("S"))


def _modes_agree(sig, height):
    r5 = set(enumerate_judgements(sig, height, Mode.R5))
    r5star = set(enumerate_judgements(sig, height, Mode.R5STAR))
    assert r5 <= r5star
    kernel = Kernel(sig)
    assert all(kernel.accepts(j) for j in r5star)


@pytest.mark.integration
class TestEnumeration:
    def test_heights_are_recorded(self):
        found = enumerate_judgements(small_signature(), 3)
        assert found[IsContext(PreContext())] == 0
        assert found[IsType(PreContext(), A)] == 1
        assert found[HasType(PreContext(), App("a"), A)] == 2
        assert all(Kernel(small_signature()).accepts(j) for j in found)

    def test_small_signature(self):
        _modes_agree(small_signature(), 4)

    def test_universe(self, universe_sig):
        _modes_agree(universe_sig.without_predicates(), 4)

    @pytest.mark.slow
    def test_small_signature_to_height_six(self):
        _modes_agree(small_signature(), 6)


@pytest.mark.integration
@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(signatures())
def test_rule_modes_agree_on_generated_signatures(sig):
    _modes_agree(sig, 3)


@pytest.mark.slow
@hypothesis.settings(max_examples=1000, deadline=None)
@hypothesis.given(accepted_terms())
def test_unique_typing(case):
    sig, j = case
    T, d = Kernel(sig).infer_type(j.context, j.term)
    assert T == j.type
    assert Kernel(sig).infer_type(j.context, j.term) == (T, d)
    assert Kernel(sig, mode=Mode.R5STAR).infer_type(j.context, j.term)[0] == T


@pytest.mark.integration
@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(strat.data())
def test_raw_terms_type_uniquely_or_not_at_all(data):
    sig = data.draw(signatures())
    ctx = PreContext.of(*((x, PreType(d.symbol)) for x, d in zip("uv", sig.type_decls[:1] * 2)))
    term = data.draw(raw_terms(sig, ctx))
    verdicts = []
    for _ in range(2):
        try:
            verdicts.append(Kernel(sig).infer_type(ctx, term)[0])
        except CheckError as e:
            verdicts.append(type(e))
    assert verdicts[0] == verdicts[1]


@pytest.mark.slow
@hypothesis.settings(max_examples=500, deadline=None)
@hypothesis.given(context_maps())
def test_substitution_rechecks_within_the_height_bound(case):
    sig, j, source, terms = case
    kernel = Kernel(sig)
    d = kernel.check(j)
    s = kernel.check_ctx_map(source, j.context, terms)
    result = apply_substitution(sig, d, s)
    assert kernel.check(result.conclusion).conclusion == result.conclusion
    assert result.height <= d.height + s.height


@pytest.mark.slow
@hypothesis.settings(max_examples=500, deadline=None)
@hypothesis.given(accepted_terms())
def test_weaken_and_strengthen_recheck(case):
    sig, j = case
    d = Kernel(sig).check(j)
    y = sig.fresh(j.context)
    base = sig.type_decls[0].symbol
    position = len(j.context)
    wide = weaken(sig, d, position, y, PreType(base))
    assert Kernel(sig).check(wide.conclusion).conclusion == wide.conclusion
    assert strengthen(sig, wide, position + 1).conclusion == j


@pytest.mark.slow
@hypothesis.settings(max_examples=500, deadline=None)
@hypothesis.given(accepted_terms(), strat.data())
def test_interchange_rechecks_or_names_the_dependency(case, data):
    sig, j = case
    d = Kernel(sig).check(j)
    # two fresh base-sorted variables in front give every context a swappable pair
    base = PreType(sig.type_decls[0].symbol)
    wide = weaken(sig, d, 0, sig.fresh(j.context), base)
    wide = weaken(sig, wide, 0, sig.fresh(wide.conclusion.context), base)
    position = data.draw(strat.integers(1, len(wide.conclusion.context) - 1))
    (x, _), (_, C) = wide.conclusion.context.entries[position - 1 : position + 1]
    try:
        swapped = interchange(sig, wide, position)
    except SideConditionError:
        assert x in free_vars(C)
        return
    assert x not in free_vars(C)
    assert Kernel(sig).check(swapped.conclusion).conclusion == swapped.conclusion
    assert interchange(sig, swapped, position).conclusion == wide.conclusion
