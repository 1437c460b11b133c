import hypothesis
import pytest

from dfolkit.checker import Kernel
from dfolkit.exceptions import (
    CheckError,
    DeterminingSequenceError,
    DuplicateSymbolError,
    SignatureError,
)
from dfolkit.parsing import parse_context, parse_theory, parse_type
from dfolkit.signature import (
    FunDecl,
    PredDecl,
    TypeDecl,
    empty_signature,
    validate_determining_seq,
)
from dfolkit.signature.build import extend, replay, revalidate
from dfolkit.syntax import App, PreContext, PreType, Var, VariableSystem

from .strategies import signatures

pytestmark = pytest.mark.unit

A = PreType("A")
XY = PreContext.of(("x", A), ("y", A))
E_XY = PreType("E", (Var("x"), Var("y")))
XYP = XY.extend("p", E_XY)


def sigma2():
    sig = extend(empty_signature(), TypeDecl(PreContext(), "A", ()))
    return extend(sig, TypeDecl(XY, "E", (1, 2)))


class TestEmptySignature:
    def test_has_no_declarations(self):
        sig = empty_signature()
        assert len(sig) == 0
        assert sig.standard_form
        assert sig.folds_like

    def test_checks_the_empty_context(self):
        assert Kernel(empty_signature()).check_context(PreContext()).height == 0

    def test_rejects_undeclared_type(self):
        with pytest.raises(CheckError, match="undeclared"):
            Kernel(empty_signature()).check_type(PreContext(), PreType("S"))


class TestExtend:
    def test_builds_the_congruence_step_by_step(self):
        sig = sigma2()
        assert sig.build_order == ("A", "E")
        assert sig.type_decl("E").context == XY

    def test_duplicate_symbol(self):
        with pytest.raises(DuplicateSymbolError):
            extend(sigma2(), TypeDecl(PreContext(), "A", ()))

    def test_hidden_arguments(self):
        sig = extend(sigma2(), FunDecl(XYP, "sigma", (3,), PreType("E", (Var("y"), Var("x")))))
        decl = sig.fun_decl("sigma")
        assert decl.arity == 1
        assert decl.hidden == (1, 2)
        assert not decl.standard_form
        assert not sig.standard_form

    def test_not_a_determining_sequence(self):
        with pytest.raises(DeterminingSequenceError):
            extend(sigma2(), FunDecl(XYP, "sigma", (1, 2), PreType("E", (Var("y"), Var("x")))))

    def test_context_does_not_check(self):
        bad = PreContext.of(("x", PreType("B")))
        with pytest.raises(SignatureError) as info:
            extend(sigma2(), TypeDecl(bad, "F", (1,)))
        assert info.value.path == (1,)

    def test_result_type_does_not_check(self):
        with pytest.raises(SignatureError):
            extend(sigma2(), FunDecl(XY, "f", (1, 2), PreType("E", (Var("x"),))))

    def test_result_type_mentions_undeclared_variable(self):
        with pytest.raises(SignatureError):
            FunDecl(PreContext.of(("x", A)), "f", (1,), PreType("E", (Var("x"), Var("z"))))

    def test_symbol_used_as_its_own_variable(self):
        with pytest.raises(SignatureError):
            extend(sigma2(), TypeDecl(PreContext.of(("F", A)), "F", (1,)))

    def test_predicates_share_the_namespace(self):
        sig = extend(sigma2(), PredDecl(XY, "Eq", (1, 2)))
        assert sig.pred_decl("Eq").arity == 2
        assert sig.without_predicates() == sigma2()
        with pytest.raises(DuplicateSymbolError):
            extend(sig, TypeDecl(PreContext(), "Eq", ()))

    def test_lookup_by_kind(self):
        sig = sigma2()
        with pytest.raises(CheckError):
            sig.fun_decl("A")
        with pytest.raises(CheckError):
            sig.lookup("nope")
        assert sig.get("nope") is None


class TestDeterminingSequence:
    def test_top_variable_only(self):
        report = validate_determining_seq(XYP, (3,))
        assert report.ok
        assert report.describe() == "ok"

    def test_uncovered_top_variable(self):
        report = validate_determining_seq(PreContext.of(("x", A)), ())
        assert not report.ok
        assert report.missing == {"x"}

    def test_ordering_fault(self):
        report = validate_determining_seq(XY, (2, 1))
        assert report.ordering_fault == 2
        assert "strictly increasing" in report.describe()

    def test_out_of_range(self):
        report = validate_determining_seq(XY, (1, 2, 3))
        assert report.out_of_range == (3,)


class TestReplay:
    def test_reports_the_first_bad_declaration(self):
        decls = [
            TypeDecl(PreContext(), "A", ()),
            TypeDecl(XY, "E", (1, 2)),
            TypeDecl(PreContext(), "A", ()),
        ]
        with pytest.raises(SignatureError) as info:
            replay(decls)
        assert info.value.path[0] == 3

    def test_revalidate_matches(self, semigroup_sig):
        assert revalidate(semigroup_sig) == semigroup_sig

    def test_restrict_gives_the_prefix(self, semigroup_sig):
        prefix = semigroup_sig.restrict(3)
        assert prefix.build_order == ("A", "m", "E")
        assert "sigma" not in prefix


class TestExampleTheory:
    def test_semigroup_signature(self, semigroup_sig):
        assert not semigroup_sig.is_debruijn
        assert semigroup_sig.fun_decl("tau").hidden == (1, 2, 3)
        assert semigroup_sig.fun_decl("gamma").positions == (5, 6)
        assert not semigroup_sig.folds_like

    def test_ax1_term_checks(self, semigroup_sig):
        T = parse_type("(E (m a b) (m b c))", semigroup_sig)
        assert Kernel(semigroup_sig).check_term(PreContext(), App("ax1"), T)

    def test_theory_file_errors_carry_the_item_index(self):
        text = "(theory t (vars unrestricted) (type A (ctx)) (type B (ctx (x C))))"
        with pytest.raises(SignatureError) as info:
            parse_theory(text)
        assert info.value.path[0] == 2

    def test_debruijn_theory(self, universe_sig):
        assert universe_sig.is_debruijn
        assert universe_sig.fresh(parse_context("(ctx (1 U))", universe_sig)) == 2


@hypothesis.settings(max_examples=30, deadline=None)
@hypothesis.given(signatures())
def test_generated_signatures_revalidate(sig):
    assert revalidate(sig) == sig
    for decl in sig:
        assert validate_determining_seq(decl.context, decl.positions).ok


@hypothesis.settings(max_examples=20, deadline=None)
@hypothesis.given(signatures())
def test_judgements_survive_extension(sig):
    extended = extend(sig, TypeDecl(PreContext(), "Fresh", ()))
    kernel, wider = Kernel(sig), Kernel(extended)
    for decl in sig.fun_decls:
        assert wider.check_type(decl.context, decl.result) == kernel.check_type(
            decl.context, decl.result
        )


def test_debruijn_signature_refuses_named_variables():
    sig = extend(empty_signature(VariableSystem.debruijn()), TypeDecl(PreContext(), "U", ()))
    with pytest.raises(SignatureError):
        extend(sig, TypeDecl(PreContext.of(("x", PreType("U"))), "T", (1,)))
