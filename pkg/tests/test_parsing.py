import pytest

from dfolkit.checker import HasType, IsType
from dfolkit.corpus import corpus_path
from dfolkit.dfol import Atom, Forall
from dfolkit.exceptions import FiberMismatchError, ModelError, ParseError
from dfolkit.folds import isomorphic, validate_vocabulary
from dfolkit.parsing import (
    finite_model,
    load_model_tables,
    load_proof,
    load_theory,
    load_vocabulary,
    parse_judgement,
    parse_model,
    parse_proof,
    parse_theory,
    parse_vocabulary,
    print_model,
    print_proof,
    print_theory,
    print_vocabulary,
    read_sexps,
    read_text,
)
from dfolkit.syntax import App, Var

pytestmark = pytest.mark.unit

THEORIES = ["cat", "cetcs", "partial", "semigroup", "setoid", "universe"]
PROOFS = [("cat", "refl"), ("universe", "forall_intro"), ("semigroup", "transitive")]


@pytest.mark.parametrize("name", THEORIES)
def test_theories_survive_printing(name):
    theory = load_theory(corpus_path(f"{name}.th"))
    assert parse_theory(print_theory(theory)) == theory


@pytest.mark.parametrize("theory_name,proof_name", PROOFS)
def test_proofs_survive_printing(theory_name, proof_name):
    theory = load_theory(corpus_path(f"{theory_name}.th"))
    proof = load_proof(corpus_path(f"{proof_name}.prf"), theory).proof
    again = parse_proof(print_proof(theory.name, proof), theory)
    assert again.proof == proof


@pytest.mark.parametrize("name", ["k2", "parallel"])
def test_vocabularies_survive_printing(name):
    vocab = load_vocabulary(corpus_path(f"{name}.voc"))
    again = validate_vocabulary(parse_vocabulary(print_vocabulary(vocab)))
    assert isomorphic(vocab, again)


def test_model_tables_survive_printing():
    tables = load_model_tables(corpus_path("semigroup.model"))
    assert parse_model(print_model(tables)) == tables
    assert tables.values["m"][(0, 1)] == 1
    assert tables.fibers["E"][(0, 1)] == ()
    assert tables.holds["Eq"] == ((0, 0), (1, 1))


class TestReader:
    def test_comments_and_whitespace(self):
        nodes = read_sexps("; heading\n(a b) ; trailing\n  c\n")
        assert [str(n) for n in nodes] == ["(a b)", "c"]

    def test_positions(self):
        nodes = read_sexps("\n  (a\n    (b c))")
        assert (nodes[0].line, nodes[0].column) == (2, 3)
        assert (nodes[0][1].line, nodes[0][1].column) == (3, 5)

    def test_unbalanced(self):
        with pytest.raises(ParseError, match="unbalanced"):
            read_sexps("(a (b)")

    def test_declared_constants_are_applications(self, semigroup_sig):
        j = parse_judgement("(term (ctx (x A)) (m x a) A)", semigroup_sig)
        assert isinstance(j, HasType)
        assert j.term == App("m", (Var("x"), App("a")))

    def test_numerals_are_debruijn_variables(self, universe_sig):
        j = parse_judgement("(type (ctx (1 U)) (T 1))", universe_sig)
        assert isinstance(j, IsType)
        assert j.type.args == (Var(1),)

    def test_quantified_formula(self, semigroup):
        seq = semigroup.axiom("e_elim")
        assert seq.rhs.var == "p"
        assert isinstance(semigroup.axiom("refl").rhs, Atom)
        assert not isinstance(seq.rhs, Forall)


class TestErrors:
    def test_unknown_declaration_is_located(self):
        text = "(theory t\n  (type A (ctx))\n  (bogus B (ctx)))"
        with pytest.raises(ParseError) as info:
            parse_theory(text, filename="t.th")
        assert (info.value.line, info.value.column) == (3, 3)
        assert str(info.value).startswith("t.th:3:3:")

    def test_function_without_result(self):
        with pytest.raises(ParseError, match="ret"):
            parse_theory("(theory t (type A (ctx)) (fun c (ctx)))")

    def test_unknown_variable_flavor(self):
        with pytest.raises(ParseError, match="flavor"):
            parse_theory("(theory t (vars nominal))")

    def test_keyword_as_variable(self, semigroup_sig):
        with pytest.raises(ParseError, match="keyword"):
            parse_judgement("(context (ctx (top A)))", semigroup_sig)

    def test_unknown_proof_rule(self, cat):
        with pytest.raises(ParseError, match="unknown rule"):
            parse_proof("(proof cat (Magic (seq (ctx) top top)))", cat)

    def test_proof_about_another_theory(self, cat):
        with pytest.raises(ParseError):
            parse_proof("(proof semigroup (TopI (seq (ctx) top top)))", cat)

    def test_two_documents(self):
        with pytest.raises(ParseError, match="one s-expression"):
            parse_theory("(theory a) (theory b)")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read_text(tmp_path / "absent.th")

    def test_model_of_another_theory(self, cat):
        tables = load_model_tables(corpus_path("semigroup.model"))
        with pytest.raises(ModelError):
            finite_model(tables, cat)

    def test_model_value_outside_a_fiber(self, semigroup):
        text = read_text(corpus_path("semigroup.model"))
        text = text.replace("(fun a (value () 0))", "(fun a (value () 7))")
        with pytest.raises(FiberMismatchError) as info:
            finite_model(parse_model(text), semigroup)
        assert info.value.path[0] == 9
