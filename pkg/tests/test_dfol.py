import dataclasses

import pytest

from dfolkit.checker import ContextMap
from dfolkit.corpus import corpus_path
from dfolkit.dfol import (
    Atom,
    Exists,
    Forall,
    ProofMode,
    Sequent,
    Top,
    alpha_eq,
    check_formula,
    check_proof,
    dfol_to_star,
    local_axioms,
    partial_function,
    predicate_type,
    standardize_sequent,
    star_to_dfol,
    subst_formula,
    subst_syntactic,
    weaken_formula,
)
from dfolkit.exceptions import (
    DuplicateSymbolError,
    FormulaError,
    ProofError,
    SideConditionError,
    SignatureError,
)
from dfolkit.parsing import (
    load_proof,
    load_theory,
    parse_context,
    parse_formula,
    parse_proof,
    parse_sequent,
)
from dfolkit.syntax import App, PreType, Var

pytestmark = pytest.mark.unit

SWAPPED = """
(proof universe
  (UnivI (seq (ctx) top (forall 2 U (imp (R 2) (R 2))))
    (ImpI (seq (ctx (1 U)) top (imp (R 1) (R 1)))
      (ConjL2 (seq (ctx (1 U)) (and top (R 1)) (R 1))))))
"""


class TestFormation:
    def test_atoms_and_connectives(self, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        phi = parse_formula("(imp (Eq x y) (or (Eq y x) bot))", semigroup_sig)
        assert check_formula(semigroup_sig, ctx, phi).height == 3

    def test_unbound_variable(self, semigroup_sig):
        ctx = parse_context("(ctx (x A))", semigroup_sig)
        with pytest.raises(FormulaError) as info:
            check_formula(semigroup_sig, ctx, parse_formula("(Eq x y)", semigroup_sig))
        assert info.value.rule == "F1"

    def test_error_path_points_into_the_formula(self, semigroup_sig):
        ctx = parse_context("(ctx (x A))", semigroup_sig)
        phi = parse_formula("(and top (Eq x y))", semigroup_sig)
        with pytest.raises(FormulaError) as info:
            check_formula(semigroup_sig, ctx, phi)
        assert info.value.path[0] == 2

    def test_function_symbol_is_not_a_predicate(self, semigroup_sig):
        ctx = parse_context("(ctx (x A))", semigroup_sig)
        with pytest.raises(FormulaError, match="not a predicate"):
            check_formula(semigroup_sig, ctx, Atom("m", (Var("x"), Var("x"))))

    def test_binder_must_be_fresh(self, semigroup_sig):
        ctx = parse_context("(ctx (x A))", semigroup_sig)
        phi = parse_formula("(forall x A (Eq x x))", semigroup_sig)
        with pytest.raises(FormulaError) as info:
            check_formula(semigroup_sig, ctx, phi)
        assert info.value.rule == "F4"
        renamed = check_formula(semigroup_sig, ctx, phi, star=True).formula
        assert renamed.var != "x"
        assert alpha_eq(renamed, phi)

    def test_dependent_binder(self, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        phi = parse_formula("(exists p (E x y) (Eq x y))", semigroup_sig)
        assert check_formula(semigroup_sig, ctx, phi).rule == "F4"

    def test_hidden_predicate_arguments(self, cat):
        sig = cat.signature
        ctx = parse_context("(ctx (X Y Ob) (f g (Hom X Y)))", sig)
        formation = check_formula(sig, ctx, parse_formula("(Eq f g)", sig))
        assert formation.arguments.terms[:2] == (Var("X"), Var("Y"))


class TestSubstitution:
    def test_binder_avoids_capture(self, semigroup_sig):
        target = parse_context("(ctx (x y A))", semigroup_sig)
        source = parse_context("(ctx (p A))", semigroup_sig)
        phi = parse_formula("(exists p (E x y) (Eq x y))", semigroup_sig)
        result = subst_formula(semigroup_sig, phi, ContextMap(source, target, (Var("p"),) * 2))
        assert result.var != "p"
        assert result.type == PreType("E", (Var("p"), Var("p")))
        assert result.body == Atom("Eq", (Var("p"), Var("p")))

    def test_syntactic_substitution_renames_on_demand(self, semigroup_sig):
        phi = parse_formula("(exists q (E x y) (Eq x y))", semigroup_sig)
        result = subst_syntactic(semigroup_sig, phi, (Var("q"), Var("q")), ("x", "y"))
        assert result.var != "q"
        assert result.body == Atom("Eq", (Var("q"), Var("q")))
        untouched = parse_formula("(exists q (E x y) (Eq x y))", semigroup_sig)
        assert subst_syntactic(semigroup_sig, untouched, (), ()) == untouched

    def test_weakening_leaves_atoms(self, semigroup_sig):
        ctx = parse_context("(ctx (x A))", semigroup_sig)
        phi = parse_formula("(Eq x x)", semigroup_sig)
        assert weaken_formula(semigroup_sig, ctx, PreType("A"), phi) == phi


class TestStandardization:
    def test_semigroup_axioms_are_not_standard(self, semigroup):
        assert not semigroup.on_standard_form
        sym = standardize_sequent(semigroup.signature, semigroup.axiom("sym"))
        assert sym.context.variables == semigroup.signature.standard_sequence(2)
        assert semigroup.standardized().on_standard_form

    def test_debruijn_axioms_are_standard(self, universe):
        assert universe.on_standard_form
        assert universe.standardized() == universe

    def test_alpha_equivalent_binders(self, semigroup_sig):
        phi = parse_formula("(forall x A (Eq x x))", semigroup_sig)
        psi = parse_formula("(forall y A (Eq y y))", semigroup_sig)
        assert alpha_eq(phi, psi)
        assert not alpha_eq(phi, parse_formula("(exists y A (Eq y y))", semigroup_sig))


class TestProofs:
    @pytest.mark.parametrize(
        "theory_file,proof_file,height",
        [("cat.th", "refl.prf", 1), ("universe.th", "forall_intro.prf", 3),
         ("semigroup.th", "transitive.prf", 5)],
    )
    def test_corpus_proofs(self, theory_file, proof_file, height):
        theory = load_theory(corpus_path(theory_file))
        proof = load_proof(corpus_path(proof_file), theory).proof
        report = check_proof(theory, proof)
        assert report.height == height
        assert report.nodes == proof.size

    def test_rule_counts(self, semigroup):
        proof = load_proof(corpus_path("transitive.prf"), semigroup).proof
        report = check_proof(semigroup, proof)
        # ab_bc is cited twice, sym and trans once each
        assert report.rules["Axiom"] == 4
        assert report.rules["Subs"] == 2
        assert report.rules["Cut"] == 2
        assert report.rules["ConjI"] == 1
        assert report.nodes == 9
        assert report.to_dict()["rules"] == {"Axiom": 4, "ConjI": 1, "Cut": 2, "Subs": 2}
        assert report.to_dict()["theory"] == "semigroup"

    def test_ref_needs_equal_sides(self, cat):
        seq = parse_sequent("(seq (ctx (X Y Ob) (f g (Hom X Y))) (Eq f g) (Eq g f))", cat.signature)
        proof = parse_proof(f"(proof cat (Ref {seq}))", cat).proof
        with pytest.raises(ProofError) as info:
            check_proof(cat, proof)
        assert info.value.path == ()
        assert info.value.rule == "Ref"

    def test_wrong_axiom_is_located(self, semigroup):
        proof = load_proof(corpus_path("transitive.prf"), semigroup).proof
        conj = proof.premises[0]
        bad = dataclasses.replace(conj.premises[0], name="sym")
        broken = dataclasses.replace(
            proof, premises=(dataclasses.replace(conj, premises=(bad,) + conj.premises[1:]),)
            + proof.premises[1:]
        )
        with pytest.raises(ProofError) as info:
            check_proof(semigroup, broken)
        assert info.value.path == (1, 1)

    def test_substitution_mismatch_reports_both_forms(self, semigroup):
        proof = load_proof(corpus_path("transitive.prf"), semigroup).proof
        subs = proof.premises[1]
        mab, mbc = App("m", (App("a"), App("b"))), App("m", (App("b"), App("c")))
        broken = dataclasses.replace(
            proof, premises=(proof.premises[0], dataclasses.replace(subs, terms=(mab, mbc, mbc)))
        )
        with pytest.raises(ProofError) as info:
            check_proof(semigroup, broken)
        assert info.value.path == (2,)
        assert info.value.computed is not None
        assert info.value.computed != info.value.supplied

    def test_unknown_axiom(self, cat):
        seq = cat.axiom("refl")
        proof = parse_proof(f"(proof cat (Axiom {seq} (name nope)))", cat).proof
        with pytest.raises(ProofError, match="unknown axiom"):
            check_proof(cat, proof)

    def test_premise_count(self, cat):
        proof = load_proof(corpus_path("refl.prf"), cat).proof
        with pytest.raises(ProofError, match="premises"):
            check_proof(cat, dataclasses.replace(proof, premises=(proof,)))


class TestConversion:
    def test_dfol_proof_is_a_star_proof(self, universe):
        proof = load_proof(corpus_path("forall_intro.prf"), universe).proof
        converted = dfol_to_star(universe, proof)
        assert check_proof(universe, converted, ProofMode.STAR).nodes == proof.size

    def test_star_proof_with_a_stale_binder(self, universe):
        proof = parse_proof(SWAPPED, universe).proof
        with pytest.raises(ProofError):
            check_proof(universe, proof, ProofMode.DFOL)
        assert check_proof(universe, proof, ProofMode.STAR)
        standard, converted = star_to_dfol(universe, proof)
        assert converted.conclusion.rhs.var == 1
        assert check_proof(standard, converted).height == 3

    def test_named_signatures_are_refused(self, cat):
        proof = load_proof(corpus_path("refl.prf"), cat).proof
        with pytest.raises(SideConditionError):
            dfol_to_star(cat, proof)
        with pytest.raises(SideConditionError):
            star_to_dfol(cat, proof)


class TestProofRelevantTypes:
    def test_predicate_type(self, semigroup):
        theory = predicate_type(semigroup, "Eq")
        decl = theory.signature.type_decl("Eq_proof")
        assert decl.context == semigroup.signature.pred_decl("Eq").context
        elim = theory.axiom("Eq_proof_elim")
        assert isinstance(elim.rhs, Exists)
        assert elim.rhs.type == PreType("Eq_proof", (Var("x"), Var("y")))
        assert theory.axiom("Eq_proof_intro").lhs == Top()
        theory.validate()
        with pytest.raises(DuplicateSymbolError):
            predicate_type(theory, "Eq")

    def test_local_axioms_for_a_compound_formula(self, semigroup):
        sig = semigroup.signature
        ctx = parse_context("(ctx (x A))", sig)
        phi = parse_formula("(forall y A (Eq x y))", sig)
        theory = local_axioms(semigroup, ctx, phi, "Central")
        intro = theory.axiom("Central_intro")
        assert len(intro.context) == 2
        assert isinstance(intro.rhs, Forall)

    def test_partial_function(self):
        theory = load_theory(corpus_path("partial.th"))
        sig = theory.signature
        ctx = parse_context("(ctx (x N))", sig)
        graph = parse_formula("(Eq (succ y) x)", sig)
        theory, decl = partial_function(theory, ctx, "y", PreType("N"), graph, "Pd", "pred")
        assert decl.symbol == "pred"
        q = decl.context.variables[1]
        assert decl.context.type_of(q) == PreType("Pd", (Var("x"),))
        spec = theory.axiom("pred_spec")
        assert spec.rhs == Atom(
            "Eq", (App("succ", (App("pred", (Var("x"), Var(q))),)), Var("x"))
        )
        assert isinstance(theory.axiom("Pd_dom").rhs, Exists)

    def test_partial_function_needs_a_fresh_output(self):
        theory = load_theory(corpus_path("partial.th"))
        ctx = parse_context("(ctx (x N))", theory.signature)
        with pytest.raises(SignatureError):
            partial_function(theory, ctx, "x", PreType("N"), Top(), "Pd", "pred")


@pytest.mark.integration
@pytest.mark.parametrize("name", ["cat", "cetcs", "setoid", "partial", "semigroup", "universe"])
def test_corpus_theories_validate(name):
    theory = load_theory(corpus_path(f"{name}.th"))
    theory.validate()
    theory.validate(star=True)
    assert all(isinstance(seq, Sequent) for _, seq in theory)
