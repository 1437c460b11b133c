import pytest

from dfolkit.checker import ContextMap
from dfolkit.corpus import corpus_path
from dfolkit.cwf import FreeType, finset_sample
from dfolkit.cwf.finset import environment
from dfolkit.dfol import Proof, ProofMode, ProofRule, Sequent, Theory
from dfolkit.doctrine import (
    TheoryInclusion,
    check_sequent_semantic,
    countermodel,
    eval_formula,
    finite_models,
    horn_doctrine,
    horn_laws,
    lt_doctrine,
    models_of,
    pat_doctrine,
    run_doctrine_laws,
    satisfies,
    soundness_harness,
    subset_doctrine,
    tabulated_predicates,
)
from dfolkit.exceptions import DoctrineError, ModelError, ProofError
from dfolkit.parsing import load_proof, parse_context, parse_formula, parse_proof, parse_sequent
from dfolkit.syntax import PreContext, PreType

STALE_BINDER = """
(proof universe
  (UnivI (seq (ctx) top (forall 2 U (imp (R 2) (R 2))))
    (ImpI (seq (ctx (1 U)) top (imp (R 1) (R 1)))
      (ConjL2 (seq (ctx (1 U)) (and top (R 1)) (R 1))))))
"""


def failures(reports):
    return {r.law: r.failures[:1] for r in reports if not r.ok}


class TestSubsetDoctrine:
    pytestmark = pytest.mark.unit

    def test_quantifiers(self, finset):
        D = subset_doctrine(finset)
        G = finset.obj(0, 1)
        S = finset.family(G, {0: ["a", "b"], 1: []})
        x = D.subset(finset.comprehend(S), [(0, "a")])
        assert D.exists(S, x).members == {0}
        assert D.forall(S, x).members == {1}

    def test_subset_outside_its_context(self, finset):
        with pytest.raises(DoctrineError):
            subset_doctrine(finset).subset(finset.obj(0), [1])

    def test_operations_need_one_context(self, finset):
        D = subset_doctrine(finset)
        with pytest.raises(DoctrineError):
            D.conj(D.top(finset.obj(0)), D.top(finset.obj(0, 1)))

    @pytest.mark.integration
    def test_laws(self, finset):
        reports = run_doctrine_laws(subset_doctrine(finset), finset_sample(finset, 2))
        assert failures(reports) == {}


class TestPatDoctrine:
    pytestmark = pytest.mark.unit

    def test_order_is_inhabitation(self, finset):
        D = pat_doctrine(finset)
        G = finset.obj(0, 1)
        empty_at_1 = finset.family(G, {0: [0], 1: []})
        assert D.le(D.bot(G), empty_at_1)
        assert not D.le(D.top(G), empty_at_1)
        assert D.le(empty_at_1, D.top(G))

    def test_conjunction_is_a_meet_up_to_equivalence(self, finset):
        D = pat_doctrine(finset)
        G = finset.obj(0)
        x = finset.constant_family(G, [0, 1])
        both = D.conj(x, D.top(G))
        assert both != x
        assert D.equiv(both, x)

    @pytest.mark.slow
    def test_laws(self, finset):
        reports = run_doctrine_laws(pat_doctrine(finset), finset_sample(finset, 2))
        assert all(r.checked for r in reports)
        assert failures(reports) == {}


@pytest.mark.unit
def test_horn_doctrine(finset):
    H = horn_doctrine(finset)
    G = finset.obj(0, 1)
    full = finset.constant_family(G, [0])
    partial = finset.family(G, {0: [0], 1: []})
    assert H.le(H.element(G, full), H.top(G))
    assert not H.le(H.top(G), H.element(G, partial))
    assert H.le(H.element(G, partial), H.element(G, full, partial))


@pytest.mark.integration
def test_horn_laws(finset):
    reports = horn_laws(horn_doctrine(finset), finset_sample(finset, 2))
    assert all(r.checked for r in reports)
    assert failures(reports) == {}


class TestEvaluation:
    pytestmark = pytest.mark.integration

    def test_semigroup_model_satisfies_its_theory(self, semigroup, semigroup_model):
        assert satisfies(semigroup_model.evaluator(), semigroup)

    def test_atoms_follow_the_predicate_table(self, semigroup_model, semigroup_sig):
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        value = semigroup_model.evaluator().formula(ctx, parse_formula("(Eq x y)", semigroup_sig))
        assert value.members == {environment([0, 0]), environment([1, 1])}

    def test_existential_over_proofs(self, semigroup_model, semigroup_sig):
        D = subset_doctrine(semigroup_model.model.target)
        ctx = parse_context("(ctx (x y A))", semigroup_sig)
        phi = parse_formula("(exists p (E x y) top)", semigroup_sig)
        value = eval_formula(D, semigroup_model.model, semigroup_model.preds, ctx, phi)
        assert value.members == {environment([0, 0]), environment([1, 1])}

    def test_closed_sequent(self, semigroup_model, semigroup_sig):
        seq = parse_sequent("(seq (ctx) top (Eq (m a b) (m b c)))", semigroup_sig)
        assert check_sequent_semantic(semigroup_model, seq)
        wrong = parse_sequent("(seq (ctx) top (Eq a b))", semigroup_sig)
        assert not check_sequent_semantic(semigroup_model, wrong)

    def test_unknown_predicate_table(self, semigroup_model):
        model = semigroup_model.model
        with pytest.raises(ModelError):
            tabulated_predicates(subset_doctrine(model.target), model, {"Nope": [()]})


class TestSoundness:
    pytestmark = pytest.mark.integration

    def test_semigroup_proof_holds_in_the_model(self, semigroup, semigroup_model):
        proof = load_proof(corpus_path("transitive.prf"), semigroup).proof
        report = soundness_harness(semigroup, [proof], [semigroup_model])
        assert report.ok
        assert (report.proofs, report.models, report.rejected) == (1, 1, 0)

    def test_universe_over_small_models(self, universe):
        accepted = load_proof(corpus_path("forall_intro.prf"), universe).proof
        stale = parse_proof(STALE_BINDER, universe).proof
        report = soundness_harness(universe, [accepted, stale], finite_models(universe, size=2))
        assert report.ok
        assert report.proofs == 1
        assert len(report.unaccepted) == 1
        assert report.models >= 50
        assert report.violations == []
        assert report.to_dict()["theory"] == "universe"

    def test_star_conclusions_are_standardized(self, universe):
        stale = parse_proof(STALE_BINDER, universe).proof
        report = soundness_harness(
            universe, [stale], finite_models(universe, size=2), mode=ProofMode.STAR
        )
        assert report.ok
        assert report.proofs == 1
        assert report.models >= 50

    def test_models_of_satisfy_every_axiom(self, universe):
        models = list(models_of(universe, size=2))
        assert len(models) >= 50
        for model in models:
            assert not model.evaluator().failing_axioms(universe)

    def test_countermodel(self, universe):
        empty_fiber = parse_sequent("(seq (ctx) top (forall 1 (T a) bot))", universe.signature)
        found = countermodel(universe, empty_fiber, size=1)
        assert found is not None
        assert not check_sequent_semantic(found, empty_fiber)
        axiom = parse_sequent("(seq (ctx) top (R a))", universe.signature)
        assert countermodel(universe, axiom, size=1) is None


class TestLindenbaumTarski:
    pytestmark = pytest.mark.unit

    @pytest.fixture
    def lt(self, universe):
        return lt_doctrine(universe)

    def test_needs_debruijn(self, cat):
        with pytest.raises(DoctrineError):
            lt_doctrine(cat)

    def test_order_is_certified_by_proofs(self, lt, universe):
        ctx = parse_context("(ctx (1 U))", universe.signature)
        x = lt.element(ctx, parse_formula("(and top (R 1))", universe.signature))
        y = lt.element(ctx, parse_formula("(R 1)", universe.signature))
        with pytest.raises(DoctrineError):
            lt.le(x, y)
        proof = Proof(ProofRule.CONJ_L2, Sequent(ctx, x.formula, y.formula))
        assert lt.certify_le(x, y, proof).nodes == 1
        with pytest.raises(DoctrineError):
            lt.certify_le(y, x, proof)

    def test_forall_transposes(self, lt, universe):
        U = FreeType(PreContext(), PreType("U"))
        ctx = parse_context("(ctx (1 U))", universe.signature)
        q = lt.top(PreContext())
        r = lt.element(ctx, parse_formula("(imp (R 1) (R 1))", universe.signature))
        below = load_proof(corpus_path("forall_intro.prf"), universe).proof.premises[0]
        up = lt.forall_transpose(U, q, r, below)
        assert up.rule is ProofRule.UNIV_I
        down = lt.forall_untranspose(U, q, r, up)
        assert down.conclusion == below.conclusion

    def test_exists_transposes(self, lt, universe):
        U = FreeType(PreContext(), PreType("U"))
        ctx = parse_context("(ctx (1 U))", universe.signature)
        r = lt.element(ctx, parse_formula("(R 1)", universe.signature))
        q = lt.top(PreContext())
        below = Proof(ProofRule.TOP_I, parse_sequent("(seq (ctx (1 U)) (R 1) top)", lt.signature))
        up = lt.exists_transpose(U, r, q, below)
        assert up.conclusion.lhs == lt.exists(U, r).formula
        assert lt.exists_untranspose(U, r, q, up).conclusion == below.conclusion

    def test_transpose_rejects_a_bad_premise(self, lt, universe):
        U = FreeType(PreContext(), PreType("U"))
        ctx = parse_context("(ctx (1 U))", universe.signature)
        r = lt.element(ctx, parse_formula("(R 1)", universe.signature))
        wrong = Proof(ProofRule.REF, parse_sequent("(seq (ctx (1 U)) top top)", lt.signature))
        with pytest.raises(ProofError):
            lt.forall_transpose(U, lt.top(PreContext()), r, wrong)

    def test_beck_chevalley(self, lt, universe):
        sig = universe.signature
        U = FreeType(PreContext(), PreType("U"))
        x = lt.element(parse_context("(ctx (1 U))", sig), parse_formula("(R 1)", sig))
        f = ContextMap(parse_context("(ctx (1 (T a)))", sig), PreContext(), ())
        assert lt.beck_chevalley(U, x, f)
        assert lt.beck_chevalley(U, x, f, universal=False)


class TestTheoryInclusion:
    pytestmark = pytest.mark.unit

    def test_added_axiom(self, universe):
        extra = parse_sequent("(seq (ctx) (R a) (R a))", universe.signature)
        wider = universe.add_axiom("again", extra)
        inclusion = TheoryInclusion(universe, wider)
        proof = load_proof(corpus_path("forall_intro.prf"), universe).proof
        assert inclusion.transport_check(proof).height == 3
        with pytest.raises(DoctrineError):
            TheoryInclusion(wider, universe)

    def test_renamed_axiom(self, universe):
        renamed = Theory(
            "universe",
            universe.signature,
            {"ra_copy": universe.axiom("ra"), "rb": universe.axiom("rb")},
        )
        inclusion = TheoryInclusion(universe, renamed)
        assert inclusion.names["ra"] == "ra_copy"
        proof = Proof(ProofRule.AXIOM, universe.axiom("ra"), name="ra")
        assert inclusion.transport_proof(proof).name == "ra_copy"
        assert inclusion.transport_check(proof).nodes == 1

    def test_elements_move_along(self, universe):
        trivial = parse_sequent("(seq (ctx) top top)", universe.signature)
        wider = universe.add_axiom("again", trivial)
        inclusion = TheoryInclusion(universe, wider)
        x = lt_doctrine(universe).top(PreContext())
        moved = inclusion.transport_element(x, lt_doctrine(wider))
        assert moved == x
        with pytest.raises(DoctrineError):
            inclusion.transport_element(x, lt_doctrine(universe))

    def test_other_signature(self, universe, cat):
        with pytest.raises(DoctrineError):
            TheoryInclusion(universe, cat)
