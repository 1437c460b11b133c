"""Dependently typed first-order logic: formulas, substitution, theories and proofs."""

from dfolkit.dfol.alpha import alpha_eq, alpha_key
from dfolkit.dfol.convert import dfol_to_star, star_to_dfol
from dfolkit.dfol.formation import Formation, FormulaChecker, check_formula
from dfolkit.dfol.formulas import (
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Sequent,
    Top,
    free_variables,
    height,
)
from dfolkit.dfol.proofs import Proof, ProofCheck, ProofChecker, ProofMode, ProofRule, check_proof
from dfolkit.dfol.proptypes import local_axioms, partial_function, predicate_type
from dfolkit.dfol.standardize import standardize_formula, standardize_sequent
from dfolkit.dfol.substitution import (
    projection,
    subst_formula,
    subst_sequent,
    subst_syntactic,
    weaken_formula,
)
from dfolkit.dfol.theory import Theory, build_theory

__all__ = [
    "And",
    "Atom",
    "Bot",
    "Exists",
    "Forall",
    "Formation",
    "Formula",
    "FormulaChecker",
    "Imp",
    "Or",
    "Proof",
    "ProofCheck",
    "ProofChecker",
    "ProofMode",
    "ProofRule",
    "Sequent",
    "Theory",
    "Top",
    "alpha_eq",
    "alpha_key",
    "build_theory",
    "check_formula",
    "check_proof",
    "dfol_to_star",
    "free_variables",
    "height",
    "local_axioms",
    "partial_function",
    "predicate_type",
    "projection",
    "standardize_formula",
    "standardize_sequent",
    "star_to_dfol",
    "subst_formula",
    "subst_sequent",
    "subst_syntactic",
    "weaken_formula",
]
