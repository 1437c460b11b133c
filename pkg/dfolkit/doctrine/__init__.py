"""Hyperdoctrines over cwfs, formula evaluation and soundness checks."""

from dfolkit.doctrine.base import Hyperdoctrine
from dfolkit.doctrine.evaluate import Evaluator, eval_formula, satisfies, tabulated_predicates
from dfolkit.doctrine.heyting import FiberAlgebra, HeytingPrealgebra, PowersetAlgebra
from dfolkit.doctrine.horn import Conjunction, HornDoctrine, horn_doctrine
from dfolkit.doctrine.inclusion import TheoryInclusion
from dfolkit.doctrine.laws import horn_laws, run_doctrine_laws
from dfolkit.doctrine.lindenbaum import LTDoctrine, Prop, lt_doctrine
from dfolkit.doctrine.pat import PatDoctrine, pat_doctrine
from dfolkit.doctrine.soundness import (
    FiniteModel,
    SoundnessReport,
    check_sequent_semantic,
    countermodel,
    finite_models,
    models_of,
    soundness_harness,
)
from dfolkit.doctrine.subset import Subset, SubsetDoctrine, subset_doctrine

__all__ = [
    "Conjunction",
    "Evaluator",
    "FiberAlgebra",
    "FiniteModel",
    "HeytingPrealgebra",
    "HornDoctrine",
    "Hyperdoctrine",
    "LTDoctrine",
    "PatDoctrine",
    "PowersetAlgebra",
    "Prop",
    "SoundnessReport",
    "Subset",
    "SubsetDoctrine",
    "TheoryInclusion",
    "check_sequent_semantic",
    "countermodel",
    "eval_formula",
    "finite_models",
    "horn_doctrine",
    "horn_laws",
    "lt_doctrine",
    "models_of",
    "pat_doctrine",
    "run_doctrine_laws",
    "satisfies",
    "soundness_harness",
    "subset_doctrine",
    "tabulated_predicates",
]
