"""Categories with families: the interface, the free and finite-set instances, models."""

from dfolkit.cwf.base import CwF
from dfolkit.cwf.constructions import Constructions
from dfolkit.cwf.finset import FinMorphism, FinObject, FinSetCwF, FinTerm, FinType
from dfolkit.cwf.free import FreeCwF, FreeTerm, FreeType, free_sample
from dfolkit.cwf.laws import (
    CwFSample,
    LawReport,
    construction_laws,
    finset_sample,
    run_cwf_laws,
)
from dfolkit.cwf.model import (
    Interpretation,
    ModelAssignment,
    build_model,
    extend_model_by_fun,
    extend_model_by_pred,
    extend_model_by_type,
    interpret,
    tabulate_model,
    tabulated_term,
    tabulated_type,
)

__all__ = [
    "Constructions",
    "CwF",
    "CwFSample",
    "construction_laws",
    "FinMorphism",
    "FinObject",
    "FinSetCwF",
    "FinTerm",
    "FinType",
    "FreeCwF",
    "FreeTerm",
    "FreeType",
    "Interpretation",
    "LawReport",
    "ModelAssignment",
    "build_model",
    "extend_model_by_fun",
    "extend_model_by_pred",
    "extend_model_by_type",
    "finset_sample",
    "free_sample",
    "interpret",
    "run_cwf_laws",
    "tabulate_model",
    "tabulated_term",
    "tabulated_type",
]
