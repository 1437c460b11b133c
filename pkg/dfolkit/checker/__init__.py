"""Judgement checking for rules R1-R5 and R5*, with structural transforms."""

from dfolkit.checker.judgements import (
    CheckedMap,
    ContextMap,
    Derivation,
    HasType,
    IsContext,
    IsType,
    Judgement,
    Mode,
    Rule,
)
from dfolkit.checker.kernel import (
    Kernel,
    check_context,
    check_ctx_map,
    check_mode_r5star,
    check_term,
    check_type,
    infer_type,
)
from dfolkit.checker.standardize import Standardization, standardize
from dfolkit.checker.structural import interchange, strengthen, structural_transform, weaken
from dfolkit.checker.substitution import apply_substitution

__all__ = [
    "CheckedMap",
    "ContextMap",
    "Derivation",
    "HasType",
    "IsContext",
    "IsType",
    "Judgement",
    "Kernel",
    "Mode",
    "Rule",
    "Standardization",
    "apply_substitution",
    "check_context",
    "check_ctx_map",
    "check_mode_r5star",
    "check_term",
    "check_type",
    "infer_type",
    "interchange",
    "standardize",
    "strengthen",
    "structural_transform",
    "weaken",
]
