"""Raw syntax: variable systems, pre-terms, pre-types and pre-contexts."""

from dfolkit.syntax.terms import (
    App,
    PreContext,
    PreTerm,
    PreType,
    Var,
    free_vars,
    subst,
    subst_ctx,
    top_vars,
)
from dfolkit.syntax.variables import Carrier, Flavor, Variable, VariableSystem

__all__ = [
    "App",
    "Carrier",
    "Flavor",
    "PreContext",
    "PreTerm",
    "PreType",
    "Var",
    "Variable",
    "VariableSystem",
    "free_vars",
    "subst",
    "subst_ctx",
    "top_vars",
]
