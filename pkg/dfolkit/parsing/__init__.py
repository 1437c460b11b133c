"""The s-expression file formats: reader, printer and loaders."""

from dfolkit.parsing.files import (
    finite_model,
    load_model_tables,
    load_proof,
    load_theory,
    load_vocabulary,
    read_text,
)
from dfolkit.parsing.printer import print_model, print_proof, print_theory, print_vocabulary
from dfolkit.parsing.reader import (
    ModelTables,
    ProofFile,
    Reader,
    parse_context,
    parse_formula,
    parse_judgement,
    parse_model,
    parse_proof,
    parse_sequent,
    parse_term,
    parse_theory,
    parse_type,
    parse_variable,
    parse_vocabulary,
)
from dfolkit.parsing.sexp import SList, Symbol, read_one, read_sexps

__all__ = [
    "ModelTables",
    "ProofFile",
    "Reader",
    "SList",
    "Symbol",
    "finite_model",
    "load_model_tables",
    "load_proof",
    "load_theory",
    "load_vocabulary",
    "parse_context",
    "parse_formula",
    "parse_judgement",
    "parse_model",
    "parse_proof",
    "parse_sequent",
    "parse_term",
    "parse_theory",
    "parse_type",
    "parse_variable",
    "parse_vocabulary",
    "print_model",
    "print_proof",
    "print_theory",
    "print_vocabulary",
    "read_one",
    "read_sexps",
    "read_text",
]
