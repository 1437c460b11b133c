"""Declarations, signatures and their inductive construction."""

from dfolkit.signature.declarations import (
    Declaration,
    DeterminingSeqReport,
    FunDecl,
    PredDecl,
    TypeDecl,
    validate_determining_seq,
)
from dfolkit.signature.signature import Signature, empty_signature

__all__ = [
    "Declaration",
    "DeterminingSeqReport",
    "FunDecl",
    "PredDecl",
    "Signature",
    "TypeDecl",
    "empty_signature",
    "validate_determining_seq",
]
