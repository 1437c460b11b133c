"""FOLDS vocabularies and their translation to and from signatures."""

from dfolkit.folds.isomorphism import Isomorphism, find_isomorphism, isomorphic
from dfolkit.folds.translate import (
    irreducible_arrows,
    object_context,
    signature_to_vocab,
    vocab_to_signature,
)
from dfolkit.folds.vocabulary import (
    Arrow,
    Equation,
    RawVocabulary,
    Vocabulary,
    discrete_vocabulary,
    validate_vocabulary,
)

__all__ = [
    "Arrow",
    "Equation",
    "Isomorphism",
    "RawVocabulary",
    "Vocabulary",
    "discrete_vocabulary",
    "find_isomorphism",
    "irreducible_arrows",
    "isomorphic",
    "object_context",
    "signature_to_vocab",
    "validate_vocabulary",
    "vocab_to_signature",
]
