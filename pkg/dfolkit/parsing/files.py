"""Loading documents from disk."""

import logging
from pathlib import Path
from typing import Union

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.finset import FinSetCwF
from dfolkit.cwf.model import tabulate_model
from dfolkit.dfol.theory import Theory
from dfolkit.doctrine.evaluate import tabulated_predicates
from dfolkit.doctrine.soundness import FiniteModel
from dfolkit.doctrine.subset import SubsetDoctrine
from dfolkit.exceptions import ModelError, ParseError
from dfolkit.folds.vocabulary import Vocabulary, validate_vocabulary
from dfolkit.parsing.reader import (
    ModelTables,
    ProofFile,
    parse_model,
    parse_proof,
    parse_theory,
    parse_vocabulary,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read file: {e}", str(path)) from e


def load_theory(path: PathLike, fuel: int = DEFAULT_FUEL) -> Theory:
    theory = parse_theory(read_text(path), str(path), fuel)
    logger.info("loaded theory %s: %d declarations", theory.name, len(theory.signature))
    return theory


def load_proof(path: PathLike, theory: Theory) -> ProofFile:
    return parse_proof(read_text(path), theory, str(path))


def load_vocabulary(path: PathLike) -> Vocabulary:
    """Read and validate a vocabulary file.

    Raises:
        ParseError: On malformed text
        VocabularyError: If the category laws or the FOLDS conditions fail
    """
    return validate_vocabulary(parse_vocabulary(read_text(path), str(path)))


def load_model_tables(path: PathLike) -> ModelTables:
    return parse_model(read_text(path), str(path))


def finite_model(tables: ModelTables, theory: Theory, fuel: int = DEFAULT_FUEL) -> FiniteModel:
    """The finite-set model the tables describe, with predicates as subsets.

    Raises:
        ModelError: If the tables are about another theory or miss a symbol
        FiberMismatchError: If a value falls outside its fiber
    """
    if tables.theory != theory.name:
        raise ModelError(f"model is about {tables.theory}, not {theory.name}", rule="model")
    cwf = FinSetCwF()
    model = tabulate_model(cwf, theory.signature, tables.fibers, tables.values, fuel)
    preds = tabulated_predicates(SubsetDoctrine(cwf), model, tables.holds, fuel)
    return FiniteModel(model, preds)
