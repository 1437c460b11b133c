"""Translations between vocabularies and FOLDS-like signatures.

``vocab_to_signature`` gives one type symbol per object. The context of object
``A`` has one variable per non-identity arrow out of ``A`` (in the enumeration
order of :meth:`Vocabulary.enumeration`), and the variable for ``x: A -> C`` has
type ``C`` applied to the composites ``y . x`` for the variables ``y`` of ``C``.

``signature_to_vocab`` reads a signature back: each context variable ``x^i_j``
of ``S_i`` becomes an arrow ``S_i -> S_f(i,j)`` and the k-th argument of its
type fixes the composite ``x^f(i,j)_k . x^i_j``.
"""

import logging
from typing import Dict, List, Tuple

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.exceptions import VocabularyError
from dfolkit.folds.vocabulary import (
    Arrow,
    Equation,
    RawVocabulary,
    Vocabulary,
    validate_vocabulary,
)
from dfolkit.signature.build import extend
from dfolkit.signature.declarations import TypeDecl, standard_positions
from dfolkit.signature.signature import Signature, empty_signature
from dfolkit.syntax.terms import PreContext, PreType, Var
from dfolkit.syntax.variables import VariableSystem

logger = logging.getLogger(__name__)


def variable_name(k: int) -> str:
    return f"x{k}"


def arrow_name(obj: str, variable: object) -> str:
    return f"{obj}.{variable}"


def object_context(vocab: Vocabulary, obj: str) -> PreContext:
    """Γ_obj."""
    enumeration = vocab.enumeration(obj)
    index = {a.name: k for k, a in enumerate(enumeration, start=1)}
    entries = []
    for k, x in enumerate(enumeration, start=1):
        args = tuple(
            Var(variable_name(index[vocab.compose(y, x).name]))
            for y in vocab.enumeration(x.cod)
        )
        entries.append((variable_name(k), PreType(x.cod, args)))
    return PreContext(tuple(entries))


def vocab_to_signature(vocab: Vocabulary, fuel: int = DEFAULT_FUEL) -> Signature:
    """Σ_K: a standard-form signature with one type declaration per object.

    Declarations are added through :func:`dfolkit.signature.build.extend` in
    the order of ``vocab.level_order``, so the result is checked as it is built.
    """
    sig = empty_signature(VariableSystem.unrestricted())
    for obj in vocab.level_order:
        ctx = object_context(vocab, obj)
        sig = extend(sig, TypeDecl(ctx, obj, standard_positions(ctx)), fuel=fuel)
    logger.debug("built signature for vocabulary %s", vocab.name)
    return sig


def signature_to_vocab(sig: Signature, name: str = "K") -> Vocabulary:
    """K_Σ for a FOLDS-like standard-form signature.

    Predicate declarations are ignored.

    Raises:
        VocabularyError: If the signature declares function symbols, is not in
            standard form, has non-variable type arguments, or the resulting
            table fails the vocabulary laws (``law="folds-like"`` for the first
            three)
    """
    if sig.fun_decls:
        raise VocabularyError(
            "signature declares function symbols: "
            + ", ".join(d.symbol for d in sig.fun_decls),
            law="folds-like",
        )
    decls = sig.type_decls
    arrows: List[Arrow] = []
    variables: Dict[Tuple[str, object], str] = {}
    for decl in decls:
        if not decl.standard_form:
            raise VocabularyError(f"{decl.symbol} is not on standard form", law="folds-like")
        for x, A in decl.context:
            arrow = Arrow(arrow_name(decl.symbol, x), decl.symbol, A.head)
            arrows.append(arrow)
            variables[(decl.symbol, x)] = arrow.name

    equations: List[Equation] = []
    for index, decl in enumerate(decls, start=1):
        for j, (x, A) in enumerate(decl.context, start=1):
            target = sig.type_decl(A.head)
            if len(A.args) != len(target.context):
                raise VocabularyError(
                    f"{A} in the context of {decl.symbol} has the wrong arity",
                    law="folds-like",
                    path=(index, j),
                )
            for (y, _), arg in zip(target.context, A.args):
                if not isinstance(arg, Var):
                    raise VocabularyError(
                        f"argument {arg} of {A} is not a variable",
                        law="folds-like",
                        path=(index, j),
                    )
                equations.append(
                    Equation(
                        variables[(target.symbol, y)],
                        variables[(decl.symbol, x)],
                        variables[(decl.symbol, arg.name)],
                    )
                )
    raw = RawVocabulary(name, tuple(d.symbol for d in decls), tuple(arrows), tuple(equations))
    return validate_vocabulary(raw)


def irreducible_arrows(vocab: Vocabulary, obj: str) -> Tuple[Arrow, ...]:
    """Arrows out of ``obj`` that do not factor through two non-identity arrows."""
    return vocab.irreducible(obj)
