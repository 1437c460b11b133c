"""Inductive construction of signatures.

``extend`` is the only way to add a checked declaration: it verifies the
declaration against the prefix signature before adding it. ``replay`` rebuilds a
signature from a declaration list in order, which is how loaded files are
certified.
"""

import logging
from typing import Iterable, Optional

from dfolkit.checker.kernel import Kernel
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.exceptions import DuplicateSymbolError, KernelError, SignatureError
from dfolkit.signature.declarations import (
    Declaration,
    FunDecl,
    require_determining_seq,
)
from dfolkit.signature.signature import Signature, empty_signature
from dfolkit.syntax.variables import VariableSystem

logger = logging.getLogger(__name__)


def extend(sig: Signature, decl: Declaration, fuel: int = DEFAULT_FUEL) -> Signature:
    """Add ``decl`` to ``sig`` after checking it against ``sig``.

    Args:
        sig: The prefix signature
        decl: A type, function or predicate declaration
        fuel: Reconstruction fuel for the checks

    Returns:
        The extended signature

    Raises:
        DuplicateSymbolError: If the symbol is already declared
        DeterminingSequenceError: If the positions do not determine the context
        SignatureError: If the context or result type fails to check
    """
    if decl.symbol in sig:
        raise DuplicateSymbolError(f"symbol {decl.symbol} already declared", rule="extend")
    if decl.symbol in set(decl.context.variables):
        raise SignatureError(f"{decl.symbol} is used as a variable of its own context")
    require_determining_seq(decl.context, decl.positions, decl.symbol)

    kernel = Kernel(sig, fuel=fuel)
    try:
        if isinstance(decl, FunDecl):
            kernel.check_type(decl.context, decl.result)
        else:
            kernel.check_context(decl.context)
    except KernelError as e:
        raise SignatureError(
            f"declaration of {decl.symbol} does not check: {e}", rule=e.rule, path=e.path
        ) from e

    logger.debug("extended signature with %s %s", type(decl).__name__, decl.symbol)
    return sig.add(decl)


def replay(
    decls: Iterable[Declaration],
    variables: Optional[VariableSystem] = None,
    fuel: int = DEFAULT_FUEL,
) -> Signature:
    """Rebuild a signature declaration by declaration.

    Raises:
        SignatureError: naming the first declaration that fails, with its
            1-based index as the error path
    """
    sig = empty_signature(variables)
    for index, decl in enumerate(decls, start=1):
        try:
            sig = extend(sig, decl, fuel=fuel)
        except SignatureError as e:
            raise e.at(index)
    return sig


def revalidate(sig: Signature, fuel: int = DEFAULT_FUEL) -> Signature:
    """Replay ``sig`` from scratch along its build order."""
    return replay(list(sig), sig.variables, fuel=fuel)

