"""First-order matching used to recover hidden arguments."""

from typing import List, Mapping, Optional, Sequence, Union

from dfolkit.exceptions import ReconstructionError
from dfolkit.signature.declarations import FunDecl, PredDecl, TypeDecl
from dfolkit.syntax.terms import PreTerm, PreType, Var
from dfolkit.syntax.variables import Variable


def seed(
    decl: Union[TypeDecl, FunDecl, PredDecl], explicit: Sequence[PreTerm]
) -> List[Optional[PreTerm]]:
    """Place the explicit arguments at their declared positions."""
    solved: List[Optional[PreTerm]] = [None] * len(decl.context)
    for i, b in zip(decl.positions, explicit):
        solved[i - 1] = b
    return solved


def match(
    pattern: Union[PreTerm, PreType],
    actual: Union[PreTerm, PreType],
    slots: Mapping[Variable, int],
    solved: List[Optional[PreTerm]],
    path: Sequence[int] = (),
) -> None:
    """Extend ``solved`` so that ``pattern[solved] == actual``.

    Pattern variables are the keys of ``slots``; a variable already solved must
    agree with what it is matched against.

    Raises:
        ReconstructionError: on a head mismatch or a conflicting binding
    """
    if isinstance(pattern, Var) and pattern.name in slots:
        k = slots[pattern.name]
        current = solved[k]
        if current is None:
            solved[k] = actual  # type: ignore[assignment]
        elif current != actual:
            raise ReconstructionError(
                f"conflicting values for hidden argument {pattern.name}: {current} and {actual}",
                rule="match",
                path=path,
            )
        return
    if (
        isinstance(pattern, Var)
        or type(pattern) is not type(actual)
        or pattern.head != actual.head  # type: ignore[union-attr]
        or len(pattern.args) != len(actual.args)  # type: ignore[union-attr]
    ):
        if pattern == actual:
            return
        raise ReconstructionError(
            f"cannot match {actual} against {pattern}", rule="match", path=path
        )
    for k, (p, a) in enumerate(zip(pattern.args, actual.args), start=1):
        match(p, a, slots, solved, tuple(path) + (k,))
