"""Type, function and predicate declarations with determining sequences."""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Sequence, Tuple, Union

from dfolkit.exceptions import DeterminingSequenceError, SignatureError
from dfolkit.syntax.terms import PreContext, PreType, free_vars, top_vars
from dfolkit.syntax.variables import Variable


class DeclKind(str, Enum):
    TYPE = "type"
    FUN = "fun"
    PRED = "pred"


@dataclass(frozen=True)
class DeterminingSeqReport:
    """Outcome of validating a determining sequence against its context."""

    positions: Tuple[int, ...]
    missing: FrozenSet[Variable] = frozenset()
    ordering_fault: Optional[int] = None
    out_of_range: Tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.missing and self.ordering_fault is None and not self.out_of_range

    def describe(self) -> str:
        if self.ok:
            return "ok"
        problems = []
        if self.out_of_range:
            problems.append("positions out of range: " + ", ".join(map(str, self.out_of_range)))
        if self.ordering_fault is not None:
            problems.append(f"positions not strictly increasing at index {self.ordering_fault}")
        if self.missing:
            names = ", ".join(sorted(str(x) for x in self.missing))
            problems.append(f"top variables not covered: {names}")
        return "; ".join(problems)


def validate_determining_seq(ctx: PreContext, positions: Sequence[int]) -> DeterminingSeqReport:
    """Check that ``positions`` is strictly increasing and covers TV(ctx)."""
    positions = tuple(positions)
    out_of_range = tuple(i for i in positions if not 1 <= i <= len(ctx))
    ordering_fault = None
    for k in range(1, len(positions)):
        if positions[k] <= positions[k - 1]:
            ordering_fault = k + 1
            break
    covered = {ctx.variables[i - 1] for i in positions if 1 <= i <= len(ctx)}
    missing = top_vars(ctx) - covered
    return DeterminingSeqReport(positions, frozenset(missing), ordering_fault, out_of_range)


def require_determining_seq(ctx: PreContext, positions: Sequence[int], symbol: str) -> None:
    report = validate_determining_seq(ctx, positions)
    if not report.ok:
        raise DeterminingSequenceError(
            f"{symbol}: ({' '.join(map(str, positions))}) is not a determining sequence: "
            + report.describe(),
            rule="determining-sequence",
        )


@dataclass(frozen=True)
class _Declaration:
    context: PreContext
    symbol: str
    positions: Tuple[int, ...]

    @property
    def arity(self) -> int:
        """Number of explicit arguments."""
        return len(self.positions)

    @property
    def standard_form(self) -> bool:
        return self.positions == tuple(range(1, len(self.context) + 1))

    @property
    def hidden(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, len(self.context) + 1) if i not in self.positions)


@dataclass(frozen=True)
class TypeDecl(_Declaration):
    kind = DeclKind.TYPE

    def __str__(self) -> str:
        return f"(type {self.symbol} {self.context} (det {' '.join(map(str, self.positions))}))"


@dataclass(frozen=True)
class FunDecl(_Declaration):
    result: PreType
    kind = DeclKind.FUN

    def __post_init__(self) -> None:
        stray = free_vars(self.result) - set(self.context.variables)
        if stray:
            raise SignatureError(
                f"{self.symbol}: result type mentions undeclared "
                + ", ".join(sorted(map(str, stray))),
                rule="declaration",
            )

    def __str__(self) -> str:
        return (
            f"(fun {self.symbol} {self.context} (det {' '.join(map(str, self.positions))})"
            f" (ret {self.result}))"
        )


@dataclass(frozen=True)
class PredDecl(_Declaration):
    kind = DeclKind.PRED

    def __str__(self) -> str:
        return f"(pred {self.symbol} {self.context} (det {' '.join(map(str, self.positions))}))"


Declaration = Union[TypeDecl, FunDecl, PredDecl]


def standard_positions(ctx: PreContext) -> Tuple[int, ...]:
    return tuple(range(1, len(ctx) + 1))
