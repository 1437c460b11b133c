"""Exception hierarchy shared by every kernel component.

All kernel failures derive from :class:`KernelError`. The ``rule`` attribute
names the inference rule or operation that was being attempted and ``path``
is the 1-based position path of the offending sub-term, context entry or
proof node.
"""

from typing import Any, Optional, Sequence, Tuple


class KernelError(Exception):
    """Base exception for every rejection raised by the kernel."""

    def __init__(self, message: str, rule: Optional[str] = None, path: Sequence[int] = ()):
        super().__init__(message)
        self.message = message
        self.rule = rule
        self.path: Tuple[int, ...] = tuple(path)

    def at(self, *prefix: int) -> "KernelError":
        """Return the same error with ``prefix`` prepended to its path."""
        self.path = tuple(prefix) + self.path
        return self

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "rule": self.rule,
            "path": list(self.path),
        }

    def __str__(self) -> str:
        where = ""
        if self.rule:
            where += f" [{self.rule}]"
        if self.path:
            where += " at " + ".".join(str(p) for p in self.path)
        return f"{self.message}{where}"


class SubstitutionError(KernelError):
    """Simultaneous substitution given mismatched or repeated targets."""


class SignatureError(KernelError):
    """A declaration cannot be added to a signature."""


class DuplicateSymbolError(SignatureError):
    """A symbol is declared twice."""


class DeterminingSequenceError(SignatureError):
    """Positions do not form a determining sequence for their context."""


class CheckError(KernelError):
    """A judgement is not derivable."""


class ReconstructionError(CheckError):
    """Hidden arguments could not be recovered or recovered inconsistently."""


class UndecidedError(CheckError):
    """The checker ran out of fuel before reaching a verdict."""


class SideConditionError(KernelError):
    """A structural transform was requested outside its side conditions."""


class VocabularyError(KernelError):
    """A finite category violates one of the vocabulary laws."""

    def __init__(self, message: str, law: str, path: Sequence[int] = ()):
        super().__init__(message, rule=law, path=path)
        self.law = law


class FiberMismatchError(KernelError):
    """Semantic data supplied over the wrong object or type."""


class ModelError(KernelError):
    """A model assignment is incomplete or inconsistent."""


class FormulaError(KernelError):
    """A formula is not well formed in its context."""


class ProofError(KernelError):
    """A proof tree node does not match its rule.

    ``computed`` and ``supplied`` carry the two disagreeing forms when the
    failure is a substitution mismatch.
    """

    def __init__(
        self,
        message: str,
        rule: Optional[str] = None,
        path: Sequence[int] = (),
        computed: Any = None,
        supplied: Any = None,
    ):
        super().__init__(message, rule=rule, path=path)
        self.computed = computed
        self.supplied = supplied

    @property
    def node_path(self) -> Tuple[int, ...]:
        return self.path

    def to_dict(self) -> dict:
        report = super().to_dict()
        if self.computed is not None:
            report["computed"] = str(self.computed)
            report["supplied"] = str(self.supplied)
        return report


class DoctrineError(KernelError):
    """Doctrine operations applied across contexts or without support."""


class ParseError(KernelError):
    """Input text does not follow one of the file grammars."""

    def __init__(
        self,
        message: str,
        filename: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        super().__init__(message, rule="parse")
        self.filename = filename
        self.line = line
        self.column = column

    def to_dict(self) -> dict:
        report = super().to_dict()
        report.update(file=self.filename, line=self.line, column=self.column)
        return report

    def __str__(self) -> str:
        location = self.filename or "<input>"
        if self.line is not None:
            location += f":{self.line}"
            if self.column is not None:
                location += f":{self.column}"
        return f"{location}: {self.message}"
