"""Signature and vocabulary commands: check-sig, folds2sig, sig2folds."""

import logging
from typing import Optional

import click

from dfolkit.cli.commands.base import BaseCommand
from dfolkit.dfol.theory import Theory
from dfolkit.folds.isomorphism import find_isomorphism
from dfolkit.folds.translate import object_context, signature_to_vocab, vocab_to_signature
from dfolkit.parsing.files import load_vocabulary
from dfolkit.parsing.printer import print_theory, print_vocabulary
from dfolkit.syntax.variables import Flavor
from dfolkit.types import CommandReport

logger = logging.getLogger(__name__)


class CheckSignatureCommand(BaseCommand):
    """Replay a theory file's declarations and axioms."""

    name = "check-sig"

    def __init__(self, settings, theory_file: str):
        super().__init__(settings)
        self.theory_file = theory_file

    def execute(self) -> CommandReport:
        theory = self.theory(self.theory_file)
        # Replay already happened while loading; only the summary remains
        sig = theory.signature
        logger.info("replayed %d declarations of %s", len(sig), theory.name)
        return CommandReport(
            self.name,
            details={
                "theory": theory.name,
                "variables": (Flavor.DEBRUIJN if sig.is_debruijn else Flavor.UNRESTRICTED).value,
                "declarations": len(sig),
                "types": [d.symbol for d in sig.type_decls],
                "functions": [d.symbol for d in sig.fun_decls],
                "predicates": [d.symbol for d in sig.pred_decls],
                "axioms": [name for name, _ in theory],
                "standard_form": sig.standard_form,
                "folds_like": sig.folds_like,
            },
        )


class FoldsToSignatureCommand(BaseCommand):
    """Σ_K for a vocabulary file."""

    name = "folds2sig"

    def __init__(self, settings, vocabulary_file: str):
        super().__init__(settings)
        self.vocabulary_file = vocabulary_file

    def execute(self) -> CommandReport:
        vocab = load_vocabulary(self.vocabulary_file)
        # Levels, object contexts and top-most arrows are reported beside the theory
        sig = vocab_to_signature(vocab, self.fuel)
        return CommandReport(
            self.name,
            details={
                "vocabulary": vocab.name,
                "level_order": list(vocab.level_order),
                "contexts": [f"{obj}: {object_context(vocab, obj)}" for obj in vocab.level_order],
                "top_most": [
                    f"{obj}: {' '.join(a.name for a in vocab.irreducible(obj))}"
                    for obj in vocab.level_order
                ],
            },
            document=print_theory(Theory(vocab.name, sig)),
        )


class SignatureToFoldsCommand(BaseCommand):
    """K_Σ for a FOLDS-like theory file, optionally compared with a vocabulary."""

    name = "sig2folds"

    def __init__(self, settings, theory_file: str, compare: Optional[str]):
        super().__init__(settings)
        self.theory_file = theory_file
        self.compare = compare

    def execute(self) -> CommandReport:
        theory = self.theory(self.theory_file)
        vocab = signature_to_vocab(theory.signature, theory.name)
        details = {
            "vocabulary": vocab.name,
            "objects": list(vocab.objects),
            "arrows": len(vocab.arrows),
            "equations": len(vocab.table),
        }
        # Optional comparison; the command fails when no isomorphism exists
        ok = True
        if self.compare:
            other = load_vocabulary(self.compare)
            iso = find_isomorphism(vocab, other)
            ok = iso is not None
            details["isomorphic_to"] = other.name if ok else None
            if iso is not None:
                details["object_map"] = [f"{a} -> {b}" for a, b in sorted(iso.objects.items())]
            logger.info("isomorphism %s and %s: %s", vocab.name, other.name, ok)
        return CommandReport(self.name, ok=ok, details=details, document=print_vocabulary(vocab))


@click.command("check-sig")
@BaseCommand.common_options
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.pass_context
def check_sig(ctx: click.Context, theory_file: str, fuel: Optional[int], as_json: Optional[bool]):
    """Check every declaration and axiom of THEORY_FILE in order."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    CheckSignatureCommand(settings, theory_file).finish()


@click.command("folds2sig")
@BaseCommand.common_options
@click.argument("vocabulary_file", type=click.Path(dir_okay=False))
@click.pass_context
def folds2sig(
    ctx: click.Context, vocabulary_file: str, fuel: Optional[int], as_json: Optional[bool]
):
    """Translate a FOLDS vocabulary into a dependent-sort signature."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    FoldsToSignatureCommand(settings, vocabulary_file).finish()


@click.command("sig2folds")
@BaseCommand.common_options
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.option(
    "--compare",
    type=click.Path(dir_okay=False),
    help="Vocabulary file the result must be isomorphic to",
)
@click.pass_context
def sig2folds(
    ctx: click.Context,
    theory_file: str,
    compare: Optional[str],
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Translate a FOLDS-like signature back into a vocabulary."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    SignatureToFoldsCommand(settings, theory_file, compare).finish()
