"""The eval command: truth in a tabulated finite model."""

import logging
from typing import Optional, Tuple

import click

from dfolkit.cli.commands.base import BaseCommand, choice
from dfolkit.cli.commands.proof import MODES
from dfolkit.cli.utils.display import progress
from dfolkit.dfol.proofs import ProofMode
from dfolkit.doctrine.soundness import (
    check_sequent_semantic,
    countermodel,
    models_of,
    soundness_harness,
)
from dfolkit.parsing.files import finite_model, load_model_tables, load_proof
from dfolkit.parsing.reader import parse_sequent
from dfolkit.types import CommandReport

logger = logging.getLogger(__name__)


class EvalCommand(BaseCommand):
    """Evaluate axioms, a sequent and proof conclusions in a finite model."""

    name = "eval"

    def __init__(
        self,
        settings,
        theory_file: str,
        model_file: str,
        sequent: Optional[str],
        proofs: Tuple[str, ...],
        mode: ProofMode,
        search: Optional[int],
    ):
        super().__init__(settings)
        self.theory_file = theory_file
        self.model_file = model_file
        self.sequent = sequent
        self.proofs = proofs
        self.mode = mode
        self.search = search

    def execute(self) -> CommandReport:
        # The model file is replayed against the theory's signature
        theory = self.theory(self.theory_file)
        model = finite_model(load_model_tables(self.model_file), theory, self.fuel)
        failing = model.evaluator(self.fuel).failing_axioms(theory)
        details = {"model": model.describe(), "failing_axioms": failing}
        ok = not failing

        # Optional sequent, with a countermodel search when --search is given
        if self.sequent is not None:
            seq = parse_sequent(self.sequent, theory.signature)
            holds = check_sequent_semantic(model, seq, self.fuel)
            details.update(sequent=str(seq), holds=holds)
            ok = ok and holds
            # Search failures do not change the verdict on the given model
            if self.search is not None:
                with progress(f"Searching models with fibers up to {self.search}..."):
                    found = countermodel(theory, seq, self.search, fuel=self.fuel)
                details["countermodel"] = found.describe() if found is not None else None
        # Proof conclusions are evaluated in the given model and any generated ones
        if self.proofs:
            trees = [load_proof(path, theory).proof for path in self.proofs]
            models = [model]
            if self.search is not None:
                models += list(models_of(theory, self.search, fuel=self.fuel))
            with progress(f"Evaluating {len(trees)} proofs in {len(models)} models..."):
                report = soundness_harness(theory, trees, models, self.mode, self.fuel)
            details.update(
                proofs=report.proofs,
                unaccepted=report.unaccepted,
                models=report.models,
                rejected_models=report.rejected,
                violations=report.violations,
            )
            # A proof the kernel rejects fails the command too
            ok = ok and report.ok and not report.unaccepted
        logger.info("eval %s in %s: %s", self.theory_file, self.model_file, ok)
        return CommandReport(self.name, ok=ok, details=details)


@click.command("eval")
@BaseCommand.common_options
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.argument("model_file", type=click.Path(dir_okay=False))
@click.option("--sequent", "-s", help="Sequent (seq Γ φ ψ) to evaluate")
@click.option(
    "--proof",
    "proofs",
    multiple=True,
    type=click.Path(dir_okay=False),
    help="Proof file whose conclusion must hold; repeatable",
)
@click.option(
    "--mode",
    type=click.Choice(sorted(MODES)),
    default=None,
    help="Rule set the --proof files are checked with; config key 'mode'",
)
@click.option(
    "--search",
    type=click.IntRange(min=1),
    default=None,
    help="Also search generated models with fibers up to this size",
)
@click.pass_context
def eval_cmd(
    ctx: click.Context,
    theory_file: str,
    model_file: str,
    sequent: Optional[str],
    proofs: Tuple[str, ...],
    mode: Optional[str],
    search: Optional[int],
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Evaluate in the finite model MODEL_FILE of the theory THEORY_FILE."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json, mode=mode)
    EvalCommand(
        settings,
        theory_file,
        model_file,
        sequent,
        proofs,
        choice(settings["mode"], MODES, "mode"),
        search,
    ).finish()
