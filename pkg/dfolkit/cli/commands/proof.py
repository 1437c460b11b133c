"""The check-proof command."""

import logging
from typing import Any, Dict, Optional

import click

from dfolkit.cli.commands.base import BaseCommand, choice
from dfolkit.dfol.convert import dfol_to_star
from dfolkit.dfol.proofs import Proof, ProofCheck, ProofMode, check_proof
from dfolkit.parsing.files import load_proof
from dfolkit.parsing.printer import print_proof
from dfolkit.types import CommandReport

logger = logging.getLogger(__name__)

MODES = {m.value: m for m in ProofMode}


def proof_dict(node: Proof) -> Dict[str, Any]:
    return {
        "rule": node.rule.value,
        "conclusion": str(node.conclusion),
        "premises": [proof_dict(p) for p in node.premises],
    }


def check_details(check: ProofCheck) -> Dict[str, Any]:
    details = check.to_dict()
    # One "Rule xN" entry per rule
    details["rules"] = [f"{rule} x{count}" for rule, count in details["rules"].items()]
    return details


class CheckProofCommand(BaseCommand):
    """Check a proof file against its theory, optionally converting it to DFOL*."""

    name = "check-proof"

    def __init__(
        self,
        settings,
        theory_file: str,
        proof_file: str,
        mode: ProofMode,
        convert: bool,
        show: bool,
    ):
        super().__init__(settings)
        self.theory_file = theory_file
        self.proof_file = proof_file
        self.mode = mode
        self.convert = convert
        self.show = show

    def execute(self) -> CommandReport:
        # Load and check; a rejection raises and becomes exit code 1
        theory = self.theory(self.theory_file)
        proof = load_proof(self.proof_file, theory).proof
        result = check_proof(theory, proof, self.mode, self.fuel)
        logger.info("%s accepted in %s mode", self.proof_file, self.mode.value)
        details = check_details(result)
        document = None
        if self.show:
            details["derivation"] = proof_dict(proof)
        # The converted proof must pass the DFOL* checker on its own
        if self.convert and self.mode is ProofMode.DFOL:
            converted = dfol_to_star(theory, proof, self.fuel)
            star = check_proof(theory, converted, ProofMode.STAR, self.fuel)
            details["converted_nodes"] = star.nodes
            details["converted_height"] = star.height
            document = print_proof(theory.name, converted)
        return CommandReport(self.name, details=details, document=document)


@click.command("check-proof")
@BaseCommand.common_options
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.argument("proof_file", type=click.Path(dir_okay=False))
@click.option(
    "--mode",
    type=click.Choice(sorted(MODES)),
    default=None,
    help="Rule set: dfol (capture-avoiding) or dfolstar (syntactic, up to α); config key 'mode'",
)
@click.option("--convert", is_flag=True, help="Also convert a dfol proof to dfolstar and recheck")
@click.option("--show-proof", "show", is_flag=True, help="Print the proof tree")
@click.pass_context
def check_proof_cmd(
    ctx: click.Context,
    theory_file: str,
    proof_file: str,
    mode: Optional[str],
    convert: bool,
    show: bool,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Check the proof in PROOF_FILE against the theory in THEORY_FILE."""
    # --mode falls back to the config file, then to dfol
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json, mode=mode)
    CheckProofCommand(
        settings, theory_file, proof_file, choice(settings["mode"], MODES, "mode"), convert, show
    ).finish()
