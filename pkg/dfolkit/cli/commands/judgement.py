"""Judgement commands: check, infer, standardize and transform."""

import logging
from typing import Any, Dict, Optional

import click

from dfolkit.checker.judgements import Derivation, Mode
from dfolkit.checker.kernel import Kernel
from dfolkit.checker.standardize import standardize
from dfolkit.checker.structural import Transform, structural_transform
from dfolkit.cli.commands.base import BaseCommand, choice
from dfolkit.cli.constants import EX_USAGE
from dfolkit.cli.exceptions import CLIException
from dfolkit.dfol.formation import check_formula
from dfolkit.dfol.standardize import standardize_formula
from dfolkit.parsing.reader import (
    parse_context,
    parse_formula,
    parse_judgement,
    parse_term,
    parse_type,
    parse_variable,
)
from dfolkit.types import CommandReport

logger = logging.getLogger(__name__)

RULES = {"r5": Mode.R5, "r5star": Mode.R5STAR}


def derivation_details(d: Derivation, show: bool) -> Dict[str, Any]:
    # Summary always; the tree only on request
    details: Dict[str, Any] = {"rule": d.rule.value, "height": d.height, "size": d.size()}
    if show:
        details["derivation"] = d.to_dict()
    return details


class CheckCommand(BaseCommand):
    name = "check"

    def __init__(self, settings, theory_file: str, judgement: str, rules: Mode, show: bool):
        super().__init__(settings)
        self.theory_file = theory_file
        self.judgement = judgement
        self.rules = rules
        self.show = show

    def execute(self) -> CommandReport:
        sig = self.theory(self.theory_file).signature
        j = parse_judgement(self.judgement, sig)
        d = Kernel(sig, mode=self.rules, fuel=self.fuel).check(j)
        details = {"judgement": str(j), "mode": self.rules.value}
        details.update(derivation_details(d, self.show))
        return CommandReport(self.name, details=details)


class InferCommand(BaseCommand):
    name = "infer"

    def __init__(self, settings, theory_file: str, term: str, context: str, show: bool):
        super().__init__(settings)
        self.theory_file = theory_file
        self.term = term
        self.context = context
        self.show = show

    def execute(self) -> CommandReport:
        sig = self.theory(self.theory_file).signature
        ctx = parse_context(self.context, sig)
        a = parse_term(self.term, sig)
        A, d = Kernel(sig, fuel=self.fuel).infer_type(ctx, a)
        details = {"context": str(ctx), "term": str(a), "type": str(A)}
        details.update(derivation_details(d, self.show))
        return CommandReport(self.name, details=details)


class StandardizeCommand(BaseCommand):
    """Move a judgement, or a formula in context, onto the canonical variables."""

    name = "standardize"

    def __init__(
        self,
        settings,
        theory_file: str,
        judgement: Optional[str],
        formula: Optional[str],
        context: str,
    ):
        super().__init__(settings)
        self.theory_file = theory_file
        self.judgement = judgement
        self.formula = formula
        self.context = context

    def execute(self) -> CommandReport:
        sig = self.theory(self.theory_file).signature
        # Judgements carry the comparison maps both ways
        if self.judgement is not None:
            result = standardize(sig, parse_judgement(self.judgement, sig), fuel=self.fuel)
            return CommandReport(
                self.name,
                details={
                    "judgement": str(result.judgement),
                    "forward": [str(t) for t in result.forward.terms],
                    "backward": [str(t) for t in result.backward.terms],
                    "height": result.derivation.height,
                },
            )
        # Formulas are checked in DFOL* form before renaming
        ctx = parse_context(self.context, sig)
        phi = parse_formula(str(self.formula), sig)
        check_formula(sig, ctx, phi, star=True, fuel=self.fuel)
        target, moved = standardize_formula(sig, ctx, phi)
        return CommandReport(self.name, details={"context": str(target), "formula": str(moved)})


class TransformCommand(BaseCommand):
    """Weakening, strengthening or interchange of a checked judgement."""

    name = "transform"

    def __init__(
        self,
        settings,
        theory_file: str,
        judgement: str,
        kind: Transform,
        position: int,
        variable: Optional[str],
        type_text: Optional[str],
        show: bool,
    ):
        super().__init__(settings)
        self.theory_file = theory_file
        self.judgement = judgement
        self.kind = kind
        self.position = position
        self.variable = variable
        self.type_text = type_text
        self.show = show

    def execute(self) -> CommandReport:
        sig = self.theory(self.theory_file).signature
        # Structural rules need unrestricted variables
        if sig.is_debruijn:
            sig = sig.unrestricted()
        j = parse_judgement(self.judgement, sig)
        d = Kernel(sig, fuel=self.fuel).check(j)
        variable = type_ = None
        # Only weakening inserts a new entry
        if self.kind is Transform.WEAKEN:
            if self.variable is None or self.type_text is None:
                raise CLIException("--weaken needs --var and --type", EX_USAGE)
            variable = parse_variable(self.variable)
            type_ = parse_type(self.type_text, sig)
        result = structural_transform(
            self.kind.value, sig, d, self.position, variable, type_, fuel=self.fuel
        )
        details = {
            "transform": self.kind.value,
            "position": self.position,
            "from": str(j),
            "to": str(result.conclusion),
        }
        details.update(derivation_details(result, self.show))
        return CommandReport(self.name, details=details)


def _rules_option(f):
    return click.option(
        "--rules",
        type=click.Choice(sorted(RULES)),
        default="r5",
        show_default=True,
        help="Function-application rule: r5, or r5star without the result-type premise",
    )(f)


def _show_option(f):
    return click.option(
        "--show-derivation", "show", is_flag=True, help="Print the full derivation tree"
    )(f)


@click.command("check")
@BaseCommand.common_options
@_rules_option
@_show_option
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.option("--judgement", "-j", required=True, help="(context Γ), (type Γ A) or (term Γ a A)")
@click.pass_context
def check(
    ctx: click.Context,
    theory_file: str,
    judgement: str,
    rules: str,
    show: bool,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Decide a judgement over the signature of THEORY_FILE."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    CheckCommand(settings, theory_file, judgement, choice(rules, RULES, "rules"), show).finish()


@click.command("infer")
@BaseCommand.common_options
@_show_option
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.option("--term", "-t", required=True, help="The term whose type is inferred")
@click.option("--ctx", "context", default="(ctx)", show_default=True, help="The context")
@click.pass_context
def infer(
    ctx: click.Context,
    theory_file: str,
    term: str,
    context: str,
    show: bool,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Infer the unique type of a term in context."""
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    InferCommand(settings, theory_file, term, context, show).finish()


@click.command("standardize")
@BaseCommand.common_options
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.option("--judgement", "-j", help="Judgement to move onto the canonical variables")
@click.option("--formula", "-f", help="Formula to standardize, with --ctx")
@click.option("--ctx", "context", default="(ctx)", show_default=True, help="Context of --formula")
@click.pass_context
def standardize_cmd(
    ctx: click.Context,
    theory_file: str,
    judgement: Optional[str],
    formula: Optional[str],
    context: str,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Rename a judgement or formula onto the signature's canonical variable sequence."""
    # One input kind per invocation
    if (judgement is None) == (formula is None):
        raise click.UsageError("give exactly one of --judgement and --formula")
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    StandardizeCommand(settings, theory_file, judgement, formula, context).finish()


@click.command("transform")
@BaseCommand.common_options
@_show_option
@click.argument("theory_file", type=click.Path(dir_okay=False))
@click.option("--judgement", "-j", required=True, help="The judgement to transform")
@click.option("--weaken", type=int, help="Insert --var : --type after this many entries")
@click.option("--strengthen", type=int, help="Drop the context entry at this position")
@click.option("--interchange", type=int, help="Swap the entries at this position and the next")
@click.option("--var", "variable", help="Variable inserted by --weaken")
@click.option("--type", "type_text", help="Type of the variable inserted by --weaken")
@click.pass_context
def transform(
    ctx: click.Context,
    theory_file: str,
    judgement: str,
    weaken: Optional[int],
    strengthen: Optional[int],
    interchange: Optional[int],
    variable: Optional[str],
    type_text: Optional[str],
    show: bool,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Apply a structural rule to a checked judgement and recheck the result."""
    given = {
        Transform.WEAKEN: weaken,
        Transform.STRENGTHEN: strengthen,
        Transform.INTERCHANGE: interchange,
    }
    # Exactly one rule per invocation
    chosen = [(kind, position) for kind, position in given.items() if position is not None]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --weaken, --strengthen and --interchange")
    kind, position = chosen[0]
    settings = BaseCommand.resolve(ctx, fuel=fuel, as_json=as_json)
    TransformCommand(
        settings, theory_file, judgement, kind, position, variable, type_text, show
    ).finish()
