"""The laws command: exhaustive law suites over small finite data."""

import logging
from typing import List, Optional

import click

from dfolkit.cli.commands.base import BaseCommand
from dfolkit.cli.utils.display import progress
from dfolkit.cwf.constructions import Constructions
from dfolkit.cwf.finset import FinSetCwF
from dfolkit.cwf.free import FreeCwF, free_sample
from dfolkit.cwf.laws import LawReport, construction_laws, finset_sample, run_cwf_laws
from dfolkit.doctrine.horn import horn_doctrine
from dfolkit.doctrine.laws import horn_laws, run_doctrine_laws
from dfolkit.doctrine.pat import pat_doctrine
from dfolkit.doctrine.subset import subset_doctrine
from dfolkit.types import CommandReport, LawSummary

logger = logging.getLogger(__name__)

SUITES = ("cwf", "constructions", "doctrine")
DOCTRINES = ("subset", "pat", "horn")


def summary(suite: str, size: int, reports: List[LawReport]) -> LawSummary:
    return LawSummary(suite, size, [r.to_dict() for r in reports])


class LawsCommand(BaseCommand):
    """Run one law suite and report counts per law."""

    name = "laws"

    def __init__(
        self,
        settings,
        suite: str,
        doctrines: List[str],
        theory_file: Optional[str],
        max_height: int,
        representatives: bool = False,
    ):
        super().__init__(settings)
        self.suite = suite
        self.size = int(settings["law_size"])
        self.representatives = representatives
        self.doctrines = doctrines
        self.theory_file = theory_file
        self.max_height = max_height

    def summaries(self) -> List[LawSummary]:
        cwf = FinSetCwF()
        # Type constructions build their own contexts per size
        if self.suite == "constructions":
            reports = construction_laws(
                Constructions(cwf), self.size, representatives=self.representatives
            )
            return [summary("constructions", self.size, reports)]
        # The cwf and doctrine suites share one finite-set sample
        sample = finset_sample(cwf, self.size, self.representatives)
        if self.suite == "cwf":
            found = [summary("finset cwf", self.size, run_cwf_laws(cwf, sample))]
            # The free cwf is only checked when a theory supplies a signature
            if self.theory_file is not None:
                sig = self.theory(self.theory_file).signature
                free = FreeCwF(sig, verify=True, fuel=self.fuel)
                reports = run_cwf_laws(free, free_sample(sig, self.max_height))
                found.append(summary("free cwf", self.max_height, reports))
            return found
        # One summary per requested doctrine
        found = []
        for name in self.doctrines:
            if name == "horn":
                reports = horn_laws(horn_doctrine(cwf), sample)
            elif name == "pat":
                reports = run_doctrine_laws(pat_doctrine(cwf, range(self.size)), sample)
            else:
                reports = run_doctrine_laws(subset_doctrine(cwf), sample)
            found.append(summary(f"{name} doctrine", self.size, reports))
        return found

    def execute(self) -> CommandReport:
        with progress(f"Checking {self.suite} laws at size {self.size}..."):
            found = self.summaries()
        for s in found:
            logger.info("%s: %d checked, %d failed", s.suite, s.checked, s.failed)
        # Totals first, then the per-suite breakdown
        return CommandReport(
            self.name,
            ok=all(s.ok for s in found),
            details={
                "suite": self.suite,
                "size": self.size,
                "representatives": self.representatives,
                "checked": sum(s.checked for s in found),
                "failed": sum(s.failed for s in found),
                "suites": [s.to_dict() for s in found],
            },
        )


@click.command("laws")
@BaseCommand.common_options
@click.option("--suite", type=click.Choice(SUITES), required=True, help="Which laws to check")
@click.option(
    "--size",
    type=click.IntRange(min=0),
    default=None,
    help="Fibers range over subsets of 0..size-1 (config key 'law_size', default 2)",
)
@click.option(
    "--doctrine",
    "doctrines",
    type=click.Choice(DOCTRINES),
    multiple=True,
    help="Doctrines for --suite doctrine; repeatable, default all",
)
@click.option(
    "--theory",
    "theory_file",
    type=click.Path(dir_okay=False),
    help="Also check the free cwf of this theory's signature (--suite cwf)",
)
@click.option(
    "--max-height",
    type=click.IntRange(min=0),
    default=None,
    help="Derivation height bound for the free cwf sample (config key 'max_height')",
)
@click.option(
    "--representatives/--all-labelings",
    default=False,
    help="One context and fiber per cardinality instead of every subset (tractable at size 3)",
)
@click.pass_context
def laws(
    ctx: click.Context,
    suite: str,
    size: Optional[int],
    doctrines: tuple,
    theory_file: Optional[str],
    max_height: Optional[int],
    representatives: bool,
    fuel: Optional[int],
    as_json: Optional[bool],
):
    """Check the cwf, type-construction or hyperdoctrine laws exhaustively."""
    settings = BaseCommand.resolve(
        ctx, fuel=fuel, as_json=as_json, law_size=size, max_height=max_height
    )
    LawsCommand(
        settings,
        suite,
        list(doctrines) or list(DOCTRINES),
        theory_file,
        int(settings["max_height"]),
        representatives,
    ).finish()
