"""Render kernel objects back into the surface the reader accepts.

Terms, types, contexts, formulas, sequents, judgements and declarations print
themselves through ``str``; this module lays out whole documents.
"""

from typing import List, Union

from dfolkit.dfol.proofs import Proof
from dfolkit.dfol.theory import Theory
from dfolkit.folds.vocabulary import RawVocabulary, Vocabulary
from dfolkit.parsing.reader import ModelTables
from dfolkit.syntax.variables import Flavor

INDENT = "  "


def _key(values: tuple) -> str:
    return "(" + " ".join(str(v) for v in values) + ")"


def print_theory(theory: Theory) -> str:
    sig = theory.signature
    flavor = Flavor.DEBRUIJN if sig.is_debruijn else Flavor.UNRESTRICTED
    lines = [f"(theory {theory.name}", f"{INDENT}(vars {flavor.value})"]
    lines += [f"{INDENT}{decl}" for decl in sig]
    lines += [f"{INDENT}(axiom {name} {seq})" for name, seq in theory]
    return "\n".join(lines) + ")\n"


def _proof_lines(node: Proof, depth: int) -> List[str]:
    pad = INDENT * depth
    head = f"{pad}({node.rule.value} {node.conclusion}"
    if node.name is not None:
        head += f" (name {node.name})"
    if node.terms is not None:
        head += " (map" + "".join(f" {t}" for t in node.terms) + ")"
    if not node.premises:
        return [head + ")"]
    lines = [head]
    for premise in node.premises:
        lines += _proof_lines(premise, depth + 1)
    lines[-1] += ")"
    return lines


def print_proof(theory: str, proof: Proof) -> str:
    lines = [f"(proof {theory}"] + _proof_lines(proof, 1)
    return "\n".join(lines) + ")\n"


def print_vocabulary(vocab: Union[RawVocabulary, Vocabulary]) -> str:
    if isinstance(vocab, Vocabulary):
        vocab = vocab.to_raw()
    lines = [f"(vocabulary {vocab.name}", f"{INDENT}(objects {' '.join(vocab.objects)})"]
    lines += [f"{INDENT}(arrow {a.name} {a.dom} {a.cod})" for a in vocab.arrows]
    lines += [f"{INDENT}(compose {e.g} {e.f} {e.h})" for e in vocab.equations]
    return "\n".join(lines) + ")\n"


def print_model(tables: ModelTables) -> str:
    lines = [f"(model {tables.theory}"]
    for S, fibers in tables.fibers.items():
        rows = [f"(fiber {_key(k)}" + "".join(f" {e}" for e in v) + ")" for k, v in fibers.items()]
        lines.append(f"{INDENT}(type {S}" + "".join(f"\n{INDENT * 2}{r}" for r in rows) + ")")
    for f, values in tables.values.items():
        rows = [f"(value {_key(k)} {v})" for k, v in values.items()]
        lines.append(f"{INDENT}(fun {f}" + "".join(f"\n{INDENT * 2}{r}" for r in rows) + ")")
    for R, holds in tables.holds.items():
        rows = [f"(holds {_key(k)})" for k in holds]
        lines.append(f"{INDENT}(pred {R}" + "".join(f"\n{INDENT * 2}{r}" for r in rows) + ")")
    return "\n".join(lines) + ")\n"
