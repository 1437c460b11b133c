"""From s-expressions to kernel syntax.

Names are resolved against the signature being read: a bare atom is a
nullary application when it names a declared function symbol, a numeral
otherwise denotes a de Bruijn style variable, and any other atom is a
variable. Theory files are replayed declaration by declaration, so every
declaration sees exactly the symbols declared before it.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from dfolkit.checker.judgements import HasType, IsContext, IsType, Judgement
from dfolkit.constants import DEFAULT_FUEL
from dfolkit.cwf.finset import Token
from dfolkit.dfol.formulas import And, Atom, Bot, Exists, Forall, Formula, Imp, Or, Sequent, Top
from dfolkit.dfol.proofs import Proof, ProofRule
from dfolkit.dfol.theory import Theory, build_theory
from dfolkit.exceptions import KernelError, ParseError
from dfolkit.folds.vocabulary import Arrow, Equation, RawVocabulary, identity_name
from dfolkit.parsing.sexp import Node, SList, Symbol, read_one
from dfolkit.signature.build import extend
from dfolkit.signature.declarations import (
    Declaration,
    FunDecl,
    PredDecl,
    TypeDecl,
    standard_positions,
)
from dfolkit.signature.signature import Signature, empty_signature
from dfolkit.syntax.terms import App, PreContext, PreTerm, PreType, Var
from dfolkit.syntax.variables import Flavor, Variable, VariableSystem

logger = logging.getLogger(__name__)

KEYWORDS = frozenset({"top", "bot", "and", "or", "imp", "forall", "exists"})


@dataclass(frozen=True)
class ProofFile:
    theory: str
    proof: Proof


@dataclass(frozen=True)
class ModelTables:
    """The tables of a model file, keyed by symbol and argument tuple."""

    theory: str
    fibers: Mapping[str, Mapping[Tuple[Token, ...], Tuple[Token, ...]]] = field(
        default_factory=dict
    )
    values: Mapping[str, Mapping[Tuple[Token, ...], Token]] = field(default_factory=dict)
    holds: Mapping[str, Tuple[Tuple[Token, ...], ...]] = field(default_factory=dict)


def _numeral(text: str) -> bool:
    return text.isdigit() and not text.startswith("0")


class Reader:
    """Reads one file; errors carry its name and the offending position."""

    def __init__(self, filename: Optional[str] = None, fuel: int = DEFAULT_FUEL):
        self.filename = filename
        self.fuel = fuel

    def error(self, node: Node, message: str) -> ParseError:
        return ParseError(message, self.filename, node.line or None, node.column or None)

    # ------------------------------------------------------------------
    # shapes
    # ------------------------------------------------------------------

    def atom(self, node: Node, what: str = "a name") -> str:
        if not isinstance(node, Symbol):
            raise self.error(node, f"expected {what}, found {node}")
        return node.text

    def form(self, node: Node, head: str, low: int, high: Optional[int] = None) -> SList:
        """``node`` as ``(head ...)`` with between ``low`` and ``high`` operands."""
        if not isinstance(node, SList) or node.head != head:
            raise self.error(node, f"expected ({head} ...), found {node}")
        n = len(node) - 1
        if n < low or (high is not None and n > high):
            if high is None:
                expected = f"at least {low}"
            else:
                expected = str(low) if high == low else f"{low} to {high}"
            raise self.error(node, f"({head} ...) takes {expected} operands, found {n}")
        return node

    def options(self, nodes: Sequence[Node], known: Sequence[str]) -> Dict[str, SList]:
        found: Dict[str, SList] = {}
        for node in nodes:
            if not isinstance(node, SList) or node.head not in known:
                raise self.error(node, f"expected one of {', '.join(known)}, found {node}")
            if node.head in found:
                raise self.error(node, f"({node.head} ...) given twice")
            found[node.head] = node  # type: ignore[index]
        return found

    # ------------------------------------------------------------------
    # syntax
    # ------------------------------------------------------------------

    def variable(self, node: Node) -> Variable:
        text = self.atom(node, "a variable")
        if text in KEYWORDS:
            raise self.error(node, f"{text} is a keyword")
        return int(text) if _numeral(text) else text

    def term(self, node: Node, sig: Signature) -> PreTerm:
        if isinstance(node, Symbol):
            decl = sig.get(node.text)
            if decl is not None and isinstance(decl, FunDecl):
                return App(node.text)
            return Var(self.variable(node))
        if not node.items:
            raise self.error(node, "empty term")
        head = self.atom(node[0], "a function symbol")
        return App(head, tuple(self.term(a, sig) for a in node.items[1:]))

    def type(self, node: Node, sig: Signature) -> PreType:
        if isinstance(node, Symbol):
            return PreType(node.text)
        if not node.items:
            raise self.error(node, "empty type")
        head = self.atom(node[0], "a type symbol")
        return PreType(head, tuple(self.term(a, sig) for a in node.items[1:]))

    def context(self, node: Node, sig: Signature) -> PreContext:
        ctx = self.form(node, "ctx", 0)
        entries: List[Tuple[Variable, PreType]] = []
        for entry in ctx.items[1:]:
            if not isinstance(entry, SList) or len(entry) < 2:
                raise self.error(entry, f"expected (x ... A), found {entry}")
            A = self.type(entry[len(entry) - 1], sig)
            entries.extend((self.variable(x), A) for x in entry.items[:-1])
        return PreContext(tuple(entries))

    def formula(self, node: Node, sig: Signature) -> Formula:
        if isinstance(node, Symbol):
            if node.text == "top":
                return Top()
            if node.text == "bot":
                return Bot()
            if node.text in KEYWORDS:
                raise self.error(node, f"{node.text} needs operands")
            return Atom(node.text)
        head = node.head
        if head is None:
            raise self.error(node, f"expected a formula, found {node}")
        if head in ("and", "or", "imp"):
            self.form(node, head, 2, 2)
            left, right = self.formula(node[1], sig), self.formula(node[2], sig)
            return {"and": And, "or": Or, "imp": Imp}[head](left, right)
        if head in ("forall", "exists"):
            self.form(node, head, 3, 3)
            quantifier = Forall if head == "forall" else Exists
            var, A = self.variable(node[1]), self.type(node[2], sig)
            return quantifier(var, A, self.formula(node[3], sig))
        if head in KEYWORDS:
            raise self.error(node, f"{head} takes no operands")
        return Atom(head, tuple(self.term(a, sig) for a in node.items[1:]))

    def sequent(self, node: Node, sig: Signature) -> Sequent:
        seq = self.form(node, "seq", 3, 3)
        return Sequent(
            self.context(seq[1], sig), self.formula(seq[2], sig), self.formula(seq[3], sig)
        )

    def judgement(self, node: Node, sig: Signature) -> Judgement:
        head = node.head if isinstance(node, SList) else None
        if head == "context":
            j = self.form(node, "context", 1, 1)
            return IsContext(self.context(j[1], sig))
        if head == "type":
            j = self.form(node, "type", 2, 2)
            return IsType(self.context(j[1], sig), self.type(j[2], sig))
        if head == "term":
            j = self.form(node, "term", 3, 3)
            return HasType(
                self.context(j[1], sig), self.term(j[2], sig), self.type(j[3], sig)
            )
        raise self.error(node, f"expected (context ...), (type ...) or (term ...), found {node}")

    # ------------------------------------------------------------------
    # documents
    # ------------------------------------------------------------------

    def positions(self, node: Optional[SList], ctx: PreContext) -> Tuple[int, ...]:
        if node is None:
            return standard_positions(ctx)
        result = []
        for item in node.items[1:]:
            text = self.atom(item, "a position")
            if not text.isdigit():
                raise self.error(item, f"positions are numerals, found {text}")
            result.append(int(text))
        return tuple(result)

    def declaration(self, node: Node, sig: Signature) -> Declaration:
        head = node.head if isinstance(node, SList) else None
        if head not in ("type", "fun", "pred"):
            raise self.error(node, f"expected a declaration, found {node}")
        decl = self.form(node, head, 2)  # type: ignore[arg-type]
        symbol = self.atom(decl[1], "a symbol")
        ctx = self.context(decl[2], sig)
        known = ("det", "ret") if head == "fun" else ("det",)
        opts = self.options(decl.items[3:], known)
        positions = self.positions(opts.get("det"), ctx)
        if head == "type":
            return TypeDecl(ctx, symbol, positions)
        if head == "pred":
            return PredDecl(ctx, symbol, positions)
        if "ret" not in opts:
            raise self.error(node, f"function {symbol} needs (ret U)")
        ret = self.form(opts["ret"], "ret", 1, 1)
        try:
            return FunDecl(ctx, symbol, positions, self.type(ret[1], sig))
        except KernelError as e:
            raise self.error(node, e.message) from None

    def variables(self, node: SList) -> VariableSystem:
        self.form(node, "vars", 1, 1)
        flavor = self.atom(node[1], "a variable flavor")
        try:
            kind = Flavor(flavor)
        except ValueError:
            raise self.error(node[1], f"unknown variable flavor {flavor}") from None
        if kind is Flavor.DEBRUIJN:
            return VariableSystem.debruijn()
        return VariableSystem.unrestricted()

    def theory(self, node: Node) -> Theory:
        """Replay a ``(theory NAME (vars FLAVOR) DECL...)`` document.

        Raises:
            ParseError: On malformed text
            SignatureError: From the first declaration that fails, with its
                1-based index among the theory's items as the path
            FormulaError: From the first axiom that does not form a sequent
        """
        doc = self.form(node, "theory", 1)
        name = self.atom(doc[1], "a theory name")
        items = list(doc.items[2:])
        variables = VariableSystem.unrestricted()
        if items and isinstance(items[0], SList) and items[0].head == "vars":
            variables = self.variables(items.pop(0))
        sig = empty_signature(variables)
        axioms: List[Tuple[str, Sequent]] = []
        for index, item in enumerate(items, start=1):
            if isinstance(item, SList) and item.head == "axiom":
                ax = self.form(item, "axiom", 2, 2)
                axioms.append((self.atom(ax[1], "an axiom name"), self.sequent(ax[2], sig)))
                continue
            decl = self.declaration(item, sig)
            try:
                sig = extend(sig, decl, self.fuel)
            except KernelError as e:
                logger.debug("%s:%s: %s", self.filename or "<input>", item.line, e)
                raise e.at(index)
        return build_theory(name, sig, axioms, self.fuel)

    def proof_node(self, node: Node, sig: Signature) -> Proof:
        if not isinstance(node, SList) or node.head is None or len(node) < 2:
            raise self.error(node, f"expected (RULE (seq ...) ...), found {node}")
        try:
            rule = ProofRule(node.head)
        except ValueError:
            raise self.error(node, f"unknown rule {node.head}") from None
        conclusion = self.sequent(node[1], sig)
        name: Optional[str] = None
        terms: Optional[Tuple[PreTerm, ...]] = None
        premises: List[Proof] = []
        for item in node.items[2:]:
            head = item.head if isinstance(item, SList) else None
            if head == "name":
                name = self.atom(self.form(item, "name", 1, 1)[1], "an axiom name")
            elif head == "map":
                terms = tuple(self.term(t, sig) for t in item.items[1:])  # type: ignore[union-attr]
            else:
                premises.append(self.proof_node(item, sig))
        return Proof(rule, conclusion, tuple(premises), name, terms)

    def proof(self, node: Node, theory: Theory) -> ProofFile:
        doc = self.form(node, "proof", 2, 2)
        name = self.atom(doc[1], "a theory name")
        if name != theory.name:
            raise self.error(doc[1], f"proof is about {name}, not {theory.name}")
        return ProofFile(name, self.proof_node(doc[2], theory.signature))

    def vocabulary(self, node: Node) -> RawVocabulary:
        doc = self.form(node, "vocabulary", 1)
        name = self.atom(doc[1], "a vocabulary name")
        objects: Tuple[str, ...] = ()
        arrows: List[Arrow] = []
        equations: List[Equation] = []
        for item in doc.items[2:]:
            head = item.head if isinstance(item, SList) else None
            if head == "objects":
                listed = self.form(item, "objects", 0).items[1:]
                objects += tuple(self.atom(o, "an object") for o in listed)
            elif head == "arrow":
                a = self.form(item, "arrow", 3, 3)
                arrows.append(Arrow(self.atom(a[1]), self.atom(a[2]), self.atom(a[3])))
            elif head == "compose":
                c = self.form(item, "compose", 3, 3)
                h = c[3]
                composite = (
                    identity_name(self.atom(self.form(h, "id", 1, 1)[1]))
                    if isinstance(h, SList)
                    else self.atom(h)
                )
                equations.append(Equation(self.atom(c[1]), self.atom(c[2]), composite))
            else:
                raise self.error(item, f"expected objects, arrow or compose, found {item}")
        return RawVocabulary(name, objects, tuple(arrows), tuple(equations))

    def token(self, node: Node) -> Token:
        """A model token: numerals are integers, anything else stays text."""
        text = self.atom(node, "a token")
        return int(text) if text.isdigit() else text

    def _key(self, node: Node) -> Tuple[Token, ...]:
        if not isinstance(node, SList):
            raise self.error(node, f"expected a key tuple (v ...), found {node}")
        return tuple(self.token(v) for v in node.items)

    def model(self, node: Node) -> ModelTables:
        doc = self.form(node, "model", 1)
        fibers: Dict[str, Dict[Tuple[Token, ...], Tuple[Token, ...]]] = {}
        values: Dict[str, Dict[Tuple[Token, ...], Token]] = {}
        holds: Dict[str, Tuple[Tuple[Token, ...], ...]] = {}
        for item in doc.items[2:]:
            head = item.head if isinstance(item, SList) else None
            if head not in ("type", "fun", "pred"):
                raise self.error(item, f"expected type, fun or pred, found {item}")
            block = self.form(item, head, 1)  # type: ignore[arg-type]
            symbol = self.atom(block[1], "a symbol")
            rows = block.items[2:]
            if head == "type":
                fibers[symbol] = {}
                for row in rows:
                    r = self.form(row, "fiber", 1)
                    fibers[symbol][self._key(r[1])] = tuple(self.token(e) for e in r.items[2:])
            elif head == "fun":
                values[symbol] = {}
                for row in rows:
                    r = self.form(row, "value", 2, 2)
                    values[symbol][self._key(r[1])] = self.token(r[2])
            else:
                holds[symbol] = tuple(self._key(self.form(row, "holds", 1, 1)[1]) for row in rows)
        return ModelTables(self.atom(doc[1], "a theory name"), fibers, values, holds)


# ----------------------------------------------------------------------
# entry points
# ----------------------------------------------------------------------


def parse_theory(text: str, filename: Optional[str] = None, fuel: int = DEFAULT_FUEL) -> Theory:
    return Reader(filename, fuel).theory(read_one(text, filename))


def parse_proof(text: str, theory: Theory, filename: Optional[str] = None) -> ProofFile:
    return Reader(filename).proof(read_one(text, filename), theory)


def parse_vocabulary(text: str, filename: Optional[str] = None) -> RawVocabulary:
    return Reader(filename).vocabulary(read_one(text, filename))


def parse_model(text: str, filename: Optional[str] = None) -> ModelTables:
    return Reader(filename).model(read_one(text, filename))


def parse_judgement(text: str, sig: Signature) -> Judgement:
    return Reader().judgement(read_one(text), sig)


def parse_term(text: str, sig: Signature) -> PreTerm:
    return Reader().term(read_one(text), sig)


def parse_type(text: str, sig: Signature) -> PreType:
    return Reader().type(read_one(text), sig)


def parse_context(text: str, sig: Signature) -> PreContext:
    return Reader().context(read_one(text), sig)


def parse_formula(text: str, sig: Signature) -> Formula:
    return Reader().formula(read_one(text), sig)


def parse_sequent(text: str, sig: Signature) -> Sequent:
    return Reader().sequent(read_one(text), sig)



def parse_variable(text: str) -> Variable:
    return Reader().variable(read_one(text))
