"""S-expression reader shared by every file format.

The surface is UTF-8 text of atoms and parenthesized lists; ``;`` starts a
comment running to the end of the line. Nodes remember where they started so
later stages can report file, line and column.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput

from dfolkit.exceptions import ParseError

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: _item*
_item: list | SYMBOL
list: "(" _item* ")"

SYMBOL: /[^\s();]+/
COMMENT: /;[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""


@dataclass(frozen=True)
class Symbol:
    text: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class SList:
    items: Tuple["Node", ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, k: int) -> "Node":
        return self.items[k]

    @property
    def head(self) -> Optional[str]:
        """The leading atom, if there is one."""
        if self.items and isinstance(self.items[0], Symbol):
            return self.items[0].text
        return None

    def __str__(self) -> str:
        return "(" + " ".join(str(n) for n in self.items) + ")"


Node = Union[Symbol, SList]


class _ToNodes(Transformer):
    def SYMBOL(self, token: Token) -> Symbol:
        return Symbol(str(token), token.line or 0, token.column or 0)

    @v_args(meta=True)
    def list(self, meta, items) -> SList:
        return SList(tuple(items), getattr(meta, "line", 0), getattr(meta, "column", 0))

    def start(self, items) -> List[Node]:
        return list(items)


_parser = Lark(GRAMMAR, parser="lalr", propagate_positions=True)


def read_sexps(text: str, filename: Optional[str] = None) -> List[Node]:
    """Every top-level s-expression of ``text``.

    Raises:
        ParseError: On unbalanced parentheses
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        line = e.line if getattr(e, "line", -1) > 0 else None
        column = e.column if getattr(e, "column", -1) > 0 else None
        raise ParseError("unbalanced parentheses", filename, line, column) from None
    nodes = _ToNodes().transform(tree)
    logger.debug("read %d s-expressions from %s", len(nodes), filename or "<input>")
    return nodes


def read_one(text: str, filename: Optional[str] = None) -> Node:
    """The single s-expression of ``text``."""
    nodes = read_sexps(text, filename)
    if len(nodes) != 1:
        raise ParseError(f"expected one s-expression, found {len(nodes)}", filename)
    return nodes[0]
