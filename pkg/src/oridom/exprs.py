"""Nested construction expressions for the command line.

Grammar:  expr = op '(' expr ',' expr ')' | family
          op = cart | lex | corona | join
          family = name ':' int[,int...]     e.g. path:3, multi:1,2,2

``cart(path:3,complete:3)`` builds the Cartesian product of P_3 and K_3.
"""

from __future__ import annotations

from .graphs import UndirectedGraph, family
from .products import cartesian, corona, join, lexicographic

_OPS = {
    "cart": lambda g, h: cartesian(g, h)[0],
    "lex": lambda g, h: lexicographic(g, h)[0],
    "corona": lambda g, h: corona(g, h)[0],
    "join": join,
}


class ExprError(ValueError):
    """Malformed construction expression."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, ch: str):
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ExprError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def _word(self) -> str:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] in "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise ExprError(f"expected a name at position {start} in {self.text!r}")
        return self.text[start : self.pos]

    def parse(self) -> UndirectedGraph:
        graph = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ExprError(f"trailing input at position {self.pos} in {self.text!r}")
        return graph

    def _expr(self) -> UndirectedGraph:
        name = self._word()
        self._skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "(":
            if name not in _OPS:
                raise ExprError(f"unknown operation {name!r}")
            self._expect("(")
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect(")")
            return _OPS[name](left, right)
        self._expect(":")
        params = [str(self._int())]
        self._skip_ws()
        while self.pos < len(self.text) and self.text[self.pos] == ",":
            # a comma binds to the family only when another integer follows
            mark = self.pos
            self.pos += 1
            self._skip_ws()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                params.append(str(self._int()))
            else:
                self.pos = mark
                break
        try:
            return family(f"{name}:{','.join(params)}")
        except ValueError as exc:
            raise ExprError(str(exc)) from None

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExprError(f"expected an integer at position {start} in {self.text!r}")
        return int(self.text[start : self.pos])


def parse_graph_expr(text: str) -> UndirectedGraph:
    return _Parser(text).parse()
