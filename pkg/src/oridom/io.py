"""Line-oriented text formats for graphs and digraphs.

Undirected: header ``ug <n> <m>`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``. Directed: header ``dg <n> <m>`` followed by ``m``
lines ``u v`` meaning the arc u->v. Writers emit canonical order;
parsers accept any line order but reject malformed headers, count
mismatches, and range violations with line-numbered errors.
"""

from __future__ import annotations

from .graphs import Digraph, UndirectedGraph, build_digraph, build_graph


class GraphFormatError(ValueError):
    """Malformed graph text; message carries the 1-based line number."""


def _parse_pairs(lines, start_line, count, what):
    pairs = []
    for offset in range(count):
        lineno = start_line + offset
        if offset >= len(lines):
            raise GraphFormatError(
                f"line {lineno}: expected {count} {what} lines, file ends after {offset}"
            )
        fields = lines[offset].split()
        if len(fields) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two integers, got {lines[offset]!r}"
            )
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: expected two integers, got {lines[offset]!r}"
            ) from None
    if count < len(lines):
        extra = start_line + count
        raise GraphFormatError(f"line {extra}: trailing data beyond declared {what} count")
    return pairs


def _split(text: str):
    return [line for line in (raw.strip() for raw in text.splitlines()) if line]


def _parse_header(lines, tag):
    if not lines:
        raise GraphFormatError("line 1: empty input")
    fields = lines[0].split()
    if len(fields) != 3 or fields[0] != tag:
        raise GraphFormatError(f"line 1: expected header '{tag} <n> <m>', got {lines[0]!r}")
    try:
        n, m = int(fields[1]), int(fields[2])
    except ValueError:
        raise GraphFormatError(f"line 1: non-integer counts in header {lines[0]!r}") from None
    return n, m


def parse_graph(text: str) -> UndirectedGraph:
    lines = _split(text)
    n, m = _parse_header(lines, "ug")
    pairs = _parse_pairs(lines[1:], 2, m, "edge")
    for offset, (u, v) in enumerate(pairs):
        if u >= v:
            raise GraphFormatError(f"line {2 + offset}: edge must satisfy u < v, got {u} {v}")
        if v >= n:
            raise GraphFormatError(f"line {2 + offset}: endpoint {v} out of range for n={n}")
    try:
        return build_graph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_digraph(text: str) -> Digraph:
    lines = _split(text)
    n, m = _parse_header(lines, "dg")
    pairs = _parse_pairs(lines[1:], 2, m, "arc")
    for offset, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {2 + offset}: arc ({u}, {v}) out of range for n={n}"
            )
    try:
        return build_digraph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(G: UndirectedGraph) -> str:
    body = "".join(f"{u} {v}\n" for u, v in G.edges)
    return f"ug {G.n} {G.m}\n{body}"


def format_digraph(D: Digraph) -> str:
    body = "".join(f"{u} {v}\n" for u, v in D.arcs)
    return f"dg {D.n} {D.m}\n{body}"


def load_graph(path) -> UndirectedGraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


def load_digraph(path) -> Digraph:
    with open(path, encoding="utf-8") as handle:
        return parse_digraph(handle.read())
