"""Edge-list fixtures and result documents.

Edge-list format::

    # comment lines start with '#'
    <n>
    <a> <b>          (n - 1 lines, 0-based ids, whitespace separated)

Result documents are JSON objects with a fixed key order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .engine import HausdorffResult
from .tree import Tree, TreeError, build_tree

__all__ = [
    "ParseError",
    "parse_edge_list",
    "serialize_edge_list",
    "read_tree",
    "write_tree",
    "ResultDocument",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def _tokens(line: str) -> list[tuple[int, str]]:
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int_token(tok: str, lineno: int, col: int) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected a non-negative integer, found {tok!r}", lineno, col)
    return int(tok)


def parse_edge_list(text: str) -> Tree:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(line)
        if n is None:
            if len(toks) != 1:
                raise ParseError("header must be a single vertex count", lineno, toks[0][0])
            col, tok = toks[0]
            n = _int_token(tok, lineno, col)
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno, col)
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 2 vertex ids, found {len(toks)} tokens", lineno, toks[0][0])
        (ca, ta), (cb, tb) = toks
        a, b = _int_token(ta, lineno, ca), _int_token(tb, lineno, cb)
        for col, x in ((ca, a), (cb, b)):
            if x >= n:
                raise ParseError(f"vertex id {x} outside [0, {n})", lineno, col)
        edges.append((a, b))
        edge_lines.append(lineno)
    if n is None:
        raise ParseError("missing header line with the vertex count")
    if len(edges) != n - 1:
        raise ParseError(f"expected {n - 1} edges, found {len(edges)}")
    try:
        return build_tree(n, edges)
    except TreeError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc


def serialize_edge_list(tree: Tree, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(str(tree.n))
    lines.extend(f"{a} {b}" for a, b in tree.edges)
    return "\n".join(lines) + "\n"


def read_tree(path: str | Path) -> Tree:
    with open(path, encoding="ascii", newline="") as fh:
        text = fh.read()
    try:
        return parse_edge_list(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def write_tree(path: str | Path, tree: Tree, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(serialize_edge_list(tree, comments))


@dataclass(frozen=True)
class ResultDocument:
    distance: int
    root1: int
    root2: int
    swapped: bool
    mapping: tuple[tuple[int, int], ...]
    cover_distance: int | None

    @classmethod
    def from_result(cls, result: HausdorffResult, cover_distance: int | None) -> ResultDocument:
        return cls(
            distance=result.distance,
            root1=result.root1,
            root2=result.root2,
            swapped=result.swapped,
            mapping=tuple(result.sorted_mapping()),
            cover_distance=cover_distance,
        )

    def to_result(self) -> HausdorffResult:
        return HausdorffResult(
            distance=self.distance,
            root1=self.root1,
            root2=self.root2,
            mapping=frozenset(self.mapping),
            swapped=self.swapped,
        )

    def to_json(self) -> str:
        # One mapping pair per line keeps goldens diffable.
        scalars = [
            ("distance", self.distance),
            ("root1", self.root1),
            ("root2", self.root2),
            ("swapped", self.swapped),
        ]
        lines = [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in scalars]
        pairs = ",\n".join(f"    [{v}, {w}]" for v, w in self.mapping)
        lines.append('  "mapping": [\n' + pairs + "\n  ]," if pairs else '  "mapping": [],')
        lines.append(f'  "cover_distance": {json.dumps(self.cover_distance)}')
        return "{\n" + "\n".join(lines) + "\n}\n"

    @classmethod
    def from_json(cls, text: str) -> ResultDocument:
        try:
            data = json.loads(text)
            mapping = tuple(sorted((int(v), int(w)) for v, w in data["mapping"]))
            cover = data.get("cover_distance")
            return cls(
                distance=int(data["distance"]),
                root1=int(data["root1"]),
                root2=int(data["root2"]),
                swapped=bool(data["swapped"]),
                mapping=mapping,
                cover_distance=None if cover is None else int(cover),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed result document: {exc}") from exc
