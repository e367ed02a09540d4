"""Graph documents: the JSON interchange format and DIMACS edge files.

JSON documents look like::

    {"n": 4, "edges": [[0, 1], [1, 2]], "labels": {"a": 0}, "weights": [1, 2, 1, 1]}

with ``0 <= u < v < n`` and no duplicate edges.  DIMACS input uses a
``p edge N M`` header and 1-indexed ``e u v`` lines.  The format is picked
from the first non-blank character (``{`` means JSON).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import Graph, GraphInputError


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]
    labels: dict[str, int] = field(default_factory=dict)
    weights: list[Fraction] | None = None

    @classmethod
    def from_graph(cls, G: Graph, labels: dict[str, int] | None = None, weights=None) -> GraphDocument:
        return cls(G.n, list(G.edges()), dict(labels or {}), list(weights) if weights is not None else None)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def resolve(self, token: str | int) -> int:
        """Map a label or a decimal index to a vertex index."""
        if isinstance(token, int):
            v = token
        else:
            token = token.strip()
            if token in self.labels:
                return self.labels[token]
            try:
                v = int(token)
            except ValueError:
                raise GraphInputError(f"unknown vertex label {token!r}") from None
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for n={self.n}")
        return v

    def resolve_set(self, tokens: Iterable[str | int] | str) -> frozenset[int]:
        if isinstance(tokens, str):
            tokens = [t for t in tokens.split(",") if t.strip()]
        return frozenset(self.resolve(t) for t in tokens)

    def to_json(self) -> str:
        out: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels:
            out["labels"] = self.labels
        if self.weights is not None:
            out["weights"] = [format_number(w) for w in self.weights]
        return json.dumps(out)


def format_number(x: Fraction | int) -> int | str:
    """Integers stay numbers; other rationals become ``"p/q"`` strings."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_weight(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise GraphInputError(f"{where}: weight must be a number or a 'p/q' string")
    try:
        w = Fraction(str(value)) if not isinstance(value, int) else Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise GraphInputError(f"{where}: cannot parse weight {value!r}") from None
    if w < 0:
        raise GraphInputError(f"{where}: weight must be non-negative")
    return w


def parse_weights(values, n: int, where: str = "weights") -> list[Fraction]:
    if not isinstance(values, list):
        raise GraphInputError(f"{where}: expected a list")
    if len(values) != n:
        raise GraphInputError(f"{where}: expected {n} entries, got {len(values)}")
    return [parse_weight(v, f"{where}[{i}]") for i, v in enumerate(values)]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_json_document(text: str) -> GraphDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(raw, dict):
        raise GraphInputError("document must be a JSON object")
    n = raw.get("n")
    if not _is_int(n) or n < 0:
        raise GraphInputError("field 'n': expected a non-negative integer")
    edges_raw = raw.get("edges", [])
    if not isinstance(edges_raw, list):
        raise GraphInputError("field 'edges': expected a list")
    edges = []
    seen = set()
    for i, e in enumerate(edges_raw):
        where = f"edges[{i}]"
        if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
            raise GraphInputError(f"{where}: expected a pair of integers")
        u, v = e
        if not 0 <= u < v < n:
            raise GraphInputError(f"{where}: need 0 <= u < v < n, got [{u}, {v}]")
        if (u, v) in seen:
            raise GraphInputError(f"{where}: duplicate edge [{u}, {v}]")
        seen.add((u, v))
        edges.append((u, v))
    labels = raw.get("labels", {})
    if not isinstance(labels, dict):
        raise GraphInputError("field 'labels': expected an object")
    for name, idx in labels.items():
        if not _is_int(idx) or not 0 <= idx < n:
            raise GraphInputError(f"labels[{name!r}]: index out of range")
    weights = raw.get("weights")
    if weights is not None:
        weights = parse_weights(weights, n)
    return GraphDocument(n, edges, dict(labels), weights)


def parse_dimacs(text: str) -> GraphDocument:
    n = None
    edges = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphInputError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphInputError(f"line {lineno}: expected 'p edge N M'")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphInputError(f"line {lineno}: N and M must be integers") from None
        elif parts[0] == "e":
            if n is None:
                raise GraphInputError(f"line {lineno}: edge before the problem line")
            if len(parts) != 3:
                raise GraphInputError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphInputError(f"line {lineno}: endpoints must be integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphInputError(f"line {lineno}: self-loop")
            edges.add((min(u, v), max(u, v)))
        else:
            raise GraphInputError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphInputError("missing 'p edge N M' line")
    return GraphDocument(n, sorted(edges))


def parse_document(text: str) -> GraphDocument:
    stripped = text.lstrip()
    if not stripped:
        raise GraphInputError("empty document")
    if stripped[0] == "{":
        return parse_json_document(text)
    return parse_dimacs(text)
