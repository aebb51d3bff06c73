"""Plain-text instance format.

::

    # comment
    p wvc <n> <m>
    v <id> <weight> [R|B]
    e <u> <v>

Weights are written ``p`` or ``p/q``.  Color tokens, when present, must be on
every v-line and turn the instance into a :class:`RedBlueTree`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .core import InvalidGraphError, RedBlueTree, WeightedGraph

_RATIONAL = re.compile(r"-?\d+(?:/\d+)?\Z")
_INT = re.compile(r"\d+\Z")


class InstanceFormatError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational 'p' or 'p/q': {token!r}")
    return Fraction(token)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_instance(text: str, kind: str = "auto") -> Union[WeightedGraph, RedBlueTree]:
    """Parse ``text``; ``kind`` is ``"auto"``, ``"graph"`` or ``"tree"``."""
    if kind not in ("auto", "graph", "tree"):
        raise ValueError(f"unknown instance kind {kind!r}")
    header = None
    weights: dict[int, Fraction] = {}
    colors: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    last_line = 0

    def int_token(tok: str, lineno: int) -> int:
        if not _INT.match(tok):
            raise InstanceFormatError(lineno, f"expected a non-negative integer, got {tok!r}")
        return int(tok)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise InstanceFormatError(lineno, "duplicate header")
            if len(tok) != 4 or tok[1] != "wvc":
                raise InstanceFormatError(lineno, "header must be 'p wvc <n> <m>'")
            header = (int_token(tok[2], lineno), int_token(tok[3], lineno))
            continue
        if header is None:
            raise InstanceFormatError(lineno, "declaration before the 'p' header")
        n = header[0]
        if tok[0] == "v":
            if len(tok) not in (3, 4):
                raise InstanceFormatError(lineno, "v-line must be 'v <id> <weight> [R|B]'")
            v = int_token(tok[1], lineno)
            if v >= n:
                raise InstanceFormatError(lineno, f"vertex {v} out of range [0, {n})")
            if v in weights:
                raise InstanceFormatError(lineno, f"duplicate vertex {v}")
            try:
                weights[v] = parse_rational(tok[2])
            except ValueError as exc:
                raise InstanceFormatError(lineno, str(exc)) from None
            if len(tok) == 4:
                if tok[3] not in ("R", "B"):
                    raise InstanceFormatError(lineno, f"unknown color token {tok[3]!r}")
                colors[v] = tok[3]
        elif tok[0] == "e":
            if len(tok) != 3:
                raise InstanceFormatError(lineno, "e-line must be 'e <u> <v>'")
            u, v = int_token(tok[1], lineno), int_token(tok[2], lineno)
            for x in (u, v):
                if x >= n:
                    raise InstanceFormatError(lineno, f"vertex {x} out of range [0, {n})")
            edges.append((u, v))
        else:
            raise InstanceFormatError(lineno, f"unknown declaration {tok[0]!r}")

    if header is None:
        raise InstanceFormatError(last_line, "missing 'p wvc <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise InstanceFormatError(last_line, f"header declares {m} edges, found {len(edges)}")
    missing = [v for v in range(n) if v not in weights]
    if missing:
        raise InstanceFormatError(last_line, f"missing v-line for vertex {missing[0]}")
    if colors and len(colors) != n:
        v = min(set(range(n)) - set(colors))
        raise InstanceFormatError(last_line, f"vertex {v} has no color token")

    ws = [weights[v] for v in range(n)]
    try:
        if colors or kind == "tree":
            if kind == "graph":
                raise InvalidGraphError("colored instance given where a plain graph is expected")
            if not colors:
                raise InvalidGraphError("tree instance needs an R/B token on every v-line")
            return RedBlueTree([colors[v] for v in range(n)], edges, ws)
        return WeightedGraph(ws, edges)
    except InvalidGraphError as exc:
        raise InstanceFormatError(last_line, str(exc)) from None


def serialize_instance(instance: Union[WeightedGraph, RedBlueTree], comment: str = "") -> str:
    lines = [f"# {line}" for line in comment.splitlines()]
    if isinstance(instance, RedBlueTree):
        weights = instance.weights or (Fraction(1),) * instance.n
        colors = instance.colors
    else:
        weights, colors = instance.weights, None
    lines.append(f"p wvc {len(weights)} {len(instance.edges)}")
    for v, w in enumerate(weights):
        suffix = f" {colors[v]}" if colors else ""
        lines.append(f"v {v} {format_rational(w)}{suffix}")
    lines.extend(f"e {u} {v}" for u, v in instance.edges)
    return "\n".join(lines) + "\n"
