"""Oriented virtual knot diagrams as lists of signed classical crossings.

Only classical crossings are stored.  Each crossing names its four edges by
role: ``l_in`` continues to ``r_out`` and ``r_in`` continues to ``l_out``.
Virtual crossings are never recorded, so any two planar drawings of the same
code (which differ by detour moves) are the same object here.

Knot-file format, one crossing per line::

    # virtual trefoil
    + a c b d
    + b d c a
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicateEdge,
    EdgeUnused,
    EdgeUsedTwiceAsInput,
    NotSingleComponent,
    ParseError,
)

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")

# Role names in record order.
ROLES = ("l_in", "r_in", "r_out", "l_out")


@dataclass(frozen=True)
class Crossing:
    sign: int
    l_in: str
    r_in: str
    r_out: str
    l_out: str

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign!r}")

    @property
    def inputs(self) -> tuple[str, str]:
        return self.l_in, self.r_in

    @property
    def outputs(self) -> tuple[str, str]:
        return self.r_out, self.l_out

    def continuation(self, edge: str) -> str:
        """Output edge reached by entering this crossing along ``edge``."""
        if edge == self.l_in:
            return self.r_out
        if edge == self.r_in:
            return self.l_out
        raise KeyError(edge)

    def mirrored(self) -> Crossing:
        return Crossing(-self.sign, self.l_in, self.r_in, self.r_out, self.l_out)

    def reversed(self) -> Crossing:
        return Crossing(self.sign, self.r_out, self.l_out, self.l_in, self.r_in)

    def renamed(self, mapping) -> Crossing:
        f = lambda e: mapping.get(e, e)  # noqa: E731
        return Crossing(self.sign, f(self.l_in), f(self.r_in), f(self.r_out), f(self.l_out))

    def to_line(self) -> str:
        return " ".join(("+" if self.sign > 0 else "-", self.l_in, self.r_in, self.r_out, self.l_out))


@dataclass(frozen=True)
class Diagram:
    """Immutable oriented virtual knot diagram.

    Construction does not validate; :func:`parse_knot`, :func:`random_knot`
    and the move rewrites only ever produce valid knots.  Derived maps
    (successor, head, tail) assume validity.
    """

    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    def __len__(self):
        return len(self.crossings)

    @property
    def m(self) -> int:
        return len(self.crossings)

    @cached_property
    def edges(self) -> frozenset[str]:
        return frozenset(e for c in self.crossings for e in (c.l_in, c.r_in, c.r_out, c.l_out))

    @cached_property
    def successor(self) -> dict[str, str]:
        """Edge -> next edge along the orientation."""
        succ = {}
        for c in self.crossings:
            succ[c.l_in] = c.r_out
            succ[c.r_in] = c.l_out
        return succ

    @cached_property
    def head(self) -> dict[str, tuple[int, str]]:
        """Edge -> (crossing index, input role) where the edge ends."""
        out = {}
        for i, c in enumerate(self.crossings):
            out[c.l_in] = (i, "l_in")
            out[c.r_in] = (i, "r_in")
        return out

    @cached_property
    def tail(self) -> dict[str, tuple[int, str]]:
        """Edge -> (crossing index, output role) where the edge starts."""
        out = {}
        for i, c in enumerate(self.crossings):
            out[c.r_out] = (i, "r_out")
            out[c.l_out] = (i, "l_out")
        return out

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def traversal_order(self) -> list[str]:
        return traversal_order(self)

    def to_text(self) -> str:
        return format_knot(self)


def _check_name(name: str, line: int) -> str:
    if not _NAME.match(name):
        raise ParseError(f"invalid edge name {name!r}", line=line)
    return name


def parse_knot(text: str) -> Diagram:
    """Parse and validate a knot file."""
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 5:
            raise ParseError(f"expected '<sign> <l_in> <r_in> <r_out> <l_out>', got {len(fields)} fields", line=lineno)
        sign_tok, *names = fields
        if sign_tok not in ("+", "-"):
            raise ParseError(f"crossing sign must be '+' or '-', got {sign_tok!r}", line=lineno)
        names = [_check_name(n, lineno) for n in names]
        crossings.append(Crossing(1 if sign_tok == "+" else -1, *names))
    d = Diagram(tuple(crossings))
    validate(d)
    return d


def format_knot(d: Diagram, comment: str | None = None) -> str:
    lines = [f"# {line}" for line in comment.splitlines()] if comment else []
    lines.extend(c.to_line() for c in d.crossings)
    return "\n".join(lines) + "\n"


def validate(d: Diagram) -> None:
    """Raise a ValidationError subclass unless ``d`` is a single-component knot."""
    inputs: dict[str, int] = {}
    outputs: dict[str, int] = {}
    for i, c in enumerate(d.crossings):
        for e in c.inputs:
            if e in inputs:
                raise EdgeUsedTwiceAsInput(f"edge {e!r} enters crossings {inputs[e]} and {i}")
            inputs[e] = i
        for e in c.outputs:
            if e in outputs:
                raise DuplicateEdge(f"edge {e!r} leaves crossings {outputs[e]} and {i}")
            outputs[e] = i
    for e in sorted(inputs.keys() ^ outputs.keys()):
        end = "tail" if e in inputs else "head"
        raise EdgeUnused(f"edge {e!r} has no {end}")
    if not d.crossings:
        return
    succ = d.successor
    start = min(succ)
    seen = 1
    e = succ[start]
    while e != start:
        seen += 1
        e = succ[e]
    if seen != len(succ):
        raise NotSingleComponent(f"walk from {start!r} covers {seen} of {len(succ)} edges")


def traversal_order(d: Diagram) -> list[str]:
    """Edges in orientation order starting from the smallest edge name."""
    if not d.crossings:
        return []
    succ = d.successor
    start = min(succ)
    order = [start]
    e = succ[start]
    while e != start:
        order.append(e)
        e = succ[e]
    return order


def writhe(d: Diagram) -> int:
    return d.writhe


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing; the flat diagram is unchanged."""
    return Diagram(tuple(c.mirrored() for c in d.crossings))


def reverse(d: Diagram) -> Diagram:
    """Reverse the orientation; edge names and crossing signs are kept."""
    return Diagram(tuple(c.reversed() for c in d.crossings))


def rename_edges(d: Diagram, mapping) -> Diagram:
    return Diagram(tuple(c.renamed(mapping) for c in d.crossings))


def random_knot(m: int, seed: int) -> Diagram:
    """Random abstract knot code with ``m`` crossings, deterministic in (m, seed).

    A single closed strand passes through 2m crossing slots; edge ``e{i}``
    runs from slot i-1 to slot i.  Slots are paired into crossings at random,
    with random left/right roles and signs.
    """
    if m < 1:
        raise ValueError("random_knot needs m >= 1")
    rng = random.Random(f"vknot.random_knot:{m}:{seed}")
    n = 2 * m
    slots = list(range(n))
    rng.shuffle(slots)

    def edge_in(i):
        return f"e{i if i else n}"

    def edge_out(i):
        return f"e{i + 1}"

    crossings = []
    for k in range(m):
        left, right = slots[2 * k], slots[2 * k + 1]
        sign = rng.choice((1, -1))
        crossings.append(Crossing(sign, edge_in(left), edge_in(right), edge_out(left), edge_out(right)))
    return Diagram(tuple(crossings))


def isomorphic(a: Diagram, b: Diagram) -> bool:
    """Equal up to edge renaming and crossing order."""
    if a.m != b.m:
        return False
    if a.m == 0:
        return True
    return canonical_form(a) == canonical_form(b)


def canonical_form(d: Diagram) -> tuple:
    """Name-independent encoding: minimum over all traversal start edges."""
    if not d.crossings:
        return ()
    succ = d.successor
    best = None
    for start in succ:
        order = [start]
        e = succ[start]
        while e != start:
            order.append(e)
            e = succ[e]
        index = {e: i for i, e in enumerate(order)}
        enc = tuple(sorted((c.sign, index[c.l_in], index[c.r_in], index[c.r_out], index[c.l_out]) for c in d.crossings))
        if best is None or enc < best:
            best = enc
    return best


def from_lines(lines: Iterable[str]) -> Diagram:
    return parse_knot("\n".join(lines))
