"""Reidemeister I/II rewrites on abstract diagrams.

These moves drive the invariance fuzz harness.  Virtual moves are vacuous
in the abstract encoding, and R3 is not implemented.  Removing crossings
splices every strand that passes through them: the edge entering the
removed region keeps its name and replaces the edge leaving it.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import Crossing, Diagram
from .errors import NotAKink, NotAnR2Pair, SameEdge, UnknownEdge


class MoveKind(enum.Enum):
    R1_INSERT = "R1_INSERT"
    R1_REMOVE = "R1_REMOVE"
    R2_INSERT = "R2_INSERT"
    R2_REMOVE = "R2_REMOVE"


PARALLEL = "PARALLEL"
ANTIPARALLEL = "ANTIPARALLEL"


@dataclass(frozen=True)
class MoveRecord:
    kind: MoveKind
    params: dict = field(default_factory=dict)
    fresh_edges: tuple[str, ...] = ()

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind.value}({args})"


def _fresh_names(d: Diagram, count: int, prefix: str = "x") -> list[str]:
    used = d.edges
    out = []
    for i in itertools.count(len(used) + 1):
        name = f"{prefix}{i}"
        if name not in used:
            out.append(name)
            if len(out) == count:
                return out


def _split(crossings: list[Crossing], d: Diagram, edge: str, last: str) -> None:
    """Rename the head end of ``edge`` to ``last`` (the tail end keeps ``edge``)."""
    i, role = d.head[edge]
    fields = {r: getattr(crossings[i], r) for r in ("l_in", "r_in", "r_out", "l_out")}
    fields[role] = last
    crossings[i] = Crossing(crossings[i].sign, **fields)


def r1_insert(d: Diagram, edge: str | None, sign: int, chirality: str = "A") -> Diagram:
    """Add a kink on ``edge`` (``None`` only for the 0-crossing unknot).

    ``edge`` is cut into e1 -> e2 -> e3 with e1 keeping the old name; variant
    A is (sign, e1, e2, e2, e3) and variant B is (sign, e2, e1, e3, e2).
    """
    if chirality not in ("A", "B"):
        raise ValueError(f"chirality must be 'A' or 'B', got {chirality!r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    crossings = list(d.crossings)
    if not crossings:
        if edge is not None:
            raise UnknownEdge(edge)
        e1, e2 = _fresh_names(d, 2)
        e3 = e1
    else:
        if edge not in d.edges:
            raise UnknownEdge(edge)
        e1 = edge
        e2, e3 = _fresh_names(d, 2)
        _split(crossings, d, edge, e3)
    if chirality == "A":
        crossings.append(Crossing(sign, e1, e2, e2, e3))
    else:
        crossings.append(Crossing(sign, e2, e1, e3, e2))
    return Diagram(tuple(crossings))


def excise(d: Diagram, removed: set[int]) -> Diagram:
    """Delete crossings and splice the strands running through them."""
    keep = [i for i in range(d.m) if i not in removed]
    if not keep:
        return Diagram(())
    crossings = list(d.crossings)
    head, succ = d.head, d.successor
    renames: dict[tuple[int, str], str] = {}
    for c_index in keep:
        c = crossings[c_index]
        for out in c.outputs:
            if head[out][0] not in removed:
                continue
            e = out
            while head[e][0] in removed:
                e = succ[e]
            renames[head[e]] = out
    out_crossings = []
    for i in keep:
        c = crossings[i]
        fields = {r: getattr(c, r) for r in ("l_in", "r_in", "r_out", "l_out")}
        for role in ("l_in", "r_in"):
            if (i, role) in renames:
                fields[role] = renames[(i, role)]
        out_crossings.append(Crossing(c.sign, **fields))
    return Diagram(tuple(out_crossings))


def is_kink(c: Crossing) -> bool:
    return c.r_out == c.r_in or c.l_out == c.l_in


def r1_remove(d: Diagram, crossing: int) -> Diagram:
    if not 0 <= crossing < d.m:
        raise IndexError(crossing)
    if not is_kink(d.crossings[crossing]):
        raise NotAKink(f"crossing {crossing} is not a kink")
    return excise(d, {crossing})


def r2_insert(d: Diagram, e: str, f: str, sign: int, form: str = PARALLEL) -> Diagram:
    """Push a loop of ``e`` across ``f`` creating crossings of signs sign, -sign.

    Both edges are cut into three segments (the first keeps the old name).
    PARALLEL:      (σ, e1, f1, e2, f2), (-σ, f2, e2, f3, e3)
    ANTIPARALLEL:  (σ, e1, f2, e2, f3), (-σ, f1, e2, f2, e3)
    """
    if e == f:
        raise SameEdge(f"R2 needs two distinct edges, got {e!r} twice")
    for x in (e, f):
        if x not in d.edges:
            raise UnknownEdge(x)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if form not in (PARALLEL, ANTIPARALLEL):
        raise ValueError(f"unknown R2 form {form!r}")
    e2, e3, f2, f3 = _fresh_names(d, 4)
    crossings = list(d.crossings)
    _split(crossings, d, e, e3)
    _split(crossings, d, f, f3)
    e1, f1 = e, f
    if form == PARALLEL:
        crossings.append(Crossing(sign, e1, f1, e2, f2))
        crossings.append(Crossing(-sign, f2, e2, f3, e3))
    else:
        crossings.append(Crossing(sign, e1, f2, e2, f3))
        crossings.append(Crossing(-sign, f1, e2, f2, e3))
    return Diagram(tuple(crossings))


def r2_form(c1: Crossing, c2: Crossing) -> str | None:
    """Insertion pattern matched by the ordered pair (c1, c2), if any."""
    if c1.sign != -c2.sign:
        return None
    if c2.l_in == c1.l_out and c2.r_in == c1.r_out:
        return PARALLEL
    if c2.r_in == c1.r_out and c1.r_in == c2.r_out:
        return ANTIPARALLEL
    return None


def r2_remove(d: Diagram, c1: int, c2: int) -> Diagram:
    if c1 == c2:
        raise NotAnR2Pair("an R2 pair needs two distinct crossings")
    for i in (c1, c2):
        if not 0 <= i < d.m:
            raise IndexError(i)
    a, b = d.crossings[c1], d.crossings[c2]
    if r2_form(a, b) is None and r2_form(b, a) is None:
        raise NotAnR2Pair(f"crossings {c1} and {c2} do not form an R2 bigon")
    return excise(d, {c1, c2})


def kinks(d: Diagram) -> list[int]:
    return [i for i, c in enumerate(d.crossings) if is_kink(c)]


def r2_pairs(d: Diagram) -> list[tuple[int, int]]:
    """Ordered pairs (i, j) matching an insertion pattern."""
    out = []
    for i, c in enumerate(d.crossings):
        # every R2 pattern has c2 receiving c1's r_out on its r_in
        j, role = d.head[c.r_out]
        if j != i and role == "r_in" and r2_form(c, d.crossings[j]) is not None:
            out.append((i, j))
    return out


def iter_random_moves(d: Diagram, n: int, seed: int) -> Iterator[tuple[Diagram, MoveRecord]]:
    """Yield (diagram, move) after each of ``n`` random moves."""
    rng = random.Random(f"vknot.moves:{seed}")
    for _ in range(n):
        removable_1 = kinks(d)
        removable_2 = r2_pairs(d)
        can_remove = bool(removable_1 or removable_2)
        if can_remove and rng.random() < 0.4:
            options = [("R1", k) for k in removable_1] + [("R2", p) for p in removable_2]
            kind, target = rng.choice(options)
            if kind == "R1":
                d = r1_remove(d, target)
                record = MoveRecord(MoveKind.R1_REMOVE, {"crossing": target})
            else:
                d = r2_remove(d, *target)
                record = MoveRecord(MoveKind.R2_REMOVE, {"crossings": target})
        else:
            edges = sorted(d.edges)
            sign = rng.choice((1, -1))
            if len(edges) >= 2 and rng.random() < 0.5:
                e, f = rng.sample(edges, 2)
                form = rng.choice((PARALLEL, ANTIPARALLEL))
                before = d.edges
                d = r2_insert(d, e, f, sign, form)
                record = MoveRecord(
                    MoveKind.R2_INSERT,
                    {"e": e, "f": f, "sign": sign, "form": form},
                    tuple(sorted(d.edges - before)),
                )
            else:
                edge = rng.choice(edges) if edges else None
                chirality = rng.choice("AB")
                before = d.edges
                d = r1_insert(d, edge, sign, chirality)
                record = MoveRecord(
                    MoveKind.R1_INSERT,
                    {"edge": edge, "sign": sign, "chirality": chirality},
                    tuple(sorted(d.edges - before)),
                )
        yield d, record


def random_move_sequence(d: Diagram, n: int, seed: int) -> tuple[Diagram, list[MoveRecord]]:
    """Apply ``n`` random R1/R2 moves; inserts are preferred over removals."""
    if n < 0:
        raise ValueError("n must be >= 0")
    records = []
    for d, record in iter_random_moves(d, n, seed):
        records.append(record)
    return d, records
