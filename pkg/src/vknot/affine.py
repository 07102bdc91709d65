"""Cheng colorings, crossing weights and the Affine Index Polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .diagram import Diagram
from .errors import InconsistentColoring
from .laurent import ZERO, LaurentPoly


@dataclass(frozen=True)
class ChengColoring:
    """Integer edge labels with λ(r_out) = λ(l_in) - 1 and λ(l_out) = λ(r_in) + 1."""

    labels: Mapping[str, int]
    base_edge: str
    base_label: int

    def __getitem__(self, edge: str) -> int:
        return self.labels[edge]

    def is_valid_for(self, d: Diagram) -> bool:
        lab = self.labels
        return all(
            lab[c.r_out] == lab[c.l_in] - 1 and lab[c.l_out] == lab[c.r_in] + 1 for c in d.crossings
        )


@dataclass(frozen=True)
class CrossingWeight:
    sign: int
    w_plus: int
    w_minus: int
    w: int


def cheng_coloring(d: Diagram, base_edge: str | None = None, base_label: int = 0) -> ChengColoring:
    """Propagate the labeling rule once around the knot starting at ``base_edge``.

    Defaults to the smallest edge name.  Every crossing is passed once on
    the left (label -1) and once on the right (label +1), so the walk always
    closes up on a valid knot; a failed closure means a corrupted diagram.
    """
    if not d.crossings:
        raise ValueError("a 0-crossing diagram has no edges to color")
    succ = d.successor
    if base_edge is None:
        base_edge = min(succ)
    elif base_edge not in succ:
        raise KeyError(base_edge)
    head = d.head
    labels = {base_edge: base_label}
    e = base_edge
    value = base_label
    for _ in range(len(succ)):
        _, role = head[e]
        value += -1 if role == "l_in" else 1
        e = succ[e]
        if e == base_edge:
            break
        labels[e] = value
    if e != base_edge or value != base_label or len(labels) != len(succ):
        raise InconsistentColoring(f"labels do not close up at {base_edge!r}")
    return ChengColoring(labels, base_edge, base_label)


def crossing_weights(d: Diagram, coloring: ChengColoring | None = None) -> list[CrossingWeight]:
    if not d.crossings:
        return []
    lab = (coloring or cheng_coloring(d)).labels
    out = []
    for c in d.crossings:
        w_plus = lab[c.l_in] - (lab[c.r_in] + 1)
        w_minus = lab[c.r_in] - (lab[c.l_in] - 1)
        out.append(CrossingWeight(c.sign, w_plus, w_minus, w_plus if c.sign > 0 else w_minus))
    return out


def affine_index_polynomial(d: Diagram, coloring: ChengColoring | None = None) -> LaurentPoly:
    """P_K(t) = sum over crossings of sgn(c) * (t^W(c) - 1), exact."""
    terms: dict = {}
    for cw in crossing_weights(d, coloring):
        key = (0, 0, cw.w)
        terms[key] = terms.get(key, 0) + cw.sign
        terms[(0, 0, 0)] = terms.get((0, 0, 0), 0) - cw.sign
    return LaurentPoly(terms) if terms else ZERO
