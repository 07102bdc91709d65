"""Alexander-biquandle relation matrix and the (A)Sawollek polynomials.

At a positive crossing the biquandle acts by ``a^b = t a + G b`` and
``b_a = s b``; at a negative crossing by ``t^-1 a + Gbar b`` and ``s^-1 b``,
with ``Gbar = 1 - s^-1 t^-1`` stored as ``-s^-1 t^-1 G``.  Keeping ``G``
formal gives the three-variable ASawollek polynomial; substituting
``G = 1 - s t`` gives the Sawollek polynomial.

>>> from vknot.diagram import parse_knot
>>> trefoil = parse_knot("+ a c b d\\n+ b d c a")
>>> str(asawollek(trefoil))
'-1 + s^2*t^2 + G*t + G*s'
>>> str(delta(trefoil))
'-1 + t + s - s*t'
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from . import kernel
from .affine import affine_index_polynomial
from .diagram import Diagram, traversal_order
from .errors import EmptyDiagram, InternalInvariantViolation, NotDivisible
from .laurent import (
    G,
    G_VALUE,
    ONE,
    S,
    T,
    ZERO,
    LaurentPoly,
    coeff_of_power,
    div_exact,
    eq_up_to_unit,
    normalize_unit,
    substitute,
)

T_INV = T**-1
S_INV = S**-1
G_BAR = -(S_INV * T_INV) * G

COFACTOR_LIMIT = 8


class ExploratoryInvariantWarning(UserWarning):
    """Higher G-coefficients beyond Γ are not known to be invariants."""


@dataclass(frozen=True)
class RelationMatrix:
    """Square matrix of LaurentPoly, rows and columns in traversal order."""

    edges: tuple[str, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @property
    def order(self) -> int:
        return len(self.edges)

    def __getitem__(self, rc):
        r, c = rc
        if isinstance(r, str):
            r = self.edges.index(r)
        if isinstance(c, str):
            c = self.edges.index(c)
        return self.entries[r][c]

    def rows(self) -> list[list[LaurentPoly]]:
        return [list(row) for row in self.entries]

    def specialize_g(self, value=0) -> RelationMatrix:
        """Substitute G := value in every entry (value 0 gives N(K))."""
        return RelationMatrix(
            self.edges, tuple(tuple(substitute(x, "G", value) for x in row) for row in self.entries)
        )

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.entries]
        width = max((len(x) for row in cells for x in row), default=1)
        head = " " * (len(max(self.edges, key=len)) + 2)
        lines = [head + " ".join(e.rjust(width) for e in self.edges)]
        for e, row in zip(self.edges, cells):
            lines.append(f"{e.rjust(len(head) - 2)}: " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines)


def relation_matrix(d: Diagram) -> RelationMatrix:
    """Relation matrix M(K); row ``e`` holds the relation at e's forward crossing."""
    if not d.crossings:
        raise EmptyDiagram("relation matrix of a 0-crossing diagram is undefined")
    order = traversal_order(d)
    index = {e: i for i, e in enumerate(order)}
    n = len(order)
    cells: dict[tuple[int, int], LaurentPoly] = {}

    def put(row, col, value):
        key = (index[row], index[col])
        cells[key] = cells.get(key, ZERO) + value

    for c in d.crossings:
        if c.sign > 0:
            put(c.l_in, c.l_in, T)
            put(c.l_in, c.r_out, -ONE)
            put(c.l_in, c.r_in, G)
            put(c.r_in, c.r_in, S)
            put(c.r_in, c.l_out, -ONE)
        else:
            put(c.r_in, c.r_in, T_INV)
            put(c.r_in, c.l_out, -ONE)
            put(c.r_in, c.l_in, G_BAR)
            put(c.l_in, c.l_in, S_INV)
            put(c.l_in, c.r_out, -ONE)
    entries = tuple(tuple(cells.get((i, j), ZERO) for j in range(n)) for i in range(n))
    return RelationMatrix(tuple(order), entries)


def _rows_of(mat) -> list[list[LaurentPoly]]:
    if isinstance(mat, RelationMatrix):
        return mat.rows()
    rows = [list(r) for r in mat]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix is not square")
    return [[x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in r] for r in rows]


def det(mat: RelationMatrix | Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant via fraction-free Bareiss elimination.

    Each row is first multiplied by the unit ``s^a t^b`` that clears its
    negative s- and t-exponents; the product of those units is divided out
    at the end.
    """
    rows = _rows_of(mat)
    if not rows:
        return ONE
    cleared = []
    shift_s = shift_t = 0
    for row in rows:
        nonzero = [x for x in row if x]
        if not nonzero:
            return ZERO
        ms = min(x.degree_range("s")[0] for x in nonzero)
        mt = min(x.degree_range("t")[0] for x in nonzero)
        shift_s += ms
        shift_t += mt
        k = kernel.pack(0, -ms, -mt)
        cleared.append([{key + k: c for key, c in x._terms.items()} for x in row])
    result = kernel.det_bareiss(cleared)
    k = kernel.pack(0, shift_s, shift_t)
    return LaurentPoly._wrap({key + k: c for key, c in result.items()})


def det_cofactor(mat: RelationMatrix | Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion along the first row; cross-check oracle for order <= 8."""
    rows = _rows_of(mat)
    n = len(rows)
    if n > COFACTOR_LIMIT:
        raise ValueError(f"cofactor expansion is limited to order {COFACTOR_LIMIT}")

    def expand(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return ONE
        total = ZERO
        for pos, col in enumerate(cols):
            x = rows[row][col]
            if not x:
                continue
            minor = expand(row + 1, cols[:pos] + cols[pos + 1 :])
            term = x * minor
            total = total - term if pos % 2 else total + term
        return total

    return expand(0, tuple(range(n)))


def asawollek(d: Diagram) -> LaurentPoly:
    """Det M(K) with G formal; 0 for the 0-crossing unknot by convention."""
    if not d.crossings:
        return ZERO
    return det(relation_matrix(d))


def sawollek_raw(d: Diagram) -> LaurentPoly:
    """ASawollek with G := 1 - st, not unit-normalized."""
    return substitute(asawollek(d), "G", G_VALUE)


def sawollek(d: Diagram) -> LaurentPoly:
    return normalize_unit(sawollek_raw(d))


@dataclass(frozen=True)
class GExpansion:
    """ASawollek written as sum of c_k(s, t) G^k."""

    coefficients: tuple[LaurentPoly, ...]
    writhe: int

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def expand_in_g(poly: LaurentPoly, writhe: int) -> GExpansion:
    lo, hi = poly.degree_range("G")
    if lo < 0:
        raise InternalInvariantViolation("negative power of G in ASawollek")
    coeffs = [coeff_of_power(poly, "G", k) for k in range(hi + 1)]
    expected = (S * T) ** writhe - 1
    if coeffs[0] != expected:
        raise InternalInvariantViolation(f"c_0 = {coeffs[0]}, expected (st)^{writhe} - 1 = {expected}")
    return GExpansion(tuple(coeffs), writhe)


def g_expansion(d: Diagram) -> GExpansion:
    """Coefficients of ASawollek in powers of G; checks c_0 = (st)^wr - 1."""
    return expand_in_g(asawollek(d), d.writhe)


def delta_from(expansion: GExpansion) -> LaurentPoly:
    try:
        head = div_exact(expansion[0], G_VALUE)
    except NotDivisible as exc:
        raise InternalInvariantViolation("1 - st does not divide (st)^wr - 1") from exc
    return head + expansion[1]


def delta(d: Diagram) -> LaurentPoly:
    """Δ = c_0 / (1 - st) + c_1, so that S = G Δ + G² (...)."""
    return delta_from(g_expansion(d))


@dataclass(frozen=True)
class MellorReport:
    delta_at_unity: LaurentPoly
    affine: LaurentPoly
    equal_exact: bool
    equal_up_to_unit: bool


def mellor_check(d: Diagram, expansion: GExpansion | None = None) -> MellorReport:
    """Compare Δ(t^-1, t) with the Affine Index Polynomial."""
    if expansion is None:
        expansion = g_expansion(d)
    at_unity = substitute(delta_from(expansion), "s", T_INV)
    p = affine_index_polynomial(d)
    return MellorReport(at_unity, p, at_unity == p, eq_up_to_unit(at_unity, p))


def higher_coefficient_at_unity(d: Diagram, k: int, expansion: GExpansion | None = None) -> LaurentPoly:
    """normalize_unit(c_k(t^-1, t)).  Only k = 2 (Γ) is a proven invariant."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if k > 2:
        warnings.warn(f"c_{k} at st=1 is exploratory, not a proven invariant", ExploratoryInvariantWarning, stacklevel=2)
    if expansion is None:
        expansion = g_expansion(d)
    return normalize_unit(substitute(expansion[k], "s", T_INV))


def gamma_at_unity(d: Diagram, expansion: GExpansion | None = None) -> LaurentPoly:
    """Γ evaluated at st = 1, unit-normalized (equals c_2(t^-1, t))."""
    return higher_coefficient_at_unity(d, 2, expansion)


def _diagonal_exponent(entry: LaurentPoly) -> int:
    """t-exponent at st = 1 of a diagonal symbol t, s, t^-1 or s^-1."""
    ((mono, _),) = substitute(entry, "G", 0).terms.items()
    return mono.t - mono.s


def circuit_weight(d: Diagram, crossing: int, matrix: RelationMatrix | None = None) -> int:
    """Crossing weight read off the relation matrix.

    Walk the knot from the row edge holding the crossing's G-entry to the
    edge of the G-entry's column, adding the st=1 exponent of each
    intermediate edge's diagonal entry.
    """
    c = d.crossings[crossing]
    if matrix is None:
        matrix = relation_matrix(d)
    start, stop = (c.l_in, c.r_in) if c.sign > 0 else (c.r_in, c.l_in)
    succ = d.successor
    total = 0
    e = succ[start]
    while e != stop:
        total += _diagonal_exponent(matrix[e, e])
        e = succ[e]
    return total
