"""Batch drivers: theorem checks over random knots, move fuzzing, pair search.

Per-trial seeds are ``seed + trial_index`` so any single trial can be
replayed on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .affine import affine_index_polynomial, crossing_weights
from .biquandle import (
    G_VALUE,
    circuit_weight,
    expand_in_g,
    gamma_at_unity,
    mellor_check,
    relation_matrix,
    asawollek,
)
from .diagram import Diagram, random_knot
from .errors import InternalInvariantViolation, NotDivisible
from .laurent import div_exact, eq_up_to_unit, normalize_unit, substitute
from .moves import MoveRecord, iter_random_moves

ALL_CHECKS = ("affine", "sawollek", "gamma", "mellor", "structure")


def trial_knot(max_crossings: int, trial_seed: int) -> Diagram:
    m = random.Random(trial_seed).randint(1, max_crossings)
    return random_knot(m, trial_seed)


def random_knots(max_crossings: int, count: int, seed: int) -> list[Diagram]:
    return [trial_knot(max_crossings, seed + i) for i in range(count)]


@dataclass
class Snapshot:
    """All invariants of one diagram, computed from a single determinant."""

    affine: object
    sawollek: object
    gamma: object
    mellor_ok: bool
    structure_errors: list[str]


def snapshot(d: Diagram) -> Snapshot:
    errors: list[str] = []
    a = asawollek(d)
    try:
        expansion = expand_in_g(a, d.writhe)
    except InternalInvariantViolation as exc:
        errors.append(str(exc))
        expansion = None
    raw = substitute(a, "G", G_VALUE)
    try:
        div_exact(raw, G_VALUE)
    except NotDivisible:
        errors.append("1 - st does not divide the Sawollek polynomial")
    if substitute(raw, "s", 1):
        errors.append("S(1, t) != 0")
    if d.crossings:
        weights = crossing_weights(d)
        matrix = relation_matrix(d)
        for i, cw in enumerate(weights):
            if circuit_weight(d, i, matrix) != cw.w:
                errors.append(f"circuit weight != W_K at crossing {i}")
    if expansion is not None:
        report = mellor_check(d, expansion)
        gamma = gamma_at_unity(d, expansion)
        mellor_ok = report.equal_up_to_unit
        p = report.affine
    else:
        gamma, mellor_ok, p = None, False, affine_index_polynomial(d)
    return Snapshot(p, normalize_unit(raw), gamma, mellor_ok, errors)


@dataclass
class Violation:
    knot_index: int
    step: int
    check: str
    detail: str
    before: Diagram
    after: Diagram
    move: MoveRecord | None


@dataclass
class FuzzResult:
    lines: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


def compare(base: Snapshot, now: Snapshot, checks: Iterable[str]) -> list[tuple[str, str]]:
    out = []
    checks = set(checks)
    if "affine" in checks and now.affine != base.affine:
        out.append(("affine", f"P changed: {base.affine} -> {now.affine}"))
    if "sawollek" in checks and not eq_up_to_unit(now.sawollek, base.sawollek):
        out.append(("sawollek", f"S changed: {base.sawollek} -> {now.sawollek}"))
    if "gamma" in checks and not (
        now.gamma is not None and base.gamma is not None and eq_up_to_unit(now.gamma, base.gamma)
    ):
        out.append(("gamma", f"Gamma(st=1) changed: {base.gamma} -> {now.gamma}"))
    if "mellor" in checks and not now.mellor_ok:
        out.append(("mellor", "Delta(t^-1, t) not equal to P up to unit"))
    if "structure" in checks:
        out.extend(("structure", e) for e in now.structure_errors)
    return out


def fuzz(
    knots: int = 100,
    moves: int = 10,
    max_crossings: int = 5,
    seed: int = 1,
    checks: Sequence[str] = ALL_CHECKS,
    progress: Callable[[str], None] | None = None,
) -> FuzzResult:
    """Apply random R1/R2 moves to random knots and check every invariant at every step."""
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    result = FuzzResult()
    for i in range(knots):
        trial_seed = seed + i
        d0 = trial_knot(max_crossings, trial_seed)
        base = snapshot(d0)
        found = compare(base, base, [c for c in checks if c in ("mellor", "structure")])
        violation = None
        if found:
            violation = Violation(i, 0, found[0][0], found[0][1], d0, d0, None)
        prev = d0
        steps = 0
        d = d0
        if violation is None:
            for d, record in iter_random_moves(d0, moves, trial_seed):
                steps += 1
                found = compare(base, snapshot(d), checks)
                if found:
                    violation = Violation(i, steps, found[0][0], found[0][1], prev, d, record)
                    break
                prev = d
        status = "ok" if violation is None else f"VIOLATION[{violation.check}] at step {violation.step}"
        line = f"knot {i}: seed={trial_seed} m={d0.m} steps={steps} final_m={d.m} P={base.affine} {status}"
        result.lines.append(line)
        if progress:
            progress(line)
        if violation is not None:
            result.violations.append(violation)
    result.lines.append(
        f"summary: knots={knots} moves={moves} max_crossings={max_crossings} seed={seed} "
        f"checks={','.join(checks)} violations={len(result.violations)}"
    )
    return result


@dataclass
class MellorBatch:
    total: int
    passed: int
    exact: int
    failures: list[int]


def mellor_batch(diagrams: Sequence[Diagram]) -> MellorBatch:
    passed = exact = 0
    failures = []
    for i, d in enumerate(diagrams):
        report = mellor_check(d)
        if report.equal_up_to_unit:
            passed += 1
            exact += report.equal_exact
        else:
            failures.append(i)
    return MellorBatch(len(diagrams), passed, exact, failures)


@dataclass
class PairResult:
    first: Diagram
    second: Diagram
    first_seed: int
    second_seed: int
    affine: object
    sawollek_distinct: bool
    gamma_distinct: bool
    trials_used: int

    @property
    def distinguished_by(self) -> str:
        parts = [name for name, flag in (("sawollek", self.sawollek_distinct), ("gamma", self.gamma_distinct)) if flag]
        return ",".join(parts)


def pair_distinction(a: Snapshot, b: Snapshot) -> tuple[bool, bool] | None:
    """(S distinct, Γ distinct) when P agrees and something separates the two."""
    if a.affine != b.affine:
        return None
    s_diff = not eq_up_to_unit(a.sawollek, b.sawollek)
    g_diff = not eq_up_to_unit(a.gamma, b.gamma)
    if not (s_diff or g_diff):
        return None
    return s_diff, g_diff


def search_pair(
    max_crossings: int = 6,
    trials: int = 20000,
    seed: int = 1,
    allow_zero_affine: bool = False,
) -> PairResult | None:
    """Find two random knots with the same P but different Sawollek or Γ.

    Pairs separated by the Sawollek polynomial are returned as soon as one
    is seen; a pair separated only by Γ is kept as a fallback.
    """
    buckets: dict[object, list[tuple[int, Diagram, Snapshot]]] = {}
    fallback = None
    for i in range(trials):
        trial_seed = seed + i
        d = trial_knot(max_crossings, trial_seed)
        snap = snapshot(d)
        if not snap.affine and not allow_zero_affine:
            continue
        bucket = buckets.setdefault(snap.affine, [])
        for other_seed, other, other_snap in bucket:
            flags = pair_distinction(other_snap, snap)
            if flags is None:
                continue
            found = PairResult(other, d, other_seed, trial_seed, snap.affine, flags[0], flags[1], i + 1)
            if flags[0]:
                return found
            if fallback is None:
                fallback = found
        bucket.append((trial_seed, d, snap))
    return fallback
