"""Command-line interface.

Exit codes: 0 success, 1 invariant violation, 2 input error, 3 search
exhausted without a result.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, campaigns
from .affine import affine_index_polynomial, crossing_weights
from .biquandle import (
    asawollek,
    delta_from,
    expand_in_g,
    gamma_at_unity,
    mellor_check,
    relation_matrix,
    sawollek,
)
from .diagram import Diagram, format_knot, mirror, parse_knot, reverse
from .errors import EmptyDiagram, ParseError, ValidationError
from .laurent import LaurentPoly, substitute, T

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_NOT_FOUND = 0, 1, 2, 3

WHICH = ("affine", "sawollek", "asawollek", "delta", "gamma", "all")


@dataclass
class InvariantReport:
    name: str
    writhe: int
    weights: list[int]
    affine: LaurentPoly
    asawollek: LaurentPoly
    sawollek: LaurentPoly
    delta: LaurentPoly
    delta_at_unity: LaurentPoly
    gamma: LaurentPoly
    mellor_exact: bool
    mellor_up_to_unit: bool

    def fields(self, which: str = "all") -> list[tuple[str, str]]:
        rows = {
            "affine": [("P", str(self.affine))],
            "asawollek": [("ASawollek", str(self.asawollek))],
            "sawollek": [("Sawollek", str(self.sawollek))],
            "delta": [("Delta", str(self.delta)), ("Delta(t^-1,t)", str(self.delta_at_unity))],
            "gamma": [("Gamma(st=1)", str(self.gamma))],
        }
        if which != "all":
            return rows[which]
        out = [
            ("knot", self.name),
            ("crossings", str(len(self.weights))),
            ("writhe", str(self.writhe)),
            ("weights", " ".join(str(w) for w in self.weights) or "-"),
        ]
        for key in ("affine", "asawollek", "sawollek", "delta", "gamma"):
            out.extend(rows[key])
        verdict = "PASS (exact)" if self.mellor_exact else "PASS (up to unit)" if self.mellor_up_to_unit else "FAIL"
        out.append(("Mellor", verdict))
        return out

    def render(self, which: str = "all", fmt: str = "human") -> str:
        sep = "\t" if fmt == "kv" else ": "
        return "\n".join(f"{k}{sep}{v}" for k, v in self.fields(which)) + "\n"


def build_report(d: Diagram, name: str = "knot") -> InvariantReport:
    a = asawollek(d)
    expansion = expand_in_g(a, d.writhe)
    dl = delta_from(expansion)
    check = mellor_check(d, expansion)
    return InvariantReport(
        name=name,
        writhe=d.writhe,
        weights=[cw.w for cw in crossing_weights(d)],
        affine=affine_index_polynomial(d),
        asawollek=a,
        sawollek=sawollek(d),
        delta=dl,
        delta_at_unity=substitute(dl, "s", T**-1),
        gamma=gamma_at_unity(d, expansion),
        mellor_exact=check.equal_exact,
        mellor_up_to_unit=check.equal_up_to_unit,
    )


class InputError(Exception):
    pass


def load(path: str) -> Diagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_knot(text)
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from exc


def write(path: Path, text: str) -> None:
    try:
        path.write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _name(path: str) -> str:
    return "stdin" if path == "-" else Path(path).stem


def cmd_compute(args) -> int:
    d = load(args.file)
    sys.stdout.write(build_report(d, _name(args.file)).render(args.which, args.format))
    return EXIT_OK


def cmd_matrix(args) -> int:
    d = load(args.file)
    try:
        m = relation_matrix(d)
    except EmptyDiagram as exc:
        raise InputError(str(exc)) from exc
    if args.g_zero:
        m = m.specialize_g(0)
    print(m)
    return EXIT_OK


def cmd_check_mellor(args) -> int:
    if args.random:
        m, count, seed = args.random
        if m < 1 or count < 0:
            raise InputError("--random needs M >= 1 and COUNT >= 0")
        items = [(f"random[{seed + i}]", d) for i, d in enumerate(campaigns.random_knots(m, count, seed))]
    elif args.files:
        items = [(_name(f), load(f)) for f in args.files]
    else:
        raise InputError("give knot files or --random M COUNT SEED")
    failed = 0
    for name, d in items:
        report = mellor_check(d)
        verdict = "PASS (exact)" if report.equal_exact else "PASS (up to unit)" if report.equal_up_to_unit else "FAIL"
        failed += not report.equal_up_to_unit
        if args.verbose or len(items) <= 20 or verdict == "FAIL":
            print(f"{name}: {verdict}  Delta(t^-1,t) = {report.delta_at_unity}  P = {report.affine}")
    print(f"{len(items) - failed}/{len(items)} PASS")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_fuzz(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    try:
        result = campaigns.fuzz(args.knots, args.moves, args.max_crossings, args.seed, checks)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    for line in result.lines:
        print(line)
    if result.clean:
        return EXIT_OK
    v = result.violations[0]
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    note = f"fuzz seed {args.seed}, knot {v.knot_index}, step {v.step}: {v.detail}"
    before = out / "fuzz_violation_before.knot"
    after = out / "fuzz_violation_after.knot"
    write(before, format_knot(v.before, note + "\ndiagram before the move"))
    write(after, format_knot(v.after, note + f"\ndiagram after {v.move}"))
    print(f"violation: {v.detail}", file=sys.stderr)
    print(f"reproducer: {before} -> {after} via {v.move}", file=sys.stderr)
    sys.stderr.write(format_knot(v.after))
    return EXIT_VIOLATION


def cmd_transform(args) -> int:
    d = load(args.file)
    out = mirror(d) if args.op == "mirror" else reverse(d)
    write(Path(args.out), format_knot(out))
    return EXIT_OK


def cmd_search(args) -> int:
    found = campaigns.search_pair(args.max_crossings, args.trials, args.seed, args.allow_zero_affine)
    if found is None:
        print(f"NOT_FOUND after {args.trials} trials")
        return EXIT_NOT_FOUND
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for tag, d, seed in (("a", found.first, found.first_seed), ("b", found.second, found.second_seed)):
        report = build_report(d, f"pair_{tag}")
        comment = f"random knot, trial seed {seed}\n" + report.render("all").rstrip("\n")
        path = out / f"pair_{tag}.knot"
        write(path, format_knot(d, comment))
        print(f"== {path}")
        sys.stdout.write(report.render("all"))
    print(f"FOUND after {found.trials_used} trials: equal P = {found.affine}; distinguished by {found.distinguished_by}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vknot", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute invariants of a knot file")
    p.add_argument("file", help="knot file, or - for stdin")
    p.add_argument("--which", choices=WHICH, default="all")
    p.add_argument("--format", choices=("human", "kv"), default="human")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("matrix", help="print the relation matrix M(K)")
    p.add_argument("file")
    p.add_argument("--g-zero", action="store_true", help="print N(K) (G replaced by 0)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("check-mellor", help="check Delta(t^-1, t) = P up to units")
    p.add_argument("files", nargs="*")
    p.add_argument("--random", nargs=3, type=int, metavar=("M", "COUNT", "SEED"))
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check_mellor)

    p = sub.add_parser("fuzz", help="random Reidemeister-move invariance campaign")
    p.add_argument("--knots", type=int, default=100)
    p.add_argument("--moves", type=int, default=10)
    p.add_argument("--max-crossings", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--checks", default=",".join(campaigns.ALL_CHECKS), help="comma-separated subset of %(default)s")
    p.add_argument("--out-dir", default=".", help="where reproducer files go on failure")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("transform", help="write the mirror image or reverse of a knot")
    p.add_argument("file")
    p.add_argument("op", choices=("mirror", "reverse"))
    p.add_argument("out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search-gamma-pair", help="find knots with equal P but different Sawollek or Gamma")
    p.add_argument("--max-crossings", type=int, default=6)
    p.add_argument("--trials", type=int, default=20000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--allow-zero-affine", action="store_true", help="also consider knots with P = 0")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"vknot: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
