"""Command-line front end.

Subcommands:

    table    emit one Whitney triangle as JSON or CSV
    verify   run identity suites over a parameter grid
    dist     probe the Heine/Euler distributions (pmf, moments, sampling)
    hankel   compare Hankel transforms of Dowling sequences across r values

Exit codes: 0 success / all checks pass, 1 a verified violation, 2 bad
arguments or domain errors.  Rationals are written `p`, `-p`, or `p/q` with
q > 0; floats are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError
from .identities import (
    DEFAULT_GRID,
    IdentityId,
    UnknownIdentityError,
    hankel_probe,
    verify,
)
from .modes import SYMBOLIC, canonical_text, parse_qmode, parse_scalar
from .qdist import QDistSpec, direct_moment_oracle, q_factorial_moment, sample, whitney_moment
from .qdist import _pmf_stream, _qint  # shared numeric helpers
from .whitney import WhitneyParams, whitney_first_triangle, whitney_second_triangle

FORMAT_VERSION = "1"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwhitney", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a Whitney triangle")
    p.add_argument("--kind", required=True, choices=("first", "second"))
    p.add_argument("--nmax", required=True, type=int)
    p.add_argument("--m", required=True, type=_rational)
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--q", required=True, help="symbolic or a rational like 1/2")
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=run_table)

    p = sub.add_parser("verify", help="run identity suites over a grid")
    p.add_argument("--suite", default="all", help="all or comma-separated identity ids")
    p.add_argument("--nmax", default=10, type=int)
    p.add_argument("--grid", default="default", help="default or a JSON file of [m, r] pairs")
    p.add_argument("--q", default="symbolic")
    p.add_argument("--report", default=None, help="write one JSON report per line here")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("dist", help="Heine/Euler distribution operations")
    p.add_argument("--family", required=True, choices=("heine", "euler"))
    p.add_argument("--q", required=True, type=float)
    p.add_argument("--lambda", required=True, type=float, dest="lam")
    p.add_argument("--op", required=True, choices=("pmf", "moments", "sample"))
    p.add_argument("--n", default=None, type=int)
    p.add_argument("--m", default=Fraction(1), type=_rational)
    p.add_argument("--r", default=Fraction(0), type=_rational)
    p.add_argument("--count", default=10, type=int)
    p.add_argument("--seed", default=0, type=int)
    p.add_argument("--tol", default=1e-12, type=float)
    p.set_defaults(func=run_dist)

    p = sub.add_parser("hankel", help="Dowling-sequence Hankel probe")
    p.add_argument("--m", required=True, type=_rational)
    p.add_argument("--r-values", required=True, dest="r_values",
                   help="comma-separated rationals")
    p.add_argument("--q", required=True, type=_rational)
    p.add_argument("--order", required=True, type=int)
    p.set_defaults(func=run_hankel)

    return parser


def table_document(triangle) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": triangle.kind,
        "m": str(triangle.params.m),
        "r": str(triangle.params.r),
    }
    doc.update(triangle.params.qmode.describe())
    doc["nmax"] = triangle.nmax
    doc["rows"] = [
        {"n": n, "k": k, "value": canonical_text(triangle.value(n, k))}
        for n in range(triangle.nmax + 1)
        for k in range(n + 1)
    ]
    return doc


def render_table_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_table_csv(doc: dict) -> str:
    rows: dict[int, list[str]] = {}
    for cell in doc["rows"]:
        rows.setdefault(cell["n"], []).append(cell["value"])
    return "".join(",".join(rows[n]) + "\n" for n in sorted(rows))


def parse_table_document(text: str) -> dict:
    """Parse a JSON table back; adds parsed scalars under 'parsed_values'."""
    doc = json.loads(text)
    mode = SYMBOLIC if doc["qmode"] == "symbolic" else parse_qmode(str(doc["q0"]))
    doc["parsed_values"] = {
        (cell["n"], cell["k"]): parse_scalar(cell["value"], mode) for cell in doc["rows"]
    }
    return doc


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def run_table(args) -> int:
    if args.nmax < 0:
        raise DomainError("--nmax must be >= 0")
    mode = parse_qmode(args.q)
    params = WhitneyParams(args.m, args.r, mode)
    build = whitney_first_triangle if args.kind == "first" else whitney_second_triangle
    doc = table_document(build(params, args.nmax))
    render = render_table_json if args.format == "json" else render_table_csv
    _emit(render(doc), args.out)
    return 0


def _load_grid(source: str) -> list[tuple[Fraction, Fraction]]:
    if source == "default":
        return list(DEFAULT_GRID)
    with open(source, encoding="utf-8") as fh:
        raw = json.load(fh)
    grid = []
    for entry in raw:
        m, r = entry
        grid.append((Fraction(str(m)), Fraction(str(r))))
    return grid


def run_verify(args) -> int:
    if args.suite == "all":
        identities = list(IdentityId)
    else:
        identities = []
        for name in args.suite.split(","):
            try:
                identities.append(IdentityId(name.strip()))
            except ValueError:
                raise UnknownIdentityError(f"unknown identity {name.strip()!r}") from None
    mode = parse_qmode(args.q)
    grid = _load_grid(args.grid)

    failures = 0
    checked = 0
    stream = open(args.report, "w", encoding="utf-8") if args.report else None
    try:
        for identity in identities:
            reports = []
            for m, r in grid:
                reports.extend(verify(identity, WhitneyParams(m, r, mode), args.nmax))
            reports.sort(key=lambda rep: (rep.identity, sorted(
                (k, str(v)) for k, v in rep.point.items())))
            bad = sum(not rep.passed for rep in reports)
            checked += len(reports)
            failures += bad
            print(f"{identity.value}\t{len(reports)}\t{bad}")
            if stream is not None:
                for rep in reports:
                    stream.write(json.dumps(rep.as_json_dict()) + "\n")
    finally:
        if stream is not None:
            stream.close()
    print(f"{'PASS' if failures == 0 else 'FAIL'}\t{checked}\t{failures}")
    return 0 if failures == 0 else 1


def _fmt(x: float) -> str:
    return format(x, ".17g")


def run_dist(args) -> int:
    spec = QDistSpec(args.family, args.q, args.lam, tol=args.tol)
    if args.op == "pmf":
        stream = _pmf_stream(spec)
        cumulative = 0.0
        x = 0
        while True:
            p = next(stream)
            cumulative += p
            print(f"{x}\t{_fmt(p)}")
            x += 1
            if args.n is not None:
                if x > args.n:
                    break
            elif cumulative >= 1.0 - 1e-12:
                break
        return 0
    if args.op == "moments":
        top = 3 if args.n is None else args.n
        m = float(args.m)
        r = float(args.r)
        q = spec.q
        for k in range(top + 1):
            closed = q_factorial_moment(spec, k)

            def falling(x: int, k: int = k) -> float:
                if x < k:
                    return 0.0 if k else 1.0
                out = 1.0
                for i in range(k):
                    out *= _qint(x - i, q)
                return out

            oracle = direct_moment_oracle(spec, falling)
            print(f"factorial\t{k}\t{_fmt(closed)}\t{_fmt(oracle)}\t{_fmt(abs(closed - oracle))}")
        for n in range(top + 1):
            value = whitney_moment(spec, m, r, n)
            oracle = direct_moment_oracle(
                spec, lambda x: (m * _qint(x, q) + r) ** n)
            print(f"whitney\t{n}\t{_fmt(value)}\t{_fmt(oracle)}\t{_fmt(abs(value - oracle))}")
        return 0
    draws = sample(spec, args.count, args.seed)
    for value in draws:
        print(value)
    return 0


def run_hankel(args) -> int:
    r_values = [Fraction(tok) for tok in args.r_values.split(",")]
    if args.order < 1:
        raise DomainError("--order must be >= 1")
    result = hankel_probe(args.m, r_values, args.q, args.order)
    for r in r_values:
        row = result.rows[Fraction(r)]
        print(str(r) + "\t" + "\t".join(canonical_text(v) for v in row))
    if not result.equal:
        print("hankel mismatch across r values", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"qwhitney: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
