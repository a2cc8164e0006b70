"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 coset budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import orbifold as orb
from .presentations import (
    FAMILIES,
    PresentationSyntaxError,
    TwistUnavailable,
    coxeter_presentation,
    family_group,
    format_presentation,
    parse_presentation,
    twisted_presentation,
)
from .tc import BUDGET_ENV, Completed, default_budget, enumerate_cosets
from .tetra import LabeledTetrahedron, classify_geometry, is_coxeter, leading_minors
from .verify import build_checks, report_dict, run_checks

EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3


class UsageError(Exception):
    pass


def _labels(text: str) -> LabeledTetrahedron:
    try:
        values = [int(x) for x in text.split(",")]
        return LabeledTetrahedron.from_labels(values)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--labels expects six integers >= 2 separated by commas: {exc}") from None


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows if len(rows) != 1 else rows[0], indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def cmd_classify(args, out) -> int:
    t = _labels(args.labels)
    cls = classify_geometry(t)
    triples = t.vertex_triples()
    minors = leading_minors(t)
    if args.format == "text":
        out.write(f"{cls}\n")
        out.write(f"tetrahedron: {t}\n")
        for v, tr in enumerate(triples, 1):
            s = sum(Fraction(1, x) for x in tr)
            out.write(f"vertex {v}: {tr}  1/a+1/b+1/c = {s}\n")
        out.write("leading minors: " + " ".join(f"{d:.12g}" for d in minors) + "\n")
    else:
        row = {
            "class": cls.value,
            "tetrahedron": str(t),
            "labels": ",".join(map(str, t.labels)),
            "coxeter": is_coxeter(t),
            "vertex_triples": ";".join(",".join(map(str, tr)) for tr in triples),
            "leading_minors": ";".join(repr(d) for d in minors),
        }
        _emit_rows([row], args.format, out)
    return 0


def cmd_order(args, out) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    if budget < 1:
        raise UsageError("--budget must be >= 1")
    k = None
    t = None
    if args.presentation:
        try:
            p = parse_presentation(args.presentation)
        except PresentationSyntaxError as exc:
            raise UsageError(str(exc)) from None
    elif args.labels:
        t = _labels(args.labels)
        twists = [w for w in (args.twist or "").split(",") if w]
        try:
            p = twisted_presentation(t, twists) if twists else coxeter_presentation(t)
        except (TwistUnavailable, ValueError) as exc:
            raise UsageError(str(exc)) from None
    elif args.family:
        if args.n is None or args.m is None:
            raise UsageError("--family needs --n and --m")
        if "mu" in FAMILIES[args.family][1] and args.n != args.m:
            raise UsageError(f"{args.family} requires n = m")
        try:
            t, p = family_group(args.family, args.n, args.m)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        k = FAMILIES[args.family][2]
    else:
        raise UsageError("give one of --family, --labels or --presentation")

    if args.show_presentation:
        out.write(format_presentation(p) + "\n")
    result = enumerate_cosets(p, (), budget)
    if not isinstance(result, Completed):
        line = f"exceeded (budget {budget})"
        if t is not None:
            line += f"; geometry certificate: {classify_geometry(t)}"
        out.write(line + "\n")
        return EXIT_BUDGET
    line = str(result.index)
    if k is not None:
        try:
            g = orb.genus_from_order(result.index, Fraction(-1, k))
            line += f" (genus {g})" if k == 24 else f" (genus {g} at 48(g-1))"
        except orb.NonIntegralGenus:
            line += f" (order not divisible by {k})"
    out.write(line + "\n")
    return 0


def cmd_glue(args, out) -> int:
    try:
        spec = orb.GluingSpec(
            orb.MinimalOrbifoldType.parse(args.left),
            orb.MinimalOrbifoldType.parse(args.right),
            orb.GluingMap(args.map),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outcome = orb.classify_gluing(spec)
    line = str(outcome)
    t = orb.quotient_tetrahedron(outcome)
    if t is not None:
        line += f" - {classify_geometry(t).value.lower()} {t}"
    out.write(line + "\n")
    return 0


def render_report(results, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report_dict(results), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "anchor", "expected", "computed", "pass", "elapsed_ms"])
        for r in results:
            writer.writerow([r.id, r.anchor, r.expected, r.computed, r.passed, f"{r.elapsed_ms:.3f}"])
        return buf.getvalue()
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.id}  expected={r.expected}  computed={r.computed}  ({r.elapsed_ms:.0f} ms)"
        for r in results
    ]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(args, out, checks=None) -> int:
    results = run_checks(build_checks() if checks is None else checks)
    out.write(render_report(results, args.format))
    return 0 if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxtet", description="Coxeter tetrahedra, coset enumeration and minimal handlebody orbifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="geometry of a labeled tetrahedron")
    p.add_argument("--labels", required=True, help="m12,m34,m13,m24,m14,m23, i.e. C(n,m;a,b;c,d)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("order", help="group order by coset enumeration")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--labels", help="Coxeter group of an arbitrary labeled tetrahedron")
    p.add_argument("--twist", help="with --labels: comma-separated subset of tau,mu")
    p.add_argument("--presentation", help="'gens | relator/relator/...'")
    p.add_argument("--show-presentation", action="store_true")
    p.add_argument("--budget", type=int, help=f"live coset limit (default ${BUDGET_ENV} or 10^6)")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("glue", help="classify a gluing of two minimal handlebody orbifolds")
    p.add_argument("--left", required=True, help="H2..H5 or Ht2..Ht5")
    p.add_argument("--right", required=True)
    p.add_argument("--map", required=True, choices=("id", "refl"))
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("verify-paper", help="re-derive every numeric claim")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"coxtet {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
