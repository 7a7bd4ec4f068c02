"""Command line interface.

Exit status: 0 all-pass, 1 a verification suite found a violation, 2 input or
configuration error. The COHINV_FACTOR_BUDGET environment variable overrides
the factorization step budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import factorint as fi
from .errors import CohinvError
from .harness import (
    Config,
    REPORT_SCHEMA,
    SUITE_NAMES,
    ingest_corpus_report,
    random_form,
    run_suite,
)
from .hyperell import BinaryForm, ProjectivePoint, beta, curve_alpha, smooth_check, tau
from .kcohomology import render


def _parse_coeffs(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise CohinvError(f"bad coefficient list: {exc}") from None


def _parse_point(text: str) -> ProjectivePoint:
    parts = text.split(":")
    if len(parts) != 2:
        raise CohinvError("point must be given as p0:p1")
    try:
        return ProjectivePoint.of(Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise CohinvError(f"bad point: {exc}") from None


def _invariant_report(f: BinaryForm, point: ProjectivePoint | None, budget: int) -> dict:
    g = f.genus
    invariants: dict = {}
    for i in range(g + 3):
        invariants[f"alpha_{i}"] = render(curve_alpha(i, f), budget)
    if f.coeffs[0] != 0:
        invariants["tau"] = render(tau(f), budget)
    else:
        invariants["tau"] = None  # does not extend to the x0 = 0 locus
    if g % 2 == 0:
        invariants["beta"] = render(beta(f, point), budget)
    else:
        invariants["beta"] = None  # construction needs even genus
    return {
        "schema": REPORT_SCHEMA,
        "command": "invariants",
        "coeffs": [str(c) for c in f.coeffs],
        "genus": g,
        "point": str(point) if point is not None else None,
        "invariants": invariants,
    }


def _emit_invariants(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return
    print(f"genus: {report['genus']}")
    inv = report["invariants"]
    for i in range(report["genus"] + 3):
        print(f"alpha_{i}: {_flat(inv[f'alpha_{i}'])}")
    print(f"tau: {_flat(inv['tau']) if inv['tau'] is not None else 'undefined (x0 = 0)'}")
    if inv["beta"] is not None:
        print(f"beta: {_flat(inv['beta'])}")
    else:
        print("beta: undefined (odd genus)")


def _flat(rendered: str) -> str:
    return "; ".join(rendered.splitlines())


def cmd_invariants(args, budget: int) -> int:
    f = BinaryForm(_parse_coeffs(args.coeffs))
    if not smooth_check(f):
        raise CohinvError("form is not squarefree; invariants are undefined")
    point = _parse_point(args.point) if args.point else None
    report = _invariant_report(f, point, budget)
    _emit_invariants(report, args.json)
    return 0


def cmd_verify(args, budget: int) -> int:
    genus = tuple(int(g) for g in args.genus.split(",")) if args.genus else (2, 4)
    cfg = Config(
        seed=args.seed,
        cases=args.cases,
        height=args.height,
        genus=genus,
        factor_budget=budget,
        output=args.output,
    )
    report = run_suite(args.suite, cfg)
    if args.json:
        print(report.to_json())
    else:
        status = "pass" if report.passed else "FAIL"
        print(
            f"{report.suite}: {status} ({report.cases_run} cases, "
            f"{len(report.violations)} violations, {report.skipped} skipped, "
            f"{report.elapsed_ms} ms)"
        )
        for v in report.violations[:10]:
            print(f"  violation: {json.dumps(v, sort_keys=True)}")
        for d in report.diagnostics[:10]:
            print(f"  note: {d}")
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as handle:
            handle.write(report.to_json() + "\n")
    return 0 if report.passed else 1


def cmd_corpus(args, budget: int) -> int:
    records, diagnostics = ingest_corpus_report(args.file)
    for note in diagnostics:
        print(f"note: {note}", file=sys.stderr)
    if not records:
        print("error: no valid records in corpus", file=sys.stderr)
        return 2
    outputs = []
    for record in records:
        report = _invariant_report(record.form(), None, budget)
        report["id"] = record.id
        report["tags"] = list(record.tags)
        outputs.append(report)
    if args.json:
        print(
            json.dumps(
                {"schema": REPORT_SCHEMA, "command": "corpus", "records": outputs},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    else:
        for report in outputs:
            print(f"[{report['id']}] genus {report['genus']}")
            inv = report["invariants"]
            for key in sorted(inv, key=_inv_order):
                value = inv[key]
                print(f"  {key}: {_flat(value) if value is not None else 'undefined'}")
    return 0


def _inv_order(key: str):
    if key.startswith("alpha_"):
        return (0, int(key.split("_")[1]))
    return (1, key)


def cmd_random(args, budget: int) -> int:
    f = random_form(args.seed, args.genus, args.height)
    coeffs = ",".join(str(c) for c in f.coeffs)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": REPORT_SCHEMA,
                    "command": "random",
                    "seed": args.seed,
                    "genus": args.genus,
                    "height": args.height,
                    "coeffs": [str(c) for c in f.coeffs],
                },
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    else:
        print(coeffs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohinv",
        description="Exact mod-2 cohomological invariants of even-genus "
        "hyperelliptic curves over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="evaluate the invariants of one form")
    p_inv.add_argument("--coeffs", required=True, help="x0,...,xn (rationals, n even >= 6)")
    p_inv.add_argument("--point", help="evaluation point p0:p1 for beta")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITE_NAMES)
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--cases", type=int, default=None)
    p_ver.add_argument("--height", type=int, default=20)
    p_ver.add_argument("--genus", help="comma-separated even genus list, default 2,4")
    p_ver.add_argument("--output", help="also write the JSON report to this path")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_cor = sub.add_parser("corpus", help="corpus operations")
    cor_sub = p_cor.add_subparsers(dest="corpus_command", required=True)
    p_run = cor_sub.add_parser("run", help="evaluate invariants for every record")
    p_run.add_argument("file")
    p_run.add_argument("--json", action="store_true")
    p_run.set_defaults(func=cmd_corpus)

    p_rand = sub.add_parser("random", help="emit a seeded random squarefree form")
    p_rand.add_argument("--seed", type=int, required=True)
    p_rand.add_argument("--genus", type=int, required=True)
    p_rand.add_argument("--height", type=int, required=True)
    p_rand.add_argument("--json", action="store_true")
    p_rand.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = fi.DEFAULT_BUDGET
    env = os.environ.get("COHINV_FACTOR_BUDGET")
    if env:
        try:
            budget = int(env)
            fi.set_default_budget(budget)
        except ValueError:
            print(f"error: bad COHINV_FACTOR_BUDGET {env!r}", file=sys.stderr)
            return 2
    try:
        return args.func(args, budget)
    except (CohinvError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
