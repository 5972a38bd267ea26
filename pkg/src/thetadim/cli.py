"""Command-line front end.

Exit codes: 0 everything passed, 1 conformance failure (or a landmark set that
does not resolve), 2 usage error, 3 vertex-count guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import predict_beta
from .cycles import check_cycle_propositions
from .harness import SweepConfig, open_cases, render_open_cases, render_report, run_sweep
from .model import SpecError, parse_spec, parse_vertex
from .resolving import SearchLimitExceeded, metric_dimension, vector_representation, verify_resolving

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _fmt_landmarks(W) -> str:
    return " ".join(str(w) for w in W)


def _fmt_vec(vec) -> str:
    return "(" + ",".join(map(str, vec)) + ")"


def cmd_beta(args) -> int:
    spec = parse_spec(args.spec)
    if spec.n > args.guard_n and not args.force:
        print(f"{spec} has n={spec.n} > guard {args.guard_n}; pass --force to search anyway", file=sys.stderr)
        return EXIT_GUARD
    result = metric_dimension(spec, args.cap, pruned=args.pruned)
    pred = predict_beta(spec)
    if spec.is_cycle:
        print(f"beta={result.beta} (cycle C{spec.n})")
    else:
        print(f"beta={result.beta} predicted={pred} ({pred.theorem_id})")
    print(f"witness: {_fmt_landmarks(result.witnesses[0])}")
    if pred.witness is not None:
        print(f"constructed: {_fmt_landmarks(pred.witness)}")
    if args.all_witnesses:
        shown = len(result.witnesses)
        more = f", first {shown} shown" if result.truncated else ""
        print(f"bases: {result.basis_count}{more}")
        for W in result.witnesses:
            print("  " + _fmt_landmarks(W))
    return EXIT_OK if pred.contains(result.beta) else EXIT_FAIL


def cmd_verify(args) -> int:
    spec = parse_spec(args.spec)
    W = [parse_vertex(t, spec) for t in args.landmarks]
    verdict = verify_resolving(spec, W)
    tag = f" (cycle C{spec.n})" if spec.is_cycle else ""
    if verdict.resolved:
        print(f"resolving{tag}")
        return EXIT_OK
    a, b = verdict.collision
    vec = vector_representation(spec, W, a)
    print(f"NOT resolving{tag}: {a} ~ {b} both {_fmt_vec(vec)}")
    return EXIT_FAIL


def _config(args) -> SweepConfig:
    return SweepConfig(
        min_m=args.min_m, max_m=args.max_m, min_s=args.min_s, max_s=args.max_s,
        guard_n=args.guard_n, max_k=args.max_k, witness_cap=args.cap, jobs=args.jobs,
        fmt=args.format, out=args.out, pruned=args.pruned, timing=args.timing,
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_sweep(args) -> int:
    config = _config(args)
    rows = run_sweep(config)
    try:
        _emit(render_report(rows, config), config.out)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    failed = [r for r in rows if not r.passed]
    skipped = sum(r.beta == "skipped" for r in rows)
    print(f"{len(rows)} specs, {len(failed)} failed, {skipped} skipped", file=sys.stderr)
    for r in failed:
        bad = ",".join(k for k, v in r.flags.items() if not v)
        print(f"  FAIL {r.spec}: {bad}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_open_cases(args) -> int:
    fmt = args.format
    args.format = "json" if fmt == "text" else fmt
    config = _config(args)
    cases = open_cases(config)
    try:
        _emit(render_open_cases(cases, fmt), config.out)
    except OSError as exc:
        print(f"cannot write table: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_cycles(args) -> int:
    checks = check_cycle_propositions(args.min_n, args.max_n)
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        extra = "" if c.ok else f" ({len(c.failures)} failures, e.g. {list(c.failures[:3])})"
        print(f"{status} {c.name}: {c.cases} cases{extra}")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def _sweep_flags(p: argparse.ArgumentParser, max_m: int = 4, max_s: int = 6,
                 formats: tuple[str, ...] = ("json", "csv")) -> None:
    p.add_argument("--min-m", type=int, default=3)
    p.add_argument("--max-m", type=int, default=max_m)
    p.add_argument("--min-s", type=int, default=1)
    p.add_argument("--max-s", type=int, default=max_s)
    p.add_argument("--guard-n", type=int, default=32, help="skip brute force above this vertex count")
    p.add_argument("--max-k", type=int, default=6, help="largest subset size searched before skipping")
    p.add_argument("--cap", type=int, default=64, help="witness cap per spec")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pruned", action="store_true", help="skip subsets equivalent under equal-path swaps")
    p.add_argument("--timing", action="store_true", help="record per-row wall time (breaks byte-identity)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetadim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("beta", help="exact metric dimension of one graph")
    p.add_argument("spec", help="e.g. theta:1,2,3")
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--guard-n", type=int, default=32)
    p.add_argument("--force", action="store_true")
    p.add_argument("--pruned", action="store_true")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("verify", help="check whether landmarks resolve a graph")
    p.add_argument("spec")
    p.add_argument("landmarks", nargs="+", help="c1, c2 or v:i:j")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="theorem-conformance sweep")
    _sweep_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("open-cases", help="interval-only predictions with brute-forced values")
    _sweep_flags(p, max_m=5, max_s=4, formats=("text", "json", "csv"))
    p.set_defaults(func=cmd_open_cases)

    p = sub.add_parser("cycles", help="exhaustive checks of the cycle facts")
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-n", type=int, default=24)
    p.set_defaults(func=cmd_cycles)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
