"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .constructions import parse_generator
from .experiments import (
    ALGORITHMS,
    ExperimentSpec,
    rows_to_csv,
    run,
    sweep,
    sweep_specs,
)
from .graph import BudgetExceeded, GraphFormatError, GraphValidationError, format_graph, load_graph
from .oracle import Method
from .verify import verify_additive, verify_multiplicative

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition("-")
        out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    return out


def _add_build_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--mode", choices=("exhaustive", "approx"), default="exhaustive")
    p.add_argument("--polylog-const", type=float, default=1.0)
    p.add_argument("--cb", type=float, default=1.0, help="constant in b = cb * k * d")
    p.add_argument("--c", type=float, default=1.0, help="constant in the c*f floor of d")
    p.add_argument("--budget", type=float, default=None,
                   help="cap on enumerated fault sets / verifier checks")
    p.add_argument("--verify", action="store_true")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ftem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build one spanner or emulator")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", help="generator spec, e.g. gnp:n=12:p=0.5:seed=1")
    src.add_argument("--graph", type=Path, help="edge-list file")
    b.add_argument("--algo", choices=ALGORITHMS, required=True)
    b.add_argument("--f", type=int, required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", help="write the serialized emulator here ('-' for stdout)")
    _add_build_options(b)

    s = sub.add_parser("sweep", help="grid of builds, CSV out")
    s.add_argument("--gen", required=True)
    s.add_argument("--algo", default="spanner,emk", help="comma-separated algorithms")
    s.add_argument("--f", default="1", help="list such as 1,2,4 or 1-3")
    s.add_argument("--seeds", default="0")
    s.add_argument("--out", help="CSV path (default stdout)")
    s.add_argument("--jobs", type=int, default=1)
    _add_build_options(s)
    s.set_defaults(k=None)
    s.add_argument("--ks", default=None, help="list of k values (overrides --k)")

    v = sub.add_parser("verify", help="exhaustively verify an emulator file")
    v.add_argument("--graph", type=Path, required=True)
    v.add_argument("--emulator", type=Path, required=True)
    v.add_argument("--f", type=int, required=True)
    v.add_argument("--mode", choices=("multiplicative", "additive"), default="multiplicative")
    v.add_argument("--bound", type=float, required=True, help="stretch t or additive c")
    v.add_argument("--budget", type=float, default=None)

    g = sub.add_parser("gen", help="write a generated graph as an edge list")
    g.add_argument("--gen", required=True)
    g.add_argument("--out", default="-")
    return parser


def _budget(x: float | None) -> int | None:
    return None if x is None else int(x)


def _spec(args, algorithm: str, f: int, k: int, seed: int, generator: str) -> ExperimentSpec:
    return ExperimentSpec(
        generator=generator, algorithm=algorithm, f=f, k=k, seed=seed,
        verify=args.verify, mode=Method(args.mode.upper()),
        polylog_const=args.polylog_const, c_b=args.cb, c=args.c,
        budget=_budget(args.budget),
    )


def _write(text: str, target: str | None) -> None:
    if target is None:
        return
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def cmd_build(args) -> int:
    G = load_graph(args.graph) if args.graph else parse_generator(args.gen)
    spec = _spec(args, args.algo, args.f, args.k, args.seed,
                 args.gen or str(args.graph))
    result = run(spec, G)
    _write(serialize.dumps(result.emulator), args.out)
    print(result.summary())
    if result.report is not None and not result.report.passed:
        return EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args) -> int:
    ks = _int_list(args.ks) if args.ks else [args.k if args.k is not None else 3]
    algos = [a.strip() for a in args.algo.split(",")]
    for a in algos:
        if a not in ALGORITHMS:
            print(f"unknown algorithm {a!r}", file=sys.stderr)
            return EXIT_USAGE
    specs = sweep_specs(args.gen, algos, _int_list(args.f), ks, _int_list(args.seeds),
                        verify=args.verify, mode=Method(args.mode.upper()),
                        polylog_const=args.polylog_const, c_b=args.cb, c=args.c,
                        budget=_budget(args.budget))
    rows = sweep(specs, jobs=args.jobs)
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if any(r["verified"] == "fail" for r in rows) else EXIT_OK


def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    H = serialize.loads(Path(args.emulator).read_text(), G)
    check = verify_multiplicative if args.mode == "multiplicative" else verify_additive
    report = check(G, H, args.f, args.bound, budget=_budget(args.budget))
    print(report.to_json())
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    _write(format_graph(parse_generator(args.gen)), args.out)
    return EXIT_OK


COMMANDS = {"build": cmd_build, "sweep": cmd_sweep, "verify": cmd_verify, "gen": cmd_gen}


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphFormatError, GraphValidationError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
