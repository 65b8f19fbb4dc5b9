"""Command-line entry point: ``bbd <subcommand> ...`` or ``python3 -m bbdigraph``.

Exit codes: 0 success, 2 invalid input or refused parameters, 3 negative
result (witness or ``absent`` on stdout), 4 theorem violations found,
5 internal consistency error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .conditions import CONDITION_NAMES, ConditionKind, check_condition
from .core import Cycle, parse, serialize
from .cycles import (
    HamiltonCycle,
    contraction,
    find_hamilton_cycle,
    is_bipancyclic,
    serialize_general,
)
from .errors import BudgetExhausted, ConsistencyError, InputError, NoPerfectMatching
from .matching import cycle_factor, minimal_cycle_factor
from .verify import generate
from .verify.harness import TheoremId, verify_theorem
from .verify.search import TARGETS, SearchTarget, open_problem_search

EXIT_OK, EXIT_INVALID, EXIT_NEGATIVE, EXIT_VIOLATION, EXIT_CONSISTENCY = 0, 2, 3, 4, 5
GEN_KINDS = ("cycle", "complete", "empty", "random", "biased", "index")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _read_digraph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gen(args) -> int:
    if args.kind in ("random", "biased") and args.seed is None:
        raise InputError(f"--kind {args.kind} requires --seed")
    if args.kind == "cycle":
        D = generate.directed_cycle(args.a)
    elif args.kind == "complete":
        D = generate.complete(args.a)
    elif args.kind == "empty":
        D = generate.empty(args.a)
    elif args.kind == "random":
        D = generate.random_digraph(args.a, args.p, args.seed)
    elif args.kind == "biased":
        if args.floor is None:
            raise InputError("--kind biased requires --floor")
        D = generate.biased_highdegree_digraph(args.a, args.floor, args.seed, args.p)
    else:
        if args.index is None:
            raise InputError("--kind index requires --index")
        from .core import BipartiteDigraph
        D = BipartiteDigraph.from_index(args.a, args.index)
    _out(serialize(D, args.format))
    return EXIT_OK


def cmd_check(args) -> int:
    D = _read_digraph(args.file)
    verdict = check_condition(D, ConditionKind(args.condition, args.k))
    _out(str(verdict))
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_hamilton(args) -> int:
    C = find_hamilton_cycle(_read_digraph(args.file))
    _out("absent" if C is None else str(C))
    return EXIT_NEGATIVE if C is None else EXIT_OK


def cmd_bipancyclic(args) -> int:
    spectrum = is_bipancyclic(_read_digraph(args.file))
    _out(str(spectrum))
    return EXIT_OK if spectrum.holds else EXIT_NEGATIVE


def cmd_factor(args) -> int:
    D = _read_digraph(args.file)
    try:
        if args.minimal:
            try:
                factor = minimal_cycle_factor(D, args.budget)
            except BudgetExhausted as exc:
                print(f"warning: {exc}; printing the best factor found", file=sys.stderr)
                factor = exc.best
        else:
            factor = cycle_factor(D)
    except NoPerfectMatching as exc:
        names = " ".join(str(v) for v in sorted(exc.violator))
        _out(f"absent\nhall-violator {exc.direction}: {names}")
        return EXIT_NEGATIVE
    _out(factor.to_text())
    return EXIT_OK


def cmd_contract(args) -> int:
    D = _read_digraph(args.file)
    tokens = args.cycle.partition("cycle:")[2].split() if "cycle:" in args.cycle else args.cycle.split()
    # a Y-first sequence is taken as the labelling; otherwise rotate to the smallest Y
    if tokens and tokens[0].startswith("y"):
        C = HamiltonCycle.parse(args.cycle)
    else:
        C = HamiltonCycle.from_cycle(Cycle.parse(args.cycle))
    _out(serialize_general(contraction(D, C)))
    return EXIT_OK


def _write_sidecar(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    report = verify_theorem(
        args.theorem, args.a, args.k, args.mode, args.samples, args.seed, args.jobs, args.max_instances
    )
    _out(report.to_text())
    if args.sidecar:
        _write_sidecar(args.sidecar, report.to_json(timing=True))
    print(f"wall_time: {report.wall_time:.3f}s", file=sys.stderr)
    return EXIT_VIOLATION if report.conclusion_violations else EXIT_OK


def cmd_search(args) -> int:
    target = SearchTarget(args.target, args.a, args.lam, args.mode, args.samples, args.seed)
    report = open_problem_search(target, args.jobs, args.max_instances)
    for c in report.candidates:
        _out(c)
    if args.report:
        _write_sidecar(args.report, report.to_text())
    if args.sidecar:
        _write_sidecar(args.sidecar, report.to_json())
    print(f"{target.tag} a={target.a}: {report.statement}", file=sys.stderr)
    return EXIT_OK


def _lambda(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bbd", description="Balanced bipartite digraph toolkit.", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(p):
        p.add_argument("file", help="digraph file, or - for stdin")
        return p

    p = sub.add_parser("gen", help="emit a generated digraph", allow_abbrev=False)
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="arc probability (random, biased)")
    p.add_argument("--floor", type=int, help="degree floor (biased)")
    p.add_argument("--index", type=int, help="enumeration index (index)")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("text", "compact"), default="text")
    p.set_defaults(func=cmd_gen)

    p = with_file(sub.add_parser("check", help="evaluate a degree condition", allow_abbrev=False))
    p.add_argument("--condition", choices=CONDITION_NAMES, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_check)

    p = with_file(sub.add_parser("hamilton", help="find a Hamilton cycle", allow_abbrev=False))
    p.set_defaults(func=cmd_hamilton)

    p = with_file(sub.add_parser("bipancyclic", help="cycles of every even length", allow_abbrev=False))
    p.set_defaults(func=cmd_bipancyclic)

    p = with_file(sub.add_parser("factor", help="cycle factor", allow_abbrev=False))
    p.add_argument("--minimal", action="store_true", help="minimise the number of cycles")
    p.add_argument("--budget", type=int, default=2_000_000, help="node budget for --minimal")
    p.set_defaults(func=cmd_factor)

    p = with_file(sub.add_parser("contract", help="contraction digraph along a Hamilton cycle",
                                 allow_abbrev=False))
    p.add_argument("--cycle", required=True, help="e.g. 'cycle: y0 x0 y1 x1'")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("verify", help="verify a theorem over many digraphs", allow_abbrev=False)
    p.add_argument("--theorem", choices=[t.value for t in TheoremId], required=True)
    p.add_argument("--a", type=int, required=True, help="order parameter (n for thomassen-4.1)")
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-instances", type=int, default=generate.DEFAULT_MAX_INSTANCES)
    p.add_argument("--sidecar", help="also write the report as JSON to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample search for open questions", allow_abbrev=False)
    p.add_argument("--target", choices=TARGETS, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_lambda)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-instances", type=int, default=generate.DEFAULT_MAX_INSTANCES)
    p.add_argument("--report", help="write the full text report to this path")
    p.add_argument("--sidecar", help="write the report as JSON to this path")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be >= 1")
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run(argv=None) -> int:
    """Like :func:`main` but returns the exit code for argparse errors too."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
