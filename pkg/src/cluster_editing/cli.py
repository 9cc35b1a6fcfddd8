"""Command-line interface.

Exit codes: 0 = YES (or OK), 1 = NO (or failed check), 2 = input error,
3 = internal invariant failure.
"""

from __future__ import annotations

import argparse
import random
import sys

from .errors import InputError, InvariantError, UsageError
from .generators import gen_named, gen_planted, gen_random
from .io import read_certificate, read_instance, serialize_certificate, serialize_instance
from .oracle import ORACLE_MAX_VERTICES, oracle_decide
from .pipeline import solve, verify_solution

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance(args.file)
    want = args.certificate and not args.decision_only
    verdict = solve(inst, want_certificate=want)
    print(verdict.answer.value)
    if args.trace:
        for step in verdict.trace:
            print(f"c step {type(step).__name__}", file=sys.stderr)
        stats = " ".join(f"{k}={v}" for k, v in sorted(verdict.stats.items()))
        print(f"c stats {stats}", file=sys.stderr)
        if verdict.reason:
            print(f"c reason {verdict.reason}", file=sys.stderr)
    if verdict.certificate is not None:
        sys.stdout.write(serialize_certificate(verdict.certificate))
    return EXIT_YES if verdict.yes else EXIT_NO


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = read_instance(args.file)
    if inst.n > ORACLE_MAX_VERTICES:
        raise InputError(f"oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {inst.n}")
    yes = oracle_decide(inst)
    print("YES" if yes else "NO")
    return EXIT_YES if yes else EXIT_NO


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = read_instance(args.file)
    sol = read_certificate(args.certfile)
    result = verify_solution(inst, sol)
    print(result.message)
    return EXIT_YES if result else EXIT_NO


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "planted":
        inst = gen_planted(args.n, args.seed)
    elif args.kind == "random":
        inst = gen_random(args.n, args.p, args.seed)
    else:
        if not args.name:
            raise UsageError("--name is required for --kind named")
        inst = gen_named(args.name)
    sys.stdout.write(serialize_instance(inst))
    return EXIT_YES


def _cmd_xcheck(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= ORACLE_MAX_VERTICES:
        raise UsageError(f"--n-max must lie in 1..{ORACLE_MAX_VERTICES}")
    rng = random.Random(args.seed)
    agree = disagree = yes = 0
    for _ in range(args.samples):
        n = rng.randint(1, args.n_max)
        inst = gen_random(n, rng.choice((0.1, 0.2, 0.3, 0.4, 0.5)), rng.randrange(2**32))
        verdict = solve(inst, want_certificate=True)
        expected = oracle_decide(inst)
        if verdict.yes == expected:
            agree += 1
        else:
            disagree += 1
            print(f"disagreement on:\n{serialize_instance(inst)}", end="")
        yes += expected
    print(f"samples={args.samples} agree={agree} disagree={disagree} yes={yes}")
    return EXIT_YES if disagree == 0 else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cluster-edit", description="Exact (1,1)-cluster editing.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("--certificate", action="store_true", help="print d/a lines after YES")
    p.add_argument("--trace", action="store_true", help="report reduction steps on stderr")
    p.add_argument("--decision-only", action="store_true", help="skip certificate construction")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="decide by exhaustive search (small instances)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("file")
    p.add_argument("certfile")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    p.add_argument("--kind", choices=("planted", "random", "named"), required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name", help="graph name, optionally with :a=BITS and :d=BITS")
    p.add_argument("--p", type=float, default=0.3, help="edge probability for --kind random")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("xcheck", help="compare the solver against the oracle on random instances")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_xcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
