"""Command line front end.

Exit codes: 0 on success, 1 on parse or contract errors, 2 when the colon
pipeline returns a diagnostic.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .bench import sos_instance
from .f4 import f4
from .f4sat import f4sat
from .fglm import ColonConfig, ColonError, Diagnostic, spfglm_col
from .problem import ParseError, format_polys, format_problem, parse_polynomial, parse_problem
from .ring import DEFAULT_PRIME, DRL, LEX


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _phi(args, problem):
    if args.phi is not None:
        return parse_polynomial(args.phi, problem.ring)
    if problem.phi is not None:
        return problem.phi
    raise ValueError("--phi is required (or a '#phi:' line in the problem file)")


def cmd_gb(args, out) -> int:
    problem = parse_problem(_read(args.file))
    order = LEX if args.order == "lex" else DRL
    G = f4(problem.polys, order)
    out.write(format_polys(G.generators))
    return 0


def cmd_sat(args, out) -> int:
    problem = parse_problem(_read(args.file))
    G = f4sat(problem.polys, _phi(args, problem), DRL)
    out.write(format_polys(G.generators))
    return 0


def cmd_colon_lex(args, out) -> int:
    problem = parse_problem(_read(args.file))
    phi = _phi(args, problem)
    G = f4(problem.polys, DRL)
    if not G.generators:
        raise ColonError("the ideal is <0>: the colon ideal is not zero-dimensional")
    config = ColonConfig(fast_verify=args.fast_verify)
    result = spfglm_col(G.generators, phi, seed=args.seed, config=config)
    if isinstance(result, Diagnostic):
        print(result.value, file=sys.stderr)
        return 2
    out.write(format_polys(result.polynomials()))
    return 0


def cmd_bench_gen(args, out) -> int:
    ring, gens, phi = sos_instance(args.n, args.d, args.p_count, args.seed, args.mode, args.prime)
    out.write(format_problem(ring, gens, phi))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gbsat", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Gröbner basis")
    p.add_argument("file", help="problem file, '-' for stdin")
    p.add_argument("--order", choices=("drl", "lex"), default="drl")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("sat", help="reduced DRL basis of I : phi^inf")
    p.add_argument("file")
    p.add_argument("--phi")
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("colon-lex", help="LEX shape basis of the zero-dimensional I : phi")
    p.add_argument("file")
    p.add_argument("--phi")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fast-verify", action="store_true",
                   help="probabilistic lambda-shift check instead of exact normal forms")
    p.set_defaults(func=cmd_colon_lex)

    p = sub.add_parser("bench-gen", help="write an SOS benchmark instance")
    p.add_argument("--family", choices=("sos",), default="sos")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("pos", "zero"), default="pos")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.set_defaults(func=cmd_bench_gen)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except ParseError as e:
        name = getattr(args, "file", "<input>")
        print(f"{name}: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
