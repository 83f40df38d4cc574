"""Command-line front-end.

Subcommands: search, certify, construct, verify, analyze, ball.  All
artifacts are JSON with sorted keys, so identical inputs give byte-identical
output; wall-clock timing lives in a separate "meta" block that golden-file
comparisons should drop.  Verdicts are data -- a certificate concluding
INCONCLUSIVE is still a successful run.  Exit codes are for pipeline
control only: 0 success, 1 verification failure, 2 usage error, 3 internal
error.
"""

import argparse
import json
import os
import sys

from .analysis import (
    congruence_check,
    cube_multiplicity_check,
    spectrum_identity_checks,
)
from .ball import generate_ball
from .certify import certify_nonexistence
from .construct import check_pds, golay11_tiling, PdsParameters
from .groupring import as_code_set, check_tiling_conditions, star
from .search import DEFAULT_BUDGET, search_tilings
from .tiling import TilingHomomorphism, induced_code_set, verify_tiling


def _emit(payload: dict, out_path) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_homomorphism(path: str) -> TilingHomomorphism:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return TilingHomomorphism.from_dict(data)


def _thread_count() -> int:
    env = os.environ.get("LATILE_THREADS")
    if env:
        count = int(env)
        if count < 1:
            raise ValueError(f"LATILE_THREADS must be >= 1, got {count}")
        return count
    return os.cpu_count() or 1


def _cmd_search(args) -> int:
    result = search_tilings(
        args.n,
        reduce_orbits=not args.no_reduce,
        budget=args.budget,
        threads=_thread_count(),
        progress=lambda line: print(line, file=sys.stderr),
    )
    _emit(result.as_dict(), args.out)
    return 0


def _cmd_certify(args) -> int:
    cert = certify_nonexistence(args.n)
    if cert is None:
        payload = {
            "n": args.n,
            "order": 2 * args.n * args.n + 1,
            "admissible_primes": [],
            "conclusion": "INAPPLICABLE",
        }
    else:
        payload = cert.as_dict()
    _emit(payload, args.out)
    return 0


def _cmd_construct(args) -> int:
    if args.target == "golay11":
        phi = golay11_tiling()
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"unknown construction {args.target!r}")
    _emit(phi.as_dict(), args.out)
    return 0


def _cmd_verify(args) -> int:
    phi = _load_homomorphism(args.map)
    if args.ball:
        parts = [int(x) for x in args.ball.split(",")]
        if len(parts) != 4:
            raise ValueError("--ball expects four comma-separated integers n,t,k+,k-")
        ball = generate_ball(*parts)
    else:
        ball = generate_ball(phi.n, 2, 1, 1)
    report = verify_tiling(phi, ball)
    _emit(report.as_dict(), None)
    return 0 if report.bijective else 1


def _cmd_analyze(args) -> int:
    phi = _load_homomorphism(args.map)
    n = phi.n
    code = induced_code_set(phi)
    payload = {"n": n, "group": phi.spec.as_dict()}
    try:
        code = as_code_set(code)
    except ValueError as exc:
        payload["code_set_error"] = str(exc)
        _emit(payload, args.out)
        return 0
    sections = {
        "tiling_conditions": lambda: check_tiling_conditions(code, n).as_dict(),
        "spectrum": lambda: spectrum_identity_checks(code, n).as_dict(),
        "cube_multiplicity": lambda: cube_multiplicity_check(code).as_dict(),
        "congruences": lambda: congruence_check(code, n).as_dict(),
        "partial_difference_set": lambda: check_pds(
            star(code), PdsParameters(2 * n * n + 1, 2 * n, 1, 2)
        ).as_dict(),
    }
    for name, compute in sections.items():
        try:
            payload[name] = compute()
        except (ValueError, ArithmeticError) as exc:
            payload[name] = {"error": str(exc)}
    _emit(payload, args.out)
    return 0


def _cmd_ball(args) -> int:
    _emit(generate_ball(args.n, args.t, args.kplus, args.kminus).as_dict(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latile",
        description="Lattice tilings of Z^n by the limited-magnitude ball B(n,2,1,1): "
        "construction, verification, exhaustive search, and nonexistence certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="exhaustive tiling search for a dimension")
    p_search.add_argument("-n", type=int, required=True, help="dimension (n >= 3)")
    p_search.add_argument(
        "--no-reduce",
        action="store_true",
        help="disable multiplier-equivalence reduction of reported solutions",
    )
    p_search.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="refuse candidate spaces larger than this (default %(default)s)",
    )
    p_search.add_argument("-o", "--out", help="write JSON here instead of stdout")
    p_search.set_defaults(func=_cmd_search)

    p_certify = sub.add_parser("certify", help="modular nonexistence certificate")
    p_certify.add_argument("-n", type=int, required=True, help="dimension (n >= 3)")
    p_certify.add_argument("-o", "--out", help="write JSON here instead of stdout")
    p_certify.set_defaults(func=_cmd_certify)

    p_construct = sub.add_parser("construct", help="emit a known tiling homomorphism")
    p_construct.add_argument("target", choices=["golay11"], help="which construction")
    p_construct.add_argument("-o", "--out", help="write JSON here instead of stdout")
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="check a homomorphism against a ball")
    p_verify.add_argument("map", help="homomorphism JSON path, or - for stdin")
    p_verify.add_argument(
        "--ball",
        help="ball parameters n,t,k+,k- (default: n from the map, 2,1,1)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_analyze = sub.add_parser("analyze", help="identity suite for a homomorphism")
    p_analyze.add_argument("map", help="homomorphism JSON path, or - for stdin")
    p_analyze.add_argument("-o", "--out", help="write JSON here instead of stdout")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_ball = sub.add_parser("ball", help="enumerate a limited-magnitude error ball")
    p_ball.add_argument("-n", type=int, required=True)
    p_ball.add_argument("-t", type=int, required=True)
    p_ball.add_argument("--kplus", type=int, required=True)
    p_ball.add_argument("--kminus", type=int, required=True)
    p_ball.add_argument("-o", "--out", help="write JSON here instead of stdout")
    p_ball.set_defaults(func=_cmd_ball)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"latile: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
