"""Command line interface: enumerate, stats, dual, simplex, verify.

Output is deterministic byte for byte for fixed arguments; the version
banner goes to stderr and can be silenced with --no-banner.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 unsupported operation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .rootsys import InvalidTypeError, RootSystem, build_root_system
from .ideals import (
    Ideal,
    NotAnAntichainError,
    class_of_nilpotence,
    enumerate_ideals,
    gen,
    generators,
    narayana_polynomial,
    sim,
    sim_polynomial,
    up_closure,
)
from .affine import d_point, element_of_ideal, lattice_points_in_simplex, simplex_vertices
from .duality import DualityUnavailableError, dual_ideal, has_duality
from .claims import CLAIMS, run_claims

VERSION = "0.1.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


class UsageError(Exception):
    pass


def _build_system(args) -> RootSystem:
    try:
        return build_root_system(args.type.upper(), args.rank)
    except InvalidTypeError as exc:
        raise UsageError(str(exc)) from exc


def _coord_string(vec) -> str:
    return "".join(str(c) for c in vec)


def _rational_string(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def ideal_record(rs: RootSystem, ideal: Ideal, index: int, with_affine: bool = True) -> dict:
    record = {
        "type": rs.type_label,
        "rank": rs.rank,
        "index": index,
        "size": ideal.size,
        "sim": sim(ideal),
        "gen": gen(ideal),
        "class": class_of_nilpotence(ideal),
        "generators": [list(v) for v in generators(ideal).vectors()],
    }
    if with_affine:
        record["d_point"] = [_rational_string(c) for c in d_point(element_of_ideal(ideal))]
    if has_duality(rs):
        record["dual_generators"] = [
            list(v) for v in generators(dual_ideal(ideal)).vectors()
        ]
    return record


def parse_generators(rs: RootSystem, text: str) -> Ideal:
    """Accepts '(i,j)' pairs (type A), coordinate digit strings, and
    '1+2+2'-style sums of simple roots, comma or semicolon separated."""
    tokens = []
    depth, cur = 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ",;" and depth == 0:
            if cur.strip():
                tokens.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        tokens.append(cur.strip())
    if depth != 0:
        raise UsageError(f"unbalanced parentheses in generators: {text!r}")

    indices = []
    for tok in tokens:
        vec = _parse_generator_token(rs, tok)
        idx = rs.root_index.get(vec)
        if idx is None:
            raise UsageError(f"{tok!r} is not a positive root of {rs.type_label}{rs.rank}")
        indices.append(idx)
    try:
        return up_closure(rs, tuple(indices))
    except NotAnAntichainError as exc:
        raise UsageError(str(exc)) from exc


def _parse_generator_token(rs: RootSystem, tok: str) -> tuple[int, ...]:
    p = rs.rank
    if tok.startswith("("):
        if rs.type_label != "A":
            raise UsageError("(i,j) generator syntax is specific to type A")
        body = tok.strip("()")
        try:
            i, j = (int(x) for x in body.split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse box {tok!r}") from exc
        n = p + 1
        if not 1 <= i < j <= n:
            raise UsageError(f"box {tok!r} out of range for n={n}")
        return tuple(1 if i <= t < j else 0 for t in range(1, n))
    if tok.isdigit() and len(tok) == p:
        return tuple(int(c) for c in tok)
    if all(part.strip().isdigit() for part in tok.split("+")):
        # sum-of-simple-roots shorthand, repetition for multiplicity
        vec = [0] * p
        for part in tok.split("+"):
            i = int(part)
            if not 1 <= i <= p:
                raise UsageError(f"simple root index {i} out of range in {tok!r}")
            vec[i - 1] += 1
        return tuple(vec)
    raise UsageError(f"cannot parse generator {tok!r}")


def cmd_enumerate(args) -> int:
    rs = _build_system(args)
    ideals = enumerate_ideals(rs)
    if args.format == "csv":
        print("type,rank,ideal_index,size,sim,gen,class,generators")
        for index, ideal in enumerate(ideals):
            gens = ";".join(_coord_string(v) for v in generators(ideal).vectors())
            print(
                f"{rs.type_label},{rs.rank},{index},{ideal.size},{sim(ideal)},"
                f"{gen(ideal)},{class_of_nilpotence(ideal)},{gens}"
            )
    else:
        for index, ideal in enumerate(ideals):
            print(json.dumps(ideal_record(rs, ideal, index)))
    return EXIT_OK


def cmd_stats(args) -> int:
    rs = _build_system(args)
    coeffs = sim_polynomial(rs) if args.statistic == "sim" else narayana_polynomial(rs)
    print(" ".join(str(c) for c in coeffs))
    return EXIT_OK


def cmd_dual(args) -> int:
    rs = _build_system(args)
    if not has_duality(rs):
        print(
            f"no duality implemented for type {rs.type_label}", file=sys.stderr
        )
        return EXIT_UNSUPPORTED
    ideal = parse_generators(rs, args.generators)
    try:
        index = enumerate_ideals(rs).index(ideal)
    except ValueError:
        index = -1
    print(json.dumps(ideal_record(rs, ideal, index)))
    return EXIT_OK


def cmd_simplex(args) -> int:
    rs = _build_system(args)
    verts = simplex_vertices(rs)
    points = lattice_points_in_simplex(rs)
    out = {
        "type": rs.type_label,
        "rank": rs.rank,
        "vertices": [[_rational_string(c) for c in v] for v in verts],
        "lattice_points": [[_rational_string(c) for c in v] for v in points],
        "count": len(points),
    }
    print(json.dumps(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    scope = "quick" if args.quick else "full"
    names = args.claim or None
    try:
        results = run_claims(names, scope=scope, jobs=args.jobs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    report = {
        "scope": scope,
        "results": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        print(json.dumps(report))
    return EXIT_OK if report["all_passed"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adnil",
        description="Exact computations with ad-nilpotent ideals of Borel subalgebras.",
    )
    parser.add_argument("--no-banner", action="store_true", help="suppress the version banner")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_system_args(sp):
        sp.add_argument("--type", required=True, choices=list("ABCDEFGabcdefg"),
                        help="simple type label")
        sp.add_argument("--rank", required=True, type=int)

    sp = sub.add_parser("enumerate", help="list every ideal of a system")
    add_system_args(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("stats", help="coefficient vector of a statistic")
    add_system_args(sp)
    sp.add_argument("--statistic", choices=("sim", "gen"), required=True)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("dual", help="dualise an ideal given by its generators")
    add_system_args(sp)
    sp.add_argument("--generators", required=True,
                    help="e.g. \"110,001\" or \"1+2, 3\" or \"(1,5),(2,6)\"")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("simplex", help="vertices and lattice points of the simplex")
    add_system_args(sp)
    sp.set_defaults(func=cmd_simplex)

    sp = sub.add_parser("verify", help="run the named verification claims")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--quick", action="store_true", help="ranks <= 4 only")
    group.add_argument("--full", action="store_true", help="full scope (default)")
    sp.add_argument("--claim", action="append", choices=sorted(CLAIMS),
                    help="run only this claim (repeatable)")
    sp.add_argument("--jobs", type=int, default=1, help="parallel claim workers")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.no_banner:
        print(f"adnil {VERSION}", file=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DualityUnavailableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
