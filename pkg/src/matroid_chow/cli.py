"""Command-line interface.

Exit status: 0 on success, 1 when a requested check fails, 2 for usage,
parse and precondition errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Sequence

from .chow import mixed_eulerian, mixed_eulerian_poly
from .degree import (composition_to_subset, deg_delta_oracle, g, h_poly, h_poly_direct,
                     phi_degree)
from .documents import load_matroid
from .errors import ConsistencyError, DomainError
from .schubert import Partition, grassmann_series_side, m_coeffs, pullback_degrees_by_windows
from .tutte import h_vector, reliability, tutte, tutte_one_y
from .verify import THEOREMS, sort_reports, verify_corpus, verify_matroid

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str, what: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _rational_pair(text: str) -> List[Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--at expects x,y, got {text!r}")
    try:
        return [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {text!r} as two rationals") from None


def _num(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, payload: dict, text: str):
        if self.as_json:
            self.stream.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


# -- commands ---------------------------------------------------------------------

def cmd_tutte(args, out: Output) -> int:
    M = load_matroid(args.file)
    T = tutte(M)
    if args.at:
        x, y = _rational_pair(args.at)
        value = _num(T(x, y))
        out.emit({"x": _num(x), "y": _num(y), "value": value}, str(value))
    else:
        out.emit({"tutte": T.to_matrix()}, str(T))
    return EXIT_OK


def cmd_hvector(args, out: Output) -> int:
    h = h_vector(load_matroid(args.file))
    out.emit({"h_vector": h}, " ".join(map(str, h)))
    return EXIT_OK


def cmd_reliability(args, out: Output) -> int:
    R = reliability(load_matroid(args.file))
    out.emit({"reliability": R.to_list()}, str(R))
    return EXIT_OK


def cmd_mixed_eulerian(args, out: Output) -> int:
    if args.poly:
        a = _int_list(args.poly, "--poly")
        P = mixed_eulerian_poly(a)
        out.emit({"composition": a, "polynomial": P.to_list()}, str(P))
        return EXIT_OK
    if not args.composition:
        raise UsageError("give a composition c_1,...,c_n or --poly a_1,...,a_k")
    c = _int_list(args.composition, "composition")
    value = mixed_eulerian(c)
    out.emit({"composition": c, "value": value}, str(value))
    return EXIT_OK


def cmd_delta_degree(args, out: Output) -> int:
    M = load_matroid(args.file)
    X = _int_list(args.composition, "--composition")
    value = g(M, X)
    payload = {"composition": X, "subset": sorted(composition_to_subset(X)), "degree": value}
    lines = [str(value)]
    status = EXIT_OK
    if args.oracle:
        oracle = deg_delta_oracle(M, composition_to_subset(X), seed=args.seed)
        payload["oracle"] = oracle
        payload["agree"] = oracle == value
        lines.append(f"oracle {oracle} {'agrees' if oracle == value else 'DISAGREES'}")
        if oracle != value:
            status = EXIT_FAIL
    if args.hpoly:
        H = h_poly(M)
        payload["hpoly"] = H.to_pairs()
        lines.append(f"h = {H}")
    out.emit(payload, "\n".join(lines))
    return status


def cmd_hpoly(args, out: Output) -> int:
    M = load_matroid(args.file)
    H = h_poly(M)
    if H != h_poly_direct(M):
        raise ConsistencyError("h polynomial recursion disagrees with the term-by-term sum")
    out.emit({"nvars": H.nvars, "terms": H.to_pairs()}, str(H))
    return EXIT_OK


def cmd_phi(args, out: Output) -> int:
    M = load_matroid(args.file)
    sweep = [phi_degree(M, k) for k in range(M.corank + 1)]
    T1 = tutte_one_y(M)
    agree = list(T1) == sweep[: len(T1)] and not any(sweep[len(T1):])
    text = "\n".join(f"{k} {d}" for k, d in enumerate(sweep))
    out.emit({"degrees": sweep, "tutte_one_y": T1.to_list(), "agree": agree}, text)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_schubert(args, out: Output) -> int:
    M = load_matroid(args.file)
    lam = Partition(_int_list(args.partition, "--partition"))
    left = pullback_degrees_by_windows(M, lam)
    right = grassmann_series_side(M, lam)
    n = len(M) - 1
    table = [left[p] for p in range(1, n + 1)]
    agree = left == right
    text = [f"p {p} degree {left[p]}" for p in range(1, n + 1)]
    text.append(f"m_k: {m_coeffs(lam)}")
    text.append(f"degree generating function: {left}")
    text.append(f"R_M(y) * sum f(1^i) y^i: {right}")
    text.append("identity holds" if agree else "identity FAILS")
    out.emit({"partition": list(lam), "degrees": table, "left": left.to_list(),
              "right": right.to_list(), "agree": agree}, "\n".join(text))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, out: Output) -> int:
    theorems = args.theorem or None
    if theorems:
        bad = [t for t in theorems if t not in THEOREMS]
        if bad:
            raise UsageError(f"unknown theorem {bad}; choose from {', '.join(THEOREMS)}")
    if args.corpus:
        reports = verify_corpus(theorems)
    elif args.file:
        reports = verify_matroid(load_matroid(args.file), args.file, theorems)
    else:
        raise UsageError("verify needs a matroid file or --corpus")
    reports = sort_reports(reports)
    failed = sum(not r.passed for r in reports)
    payload = {"reports": [r.to_dict() for r in reports],
               "total": len(reports), "failed": failed}
    text = [r.line() for r in reports]
    text.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    out.emit(payload, "\n".join(text))
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")

    parser = argparse.ArgumentParser(
        prog="matroid-chow",
        description="Tutte polynomials, mixed Eulerian numbers and Chow-ring degrees of matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial T_M(x,y)")
    p.add_argument("file")
    p.add_argument("--at", metavar="X,Y", help="evaluate at rationals x,y")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("hvector", parents=[common], help="h-vector from T_M(x,1)")
    p.add_argument("file")
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("reliability", parents=[common], help="reliability polynomial")
    p.add_argument("file")
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("mixed-eulerian", parents=[common], help="mixed Eulerian numbers")
    p.add_argument("composition", nargs="?", help="c_1,...,c_n summing to n")
    p.add_argument("--poly", metavar="A", help="positive a_1,...,a_k; print A_a(y)")
    p.set_defaults(func=cmd_mixed_eulerian)

    p = sub.add_parser("delta-degree", parents=[common], help="degree g(M, X)")
    p.add_argument("file")
    p.add_argument("--composition", required=True, metavar="M",
                   help="m_1,...,m_{crk+1} summing to |E|")
    p.add_argument("--oracle", action="store_true", help="also run the sliding-sets oracle")
    p.add_argument("--seed", type=int, default=0, help="seed for the oracle's generic vector")
    p.add_argument("--hpoly", action="store_true", help="also print h_M")
    p.set_defaults(func=cmd_delta_degree)

    p = sub.add_parser("hpoly", parents=[common], help="the polynomial h_M")
    p.add_argument("file")
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("phi", parents=[common], help="one-window degrees k -> deg Phi_{r,k}")
    p.add_argument("file")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("schubert-degrees", parents=[common],
                       help="Grassmannian pullback degrees and their generating identity")
    p.add_argument("file")
    p.add_argument("--partition", required=True, metavar="L")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify", parents=[common], help="run theorem checks")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true", help="check the built-in corpus")
    p.add_argument("--theorem", action="append", choices=THEOREMS,
                   help="restrict to one theorem id (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(getattr(args, "json", False))
    try:
        return args.func(args, out)
    except (UsageError, DomainError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
