"""Command-line front end.

Subcommands:
    poly     enumerative polynomials (Eulerian, derangement, binomial, h, ...)
    series   named symmetric-function generating series
    verify   run a cross-verification suite
    complex  dump facet lists of the built-in triangulations

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
identity failure (a DomainError raised while assembling a series).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import colored_perms as cp
from . import simplicial as sx
from . import symfunc as sf
from . import verify as vf
from .polyring import DomainError, IntPolynomial, gamma_expansion, is_palindromic

DEFAULT_BUDGET = 10**8

POLY_KINDS = (
    "eulerian",
    "derangement",
    "binomial",
    "binomial-plus",
    "binomial-minus",
    "h",
    "local-h",
    "gamma",
)

COMPLEXES = ("simplex", "barycentric", "gamma", "delta-gamma")


class UsageError(Exception):
    pass


def _check_budget(n: int, r: int, budget: int) -> None:
    if r**n * math.factorial(n) > budget:
        raise UsageError(
            f"enumeration of {r}^{n} * {n}! elements exceeds budget {budget}; "
            "raise --budget if you really want this"
        )


def _poly_json(p: IntPolynomial, n: int | None = None, with_gamma: bool = False) -> dict:
    out = {"coeffs": [str(c) for c in p.coeffs]}
    if with_gamma and n is not None:
        if is_palindromic(p, n):
            out["gamma"] = gamma_expansion(p, n).to_json()
        else:
            out["gamma"] = None
            out["gamma_note"] = f"not palindromic with center {n}/2"
    return out


def _poly_csv(name: str, n: int, r: int, p: IntPolynomial) -> str:
    return f"{name},{n},{r},{';'.join(str(c) for c in p.coeffs)}"


def _build_complex(which: str, n: int, r: int):
    if which == "simplex":
        return sx.simplex(n).complex
    if which == "barycentric":
        return sx.barycentric_subdivision(n).complex
    if which == "gamma":
        return sx.gamma_complex(n, r).complex
    if which == "delta-gamma":
        return sx.delta_of(sx.gamma_complex(n, r))
    raise UsageError(f"unknown complex {which!r}")


def cmd_poly(args) -> int:
    n, r = args.n, args.r
    if n is None:
        raise UsageError("poly requires -n")
    _check_budget(n, r, args.budget)
    kind = args.kind
    center = n
    if kind == "eulerian":
        p = cp.eulerian_poly(n, r, "des")
    elif kind == "derangement":
        p = cp.derangement_poly(n, r)
    elif kind == "binomial":
        p = cp.binomial_eulerian(n, r)
    elif kind == "binomial-plus":
        p = cp.binomial_eulerian_pm(n, r)[0]
    elif kind == "binomial-minus":
        p = cp.binomial_eulerian_pm(n, r)[1]
        center = n + 1
    elif kind in ("h", "local-h"):
        which = args.complex or "gamma"
        tri = (
            sx.gamma_complex(n, r)
            if which == "gamma"
            else sx.barycentric_subdivision(n)
            if which == "barycentric"
            else sx.simplex(n)
            if which == "simplex"
            else None
        )
        if kind == "h":
            sc = _build_complex(which, n, r)
            p = sx.h_polynomial(sc)
        else:
            if tri is None:
                raise UsageError("local-h needs a triangulation of a simplex")
            p = sx.local_h(tri)
    elif kind == "gamma":
        # gamma vectors of the palindromic split of the binomial polynomial
        plus, minus = cp.binomial_eulerian_pm(n, r)
        payload = {
            "plus": gamma_expansion(plus, n).to_json(),
            "minus": gamma_expansion(minus, n + 1).to_json(),
        }
        if args.format == "csv":
            print(f"gamma-plus,{n},{r},{';'.join(str(g) for g in gamma_expansion(plus, n).gammas)}")
            print(f"gamma-minus,{n},{r},{';'.join(str(g) for g in gamma_expansion(minus, n + 1).gammas)}")
        else:
            print(json.dumps(payload, sort_keys=True))
        return 0
    else:
        raise UsageError(f"unknown kind {kind!r}")
    if args.format == "csv":
        print(_poly_csv(kind, n, r, p))
    else:
        print(json.dumps(_poly_json(p, center, args.gamma), sort_keys=True))
    return 0


def _tpoly_payload(tp: sf.TPoly, basis: str) -> dict:
    if basis == "p":
        return tp.to_json()
    out = []
    for f in tp.coeffs:
        out.append(
            {
                ",".join(map(str, lam)): str(c)
                for lam, c in sorted(sf.schur_coefficients(f).items())
            }
        )
    return {"degree": tp.degree, "t": [{"s": d} for d in out]}


def cmd_series(args) -> int:
    name = args.name
    if name not in sf.SERIES_NAMES:
        raise UsageError(f"unknown series {name!r}; choose from {', '.join(sf.SERIES_NAMES)}")
    try:
        s = sf.named_series(name, args.r, args.N)
    except DomainError as exc:
        print(f"internal identity failure: {exc}", file=sys.stderr)
        return 3
    payload: dict = {"name": name, "r": args.r, "N": args.N}
    if args.exstar:
        payload["exstar"] = [
            [str(c) for c in tp.dimension_poly().coeffs] for tp in s.terms
        ]
    else:
        payload["z"] = [_tpoly_payload(tp, args.basis) for tp in s.terms]
    if args.format == "csv":
        if args.exstar:
            for m, row in enumerate(payload["exstar"]):
                print(f"{name},{m},{';'.join(row)}")
        else:
            raise UsageError("csv output for series requires --exstar")
    else:
        print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    if args.suite not in vf.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = vf.run_suite(args.suite, max_n=args.max_n, max_r=args.max_r, N=args.N)
    all_ok = all(rep.passed for rep in reports)
    if args.format == "csv":
        for rep in reports:
            for c in sorted(rep.checks, key=lambda c: (c.check_id, sorted(c.params.items()))):
                prm = ";".join(f"{k}={v}" for k, v in sorted(c.params.items()))
                print(f"{rep.suite},{c.check_id},{prm},{'pass' if c.passed else 'fail'}")
    else:
        print(json.dumps([rep.to_json() for rep in reports], sort_keys=True))
    if not all_ok:
        for rep in reports:
            for c in rep.checks:
                if not c.passed:
                    print(
                        f"FAIL {rep.suite}/{c.check_id} {c.params}: {c.witness}",
                        file=sys.stderr,
                    )
        return 1
    return 0


def cmd_complex(args) -> int:
    if args.n is None:
        raise UsageError("complex requires -n")
    _check_budget(args.n, args.r, args.budget)
    sc = _build_complex(args.which, args.n, args.r)
    if args.format == "csv":
        print(sc.to_text())
    else:
        print(json.dumps(sc.to_json(), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wreathpoly",
        description="Exact enumerative and equivariant invariants of colored "
        "permutation groups and their triangulations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-n", type=int, default=None)
        p.add_argument("-r", type=int, default=1)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    pp = sub.add_parser("poly", help="enumerative polynomials")
    pp.add_argument("kind", choices=POLY_KINDS)
    common(pp)
    pp.add_argument("--gamma", action="store_true", help="include the gamma vector")
    pp.add_argument("--complex", choices=COMPLEXES, default=None)
    pp.set_defaults(fn=cmd_poly)

    ps = sub.add_parser("series", help="symmetric function generating series")
    ps.add_argument("name")
    ps.add_argument("-r", type=int, default=1)
    ps.add_argument("-N", type=int, default=6)
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--basis", choices=("p", "s"), default="p")
    ps.add_argument("--exstar", action="store_true", help="print dimension shadows")
    ps.set_defaults(fn=cmd_series)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=vf.SUITES)
    pv.add_argument("--max-n", type=int, default=4)
    pv.add_argument("--max-r", type=int, default=3)
    pv.add_argument("-N", type=int, default=5)
    pv.add_argument("--format", choices=("json", "csv"), default="json")
    pv.set_defaults(fn=cmd_verify)

    pc = sub.add_parser("complex", help="dump facet lists")
    pc.add_argument("which", choices=COMPLEXES)
    common(pc)
    pc.set_defaults(fn=cmd_complex)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"internal identity failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
