"""Command line front end.

Subcommands: profile, mpc, rm, amds, classify, verify-all.
Exit codes: 0 success, 1 verification failure, 2 bad input or parse
failure, 3 enumeration cap exceeded.  The cap defaults to 2^24
codewords and can be overridden per command with --cap or globally with
the BSYM_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify as classify_mod
from . import fileio
from .codes import (EnumerationCapError, exhaustive_b_profile, distance_flag,
                    min_b_distance, profile)
from .field import FieldError
from .matrix_product import bound_report
from .reed_muller import (rm_by_evaluation, rm_db, rm_dimension,
                          rm_successive_witness)
from .uv_construction import build_amds
from .verify import run_all


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_b_range(token: str, n: int) -> tuple[int, int]:
    try:
        lo_str, hi_str = token.split("..", 1)
        lo, hi = int(lo_str), int(hi_str)
    except ValueError as exc:
        raise fileio.ParseError(f"bad b range {token!r}; expected LO..HI") from exc
    if not 1 <= lo <= hi <= n:
        raise fileio.ParseError(f"b range {token!r} outside 1..{n}")
    return lo, hi


def cmd_profile(args) -> int:
    code = fileio.load_code(args.code_file)
    if code.k == 0:
        raise fileio.ParseError("code has dimension 0, nothing to profile")
    if args.json:
        _emit_json(profile(code, cap=args.cap).to_dict())
        return 0
    lo, hi = (1, code.n) if args.b_range is None else _parse_b_range(args.b_range, code.n)
    d = exhaustive_b_profile(code, b_max=hi, cap=args.cap)
    rows = [(b, d[b - 1], distance_flag(code.n, code.k, b, d[b - 1]))
            for b in range(lo, hi + 1)]
    if args.csv:
        print("b,d,flag")
        for b, dist, flag in rows:
            print(f"{b},{dist},{flag}")
    else:
        print(f"[{code.n},{code.k}]_{fileio.format_order(code.field)} code")
        for b, dist, flag in rows:
            print(f"b={b} d={dist} {flag}")
    return 0


def cmd_mpc(args) -> int:
    spec = fileio.load_mpc_spec(args.spec_file)
    report = bound_report(spec, args.b, cap=args.cap)
    _emit_json(report)
    return 0


def cmd_rm(args) -> int:
    field = fileio.parse_order(args.q)
    q, m, r = field.q, args.m, args.r
    if m < 0 or r < 0:
        raise fileio.ParseError("need m >= 0 and r >= 0")
    n = q ** m
    t, s = divmod(r, q - 1) if q > 1 else (r, 0)
    b_hi = min(args.b_max, n) if args.b_max else n
    exact = None
    if args.verify:
        k = rm_dimension(q, r, m)
        code = rm_by_evaluation(field, r, m)
        exact = exhaustive_b_profile(code, b_max=b_hi, cap=args.cap)
        assert code.k == k
    print("q,m,r,t,s,b,d_b_formula,d_b_exact,match")
    all_match = True
    for b in range(1, b_hi + 1):
        formula = rm_db(field, r, m, b)
        if exact is None:
            print(f"{fileio.format_order(field)},{m},{r},{t},{s},{b},{formula},,")
        else:
            match = "MATCH" if exact[b - 1] == formula else "MISMATCH"
            all_match = all_match and exact[b - 1] == formula
            print(f"{fileio.format_order(field)},{m},{r},{t},{s},{b},{formula},{exact[b - 1]},{match}")
    if args.witness:
        w = rm_successive_witness(field, r, m)
        print("witness," + " ".join(str(int(v)) for v in w))
    return 0 if all_match else 1


def cmd_amds(args) -> int:
    field = fileio.parse_order(args.q)
    _, cert = build_amds(field, args.n, args.b)
    _emit_json(cert.to_dict())
    return 0


def cmd_classify(args) -> int:
    code = fileio.load_code(args.code_file)
    n, k = code.n, code.k
    if k == n - 1:
        cls = classify_mod.classify_codim1(code)
    elif k == n - 2:
        cls = classify_mod.classify_codim2(code)
    else:
        raise fileio.ParseError(f"classification covers [n,n-1] and [n,n-2] codes, got [{n},{k}]")
    print(f"case {cls.case}")
    print("predicted d:", " ".join(str(v) for v in cls.profile.distances))
    try:
        exact = profile(code, cap=args.cap)
    except EnumerationCapError:
        print("exact d: enumeration cap exceeded, prediction not cross-checked")
        return 0
    print("exact d:   ", " ".join(str(v) for v in exact.distances))
    verdict = "MATCH" if exact.distances == cls.profile.distances else "MISMATCH"
    print(verdict)
    return 0 if verdict == "MATCH" else 1


def cmd_verify_all(args) -> int:
    print(f"verify-all seed={args.seed} trials={args.trials}")
    results = run_all(seed=args.seed, trials=args.trials)
    failed = 0
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {res.name} ({res.checks} checks, {res.failures} failures)")
        failed += res.failures
    print(f"{'OK' if failed == 0 else 'FAILED'}: {sum(r.checks for r in results)} checks")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsymbol",
        description="Exact b-symbol distance profiles of linear codes over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="b-symbol distance profile of a code file")
    p.add_argument("code_file")
    p.add_argument("--b-range", dest="b_range", metavar="LO..HI")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("mpc", help="distance bounds of a matrix product spec file")
    p.add_argument("spec_file")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_mpc)

    p = sub.add_parser("rm", help="Reed-Muller closed-form table, optionally verified")
    p.add_argument("--q", required=True, help="field order, e.g. 3 or 2^2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--b-max", dest="b_max", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="cross-check by enumeration")
    p.add_argument("--witness", action="store_true", help="emit the consecutive-support witness")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_rm)

    p = sub.add_parser("amds", help="certified [2n, 2n-2] code with d_b = b+1")
    p.add_argument("--q", required=True, help="odd field order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_amds)

    p = sub.add_parser("classify", help="closed-form profile of an [n,n-1] or [n,n-2] code")
    p.add_argument("code_file")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-all", help="run every randomized invariant suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (fileio.ParseError, FieldError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
