"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit status is 0 on
success, 1 when an oracle comparison fails, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import fields, is_dataclass
from fractions import Fraction

from . import __version__
from .buildings import image_vertices
from .charlat import CycloInt, RootOfUnity
from .criterion import (DistinctionVerdict, FailedConditions, NrOddWitness, ParityRule,
                        TrEvenWitness, census, check_distinction, divisors, preservation_check)
from .localdata import CaseTag, LocalSetup, ParameterError, Ramification, TameParameter

SCHEMA = 1


def encode(obj):
    """Exact JSON form: rationals as "num/den", cyclotomics as a dict."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, RootOfUnity):
        return encode(obj.t)
    if isinstance(obj, CycloInt):
        return {"conductor": obj.conductor, "coeffs": list(obj.coeffs)}
    if isinstance(obj, (CaseTag, Ramification)):
        return obj.name
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [encode(v) for v in items]
    if is_dataclass(obj):
        return {f.name: encode(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def certificate_json(cert) -> dict:
    if isinstance(cert, ParityRule):
        return {"kind": "PARITY", "rule": cert.rule}
    if isinstance(cert, FailedConditions):
        return {"kind": "FAILED_CONDITIONS", "conditions": list(cert.conditions)}
    if isinstance(cert, NrOddWitness):
        return {"kind": "WITNESS_NR_ODD", "j": cert.j}
    if isinstance(cert, TrEvenWitness):
        return {"kind": "WITNESS_TR_EVEN", **encode(cert)}
    raise TypeError(type(cert).__name__)


def verdict_json(v: DistinctionVerdict) -> dict:
    return {"distinguished": v.distinguished, "multiplicity": v.multiplicity,
            "case": v.case.name, "certificate": certificate_json(v.certificate)}


def parse_t(s: str) -> RootOfUnity:
    try:
        return RootOfUnity(Fraction(s))
    except (ValueError, ZeroDivisionError):
        raise ParameterError("BAD_T", f"t={s!r} is not a rational number")


class Mismatch(Exception):
    pass


# ---------------------------------------------------------------- commands


def run_check(args) -> dict:
    p = TameParameter(LocalSetup(args.q, args.ram, args.n, args.d, args.r), args.a, parse_t(args.t))
    return {"parameter": {"a": p.a, "t": encode(p.t), "orbit": sorted(p.orbit())},
            **verdict_json(check_distinction(p))}


def run_census(args) -> dict:
    base = LocalSetup(args.q, args.ram, args.n, 1)
    ds = [args.d] if args.d else divisors(args.n)
    per_d = []
    for d in ds:
        c = census([base.with_d(d)])
        per_d.append({
            "d": d,
            "orbits": c.total_orbits,
            "distinguished_count": c.count,
            "by_case": {k.name: v for k, v in sorted(c.by_case.items(), key=lambda kv: kv[0].name)},
            "distinguished": [{"orbit": list(o), "t": encode(t)} for _, o, t in c.distinguished],
        })
    return {"census": per_d}


def run_buildings(args) -> dict:
    pts = image_vertices(args.case, args.m)
    return {"case": CaseTag.parse(args.case).name, "m": args.m, "count": len(pts),
            "vertices": [encode(p.coords) for p in pts]}


def run_preservation(args) -> dict:
    mism = preservation_check(args.q, args.n, args.ram)
    return {"mismatches": [encode(m) for m in mism]}


def run_green_verify(args) -> dict:
    from .green import green_match, green_value
    from .oracle import gl_table
    table, hit = gl_table(args.f, args.q)
    match = green_match(table)
    rows = []
    for row, label in sorted(match.rows.items(), key=lambda kv: kv[1].orbit):
        rows.append({"row": row, "orbit": list(label.orbit),
                     "values": {str(c): encode(green_value(label, k)) for c, k in match.elliptic.items()}})
    return {"group": f"GL_{args.f}(F_{args.q})", "cuspidals": rows, "elliptic_classes": len(match.elliptic),
            "cache_hits": int(hit)}


def run_oracle(args) -> dict:
    from .oracle.suites import SUITES
    result = SUITES[args.suite]()
    if not all(c["passed"] for c in result["checks"]):
        raise Mismatch(result)
    return result


COMMANDS = {
    "check": run_check,
    "census": run_census,
    "buildings": run_buildings,
    "oracle": run_oracle,
    "preservation": run_preservation,
    "green-verify": run_green_verify,
}


def build_parser() -> argparse.ArgumentParser:
    from .oracle.suites import SUITES
    parser = argparse.ArgumentParser(prog="jldist", description=__doc__.splitlines()[0])
    parser.add_argument("--no-timing", action="store_true", help="omit the timing field")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def local(p, with_d=True, need_d=True):
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--ram", choices=["nr", "tr"], required=True)
        p.add_argument("--n", type=int, required=True)
        if with_d:
            p.add_argument("--d", type=int, required=need_d, default=None)

    p = sub.add_parser("check", help="decide distinction for one parameter")
    local(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--t", default="0", help="chi(uniformizer) as a rational t, value exp(2πi t)")
    p.add_argument("--r", type=int, default=None, help="Hasse numerator of D")

    p = sub.add_parser("census", help="count distinguished orbits")
    local(p, need_d=False)

    p = sub.add_parser("buildings", help="vertices in the image of the standard chamber")
    p.add_argument("--case", choices=[c.value for c in CaseTag], required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("oracle", help="run a finite-group verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)

    p = sub.add_parser("preservation", help="compare verdicts across inner forms")
    local(p, with_d=False)

    p = sub.add_parser("green-verify", help="match cuspidal rows with Green's formula")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--f", type=int, default=2)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = {"schema": SCHEMA, "version": __version__, "command": args.command,
              "inputs": {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "no_timing")}}
    start = time.perf_counter()
    status = 0
    try:
        report["result"] = COMMANDS[args.command](args)
    except ParameterError as exc:
        report["error"] = {"reason": exc.reason, "detail": exc.detail, **encode(exc.data)}
        print(f"jldist: invalid input: {exc}", file=sys.stderr)
        status = 2
    except Mismatch as exc:
        report["result"] = exc.args[0]
        print("jldist: oracle mismatch", file=sys.stderr)
        status = 1
    if not args.no_timing:
        report["timing"] = round(time.perf_counter() - start, 6)
    print(json.dumps(report, sort_keys=True))
    return status


if __name__ == "__main__":
    sys.exit(main())
