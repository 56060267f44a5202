"""Oracle-versus-engine verification suites used by the command line."""

from __future__ import annotations

from fractions import Fraction

from ..charlat import RootOfUnity
from ..criterion import check_distinction
from ..green import green_match
from ..localdata import LocalSetup, ParameterError, TameParameter
from .abelian import abelian_verdicts
from .cache import gl_table
from .pairs import build_pair, lusztig_xi, multiplicity_trivial, prasad_check, twisted_multiplicity

TS = (RootOfUnity(0), RootOfUnity(Fraction(1, 2)))


def _check(name: str, passed: bool, **values) -> dict:
    return {"name": name, "passed": bool(passed), **values}


def tr_even(qs=(3, 5)) -> dict:
    checks, hits = [], 0
    for q in qs:
        table, hit = gl_table(2, q)
        hits += hit
        match = green_match(table)
        pairs = {1: build_pair("ext-levi-eta", q), 2: build_pair("ext-galois-gamma", q)}
        for row, label in sorted(match.rows.items(), key=lambda kv: kv[1].orbit):
            for d, pair in pairs.items():
                for t in TS:
                    oracle = twisted_multiplicity(table, row, pair.H, pair.coset, t)
                    engine = check_distinction(TameParameter(LocalSetup(q, "tr", 2, d), label.a, t))
                    checks.append(_check(f"q={q} d={d} orbit={list(label.orbit)} t={t.t}",
                                         oracle == engine.multiplicity and oracle in (0, 1),
                                         oracle=oracle, engine=engine.multiplicity))
    return {"suite": "tr-even", "checks": checks, "cache_hits": hits}


def prasad() -> dict:
    checks, hits = [], 0
    table, hit = gl_table(2, 9)
    hits += hit
    for e in prasad_check(table, 3):
        engine = check_distinction(TameParameter(LocalSetup(3, "nr", 2, 1), e.label.a))
        checks.append(_check(f"GL_2(F_9) orbit={list(e.label.orbit)}",
                             e.agrees and e.multiplicity == 0 and engine.multiplicity == 0,
                             multiplicity=e.multiplicity, twisted_contragredient=e.predicted,
                             engine=engine.multiplicity))
    for q in (3, 5):
        table, hit = gl_table(1, q * q)
        hits += hit
        for e in prasad_check(table, q):
            checks.append(_check(f"GL_1(F_{q * q}) a={e.label.a}",
                                 e.agrees and e.multiplicity == int(e.label.a % (q - 1) == 0),
                                 multiplicity=e.multiplicity, twisted_contragredient=e.predicted))
    return {"suite": "prasad", "checks": checks, "cache_hits": hits}


def nr_odd_abelian(q: int = 3, n: int = 3) -> dict:
    setup = LocalSetup(q, "nr", n, n)
    checks = []
    agree = rejected = 0
    for v in abelian_verdicts(q, n):
        try:
            engine = check_distinction(TameParameter(setup, v.a, v.t))
        except ParameterError:
            rejected += 1
            continue
        if engine.distinguished == v.distinguished:
            agree += 1
        else:
            checks.append(_check(f"a={v.a} t={v.t.t}", False, oracle=v.distinguished,
                                 engine=engine.distinguished))
    checks.append(_check("all regular exponents agree", not checks, agreeing=agree,
                         non_regular_rejected=rejected))
    return {"suite": "nr-odd-abelian", "checks": checks, "cache_hits": 0}


def green(qs=(3, 5)) -> dict:
    checks, hits = [], 0
    for q in qs:
        table, hit = gl_table(2, q)
        hits += hit
        match = green_match(table)
        checks.append(_check(f"GL_2(F_{q})", len(match.rows) == q * (q - 1) // 2,
                             cuspidals=len(match.rows), elliptic_classes=len(match.elliptic)))
    return {"suite": "green", "checks": checks, "cache_hits": hits}


def lusztig(q: int = 3) -> dict:
    table, hit = gl_table(2, q)
    match = green_match(table)
    checks = []
    for kind in ("nonsplit-torus", "levi-half"):
        pair = build_pair(kind, q)
        for row, label in sorted(match.rows.items(), key=lambda kv: kv[1].orbit):
            xi = [x for x in lusztig_xi(pair, label.a) if x.theta_stable]
            total = sum(x.r for x in xi)
            mult = multiplicity_trivial(table, row, pair.H)
            checks.append(_check(f"{kind} orbit={list(label.orbit)}", total == mult,
                                 xi_classes=len(xi), r_values=[x.r for x in xi], multiplicity=mult))
    return {"suite": "lusztig", "checks": checks, "cache_hits": int(hit)}


SUITES = {
    "tr-even": tr_even,
    "prasad": prasad,
    "nr-odd-abelian": nr_odd_abelian,
    "green": green,
    "lusztig": lusztig,
}
