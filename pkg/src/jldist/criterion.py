"""Deciding GL_m(D)-distinction of a level-zero cuspidal from its tame
parameter, plus the transfer-preservation and census drivers.

The verdict depends on the ramification of K/F and the parity of n:

* unramified, n even: never distinguished;
* ramified, n odd: never distinguished;
* unramified, n odd: the character is trivial on F^× and its inverse equals
  its twist by the Frobenius of k_{K,n}/k_D up to an element of
  Gal(k_{K,n}/k_Delta);
* ramified, n even: the character is trivial on F^× and on the
  half-degree residue subfield, and chi(ϖ_K)·chi(eta) = −1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .charlat import RootOfUnity, eta_value
from .localdata import (NR, TR, CaseTag, LocalSetup, ParameterError, TameParameter,
                        regular_orbits, validate_parameter)

HALF = RootOfUnity(Fraction(1, 2))


@dataclass(frozen=True)
class ParityRule:
    rule: str


@dataclass(frozen=True)
class FailedConditions:
    conditions: tuple[str, ...]


@dataclass(frozen=True)
class NrOddWitness:
    j: int


@dataclass(frozen=True)
class TrEvenWitness:
    trivial_on_F: bool
    trivial_on_l0: bool
    chi_uniformizer: RootOfUnity
    chi_eta: RootOfUnity
    product: RootOfUnity


Certificate = Union[ParityRule, FailedConditions, NrOddWitness, TrEvenWitness]


@dataclass(frozen=True)
class DistinctionVerdict:
    distinguished: bool
    multiplicity: int
    case: CaseTag
    certificate: Certificate

    def __post_init__(self):
        assert self.multiplicity == int(self.distinguished)
        assert self.distinguished == isinstance(self.certificate, (NrOddWitness, TrEvenWitness))


def case_of(setup: LocalSetup) -> CaseTag:
    return CaseTag.of(setup.ram, setup.n)


def trivial_on_F(p: TameParameter) -> bool:
    q = p.setup.q
    on_units = p.a % (q - 1) == 0
    if p.setup.ram is NR:
        return on_units and p.t.is_one()
    return on_units and (p.t**2).is_one()


def trivial_on_l0(p: TameParameter) -> bool:
    s = p.setup
    return p.a % (s.q ** (s.n // 2) - 1) == 0


def case3_witness(p: TameParameter) -> int | None:
    """Least j with chi^{-1} ∘ alpha^j = chi ∘ tau, or None.

    tau is x -> x^(q^d) and alpha is x -> x^(q^(2d)) on F_{q^(2n)}.
    """
    s = p.setup
    if s.ram is not NR or s.n % 2 == 0 or s.d % 2 == 0:
        raise ParameterError("WRONG_CASE", "the Galois witness applies to unramified K with n odd")
    Q1 = s.q ** (2 * s.n) - 1
    target = p.a * s.q**s.d % Q1
    step = s.q ** (2 * s.d) % Q1
    b = -p.a % Q1
    for j in range(s.m):
        if b == target:
            return j
        b = b * step % Q1
    return None


def check_distinction(p: TameParameter) -> DistinctionVerdict:
    validate_parameter(p)
    case = case_of(p.setup)
    if case is CaseTag.NR_EVEN:
        return DistinctionVerdict(False, 0, case, ParityRule("unramified, n even"))
    if case is CaseTag.TR_ODD:
        return DistinctionVerdict(False, 0, case, ParityRule("ramified, n odd"))
    if case is CaseTag.NR_ODD:
        failed = [] if trivial_on_F(p) else ["trivial_on_F"]
        j = case3_witness(p)
        if j is None:
            failed.append("galois_witness")
        if failed:
            return DistinctionVerdict(False, 0, case, FailedConditions(tuple(failed)))
        return DistinctionVerdict(True, 1, case, NrOddWitness(j))
    on_F, on_l0 = trivial_on_F(p), trivial_on_l0(p)
    failed = [name for name, ok in (("trivial_on_F", on_F), ("trivial_on_l0", on_l0)) if not ok]
    if on_l0:
        eta = eta_value(p.residue_char, p.setup.q, p.setup.n)
        product = p.t * eta
        if product != HALF:
            failed.append("eta_sign")
    if failed:
        return DistinctionVerdict(False, 0, case, FailedConditions(tuple(failed)))
    return DistinctionVerdict(True, 1, case, TrEvenWitness(on_F, on_l0, p.t, eta, product))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


DEFAULT_TS = (RootOfUnity(0), HALF)


@dataclass(frozen=True)
class Mismatch:
    orbit: tuple[int, ...]
    t: RootOfUnity
    d: int
    split: bool
    inner: bool


def preservation_check(q: int, n: int, ram, ts: Iterable[RootOfUnity] = DEFAULT_TS) -> list[Mismatch]:
    """Compare each inner form's verdict with the split one, orbit by orbit."""
    base = LocalSetup(q, ram, n, 1)
    ds = divisors(n)[1:]
    out = []
    for orbit in regular_orbits(base.qK, n):
        for t in ts:
            split = check_distinction(TameParameter(base, orbit[0], t)).distinguished
            for d in ds:
                inner = check_distinction(TameParameter(base.with_d(d), orbit[0], t)).distinguished
                if inner != split:
                    out.append(Mismatch(orbit, t, d, split, inner))
    return out


@dataclass
class Census:
    by_case: Counter = field(default_factory=Counter)
    total_orbits: int = 0
    distinguished: list[tuple[LocalSetup, tuple[int, ...], RootOfUnity]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.distinguished)


def census(setups: Iterable[LocalSetup], ts: Iterable[RootOfUnity] = DEFAULT_TS) -> Census:
    """Distinguished (orbit, t) pairs over a family of setups."""
    ts = tuple(ts)
    out = Census()
    for s in setups:
        for orbit in regular_orbits(s.qK, s.n):
            out.total_orbits += 1
            for t in ts:
                v = check_distinction(TameParameter(s, orbit[0], t))
                if v.distinguished:
                    out.by_case[v.case] += 1
                    out.distinguished.append((s, orbit, t))
    return out
