"""Local setups (q, ramification, n, d), their derived invariants, and tame
parameters of level-zero cuspidals.

For a quadratic extension K/F and a central division algebra D of degree d
over F, the inner form GL_m(D) (m = n/d) sits inside GL_mu(Delta) where
Delta = D ⊗ K has index delta = d / gcd(d, 2) and mu = n / delta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import factorint

from .charlat import MultChar, RootOfUnity, galois_orbit


class Ramification(enum.Enum):
    UNRAMIFIED = "nr"
    TOTALLY_RAMIFIED = "tr"

    @classmethod
    def parse(cls, s: str | Ramification) -> Ramification:
        if isinstance(s, cls):
            return s
        s = s.lower()
        for r in cls:
            if s in (r.value, r.name.lower()):
                return r
        raise ParameterError("BAD_RAMIFICATION", f"unknown ramification {s!r}")


NR = Ramification.UNRAMIFIED
TR = Ramification.TOTALLY_RAMIFIED


class CaseTag(enum.Enum):
    NR_EVEN = "nr-even"
    TR_ODD = "tr-odd"
    NR_ODD = "nr-odd"
    TR_EVEN = "tr-even"

    @classmethod
    def of(cls, ram: Ramification, k: int) -> CaseTag:
        """Tag for a ramification and the parity of k."""
        even = k % 2 == 0
        if ram is NR:
            return cls.NR_EVEN if even else cls.NR_ODD
        return cls.TR_EVEN if even else cls.TR_ODD

    @classmethod
    def parse(cls, s: str | CaseTag) -> CaseTag:
        if isinstance(s, cls):
            return s
        key = s.lower().replace("_", "-")
        for c in cls:
            if c.value == key:
                return c
        raise ParameterError("BAD_CASE", f"unknown case {s!r}")


class ParameterError(ValueError):
    """Invalid input, with a machine-readable reason code."""

    def __init__(self, reason: str, detail: str = "", **data):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail
        self.data = data


@dataclass(frozen=True)
class LocalSetup:
    q: int
    ram: Ramification
    n: int
    d: int
    r: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "ram", Ramification.parse(self.ram))
        if len(factorint(self.q)) != 1:
            raise ParameterError("BAD_Q", f"q={self.q} is not a prime power")
        if self.n < 1 or self.d < 1:
            raise ParameterError("BAD_DEGREE", "n and d must be positive")
        if self.n % self.d:
            raise ParameterError("D_NOT_DIVIDING_N", f"d={self.d} does not divide n={self.n}")
        if self.ram is TR and self.q % 2 == 0:
            raise ParameterError("WILD_RAMIFICATION", "a ramified quadratic extension is tame only for odd q")
        if self.r is not None and gcd(self.r, self.d) != 1:
            raise ParameterError("HASSE_NOT_COPRIME", f"gcd(r, d) = gcd({self.r}, {self.d}) != 1")

    @property
    def m(self) -> int:
        return self.n // self.d

    @property
    def delta(self) -> int:
        return self.d // gcd(self.d, 2)

    @property
    def mu(self) -> int:
        return self.n // self.delta

    @property
    def qK(self) -> int:
        return self.q**2 if self.ram is NR else self.q

    def with_d(self, d: int) -> LocalSetup:
        return LocalSetup(self.q, self.ram, self.n, d)


@dataclass(frozen=True)
class Derived:
    m: int
    delta: int
    mu: int
    qK: int
    residue_D: int
    residue_Delta: int
    residue_Kn: int
    uniformizer_F_is_K: bool
    uniformizer_K_squared_is_F: bool


def derive(setup: LocalSetup) -> Derived:
    s = setup
    return Derived(
        m=s.m,
        delta=s.delta,
        mu=s.mu,
        qK=s.qK,
        residue_D=s.q**s.d,
        residue_Delta=s.qK**s.delta,
        residue_Kn=s.qK**s.n,
        uniformizer_F_is_K=s.ram is NR,
        uniformizer_K_squared_is_F=s.ram is TR,
    )


def hasse_base_change(r: int, d: int) -> Fraction:
    """Hasse invariant after the quadratic base change: 2r/d modulo 1."""
    if gcd(r, d) != 1:
        raise ParameterError("HASSE_NOT_COPRIME", f"gcd({r}, {d}) != 1")
    return Fraction(2 * r, d) % 1


@dataclass(frozen=True)
class TameParameter:
    """Residue character exponent a (mod q_K^n − 1) and the value t of the
    character at the uniformizer of K."""

    setup: LocalSetup
    a: int
    t: RootOfUnity = RootOfUnity(0)

    def __post_init__(self):
        if not isinstance(self.t, RootOfUnity):
            object.__setattr__(self, "t", RootOfUnity(self.t))
        object.__setattr__(self, "a", self.a % (self.Q - 1))

    @property
    def Q(self) -> int:
        return self.setup.qK**self.setup.n

    @property
    def residue_char(self) -> MultChar:
        return MultChar(self.Q, self.a)

    def orbit(self) -> frozenset[int]:
        return galois_orbit(self.residue_char, self.setup.qK)


def validate_parameter(p: TameParameter) -> None:
    orbit = p.orbit()
    if len(orbit) != p.setup.n:
        raise ParameterError(
            "NOT_REGULAR",
            f"orbit of a={p.a} under x{p.setup.qK} has length {len(orbit)} < {p.setup.n}",
            orbit=sorted(orbit),
        )


def jl_transfer(p: TameParameter, d_new: int) -> TameParameter:
    """The parameter of the transfer to the inner form with d = d_new."""
    if p.setup.d != 1:
        raise ParameterError("NOT_SPLIT", "the transfer starts from d = 1")
    validate_parameter(p)
    if p.setup.n % d_new:
        raise ParameterError("D_NOT_DIVIDING_N", f"d={d_new} does not divide n={p.setup.n}")
    return TameParameter(p.setup.with_d(d_new), p.a, p.t)


def regular_orbits(qK: int, n: int) -> list[tuple[int, ...]]:
    """All orbits of length n of x -> qK·x on Z/(qK^n − 1), as sorted tuples,
    in order of their least element."""
    Q1 = qK**n - 1
    seen = bytearray(Q1)
    out = []
    for a in range(Q1):
        if seen[a]:
            continue
        orbit, b = [], a
        while not seen[b]:
            seen[b] = 1
            orbit.append(b)
            b = b * qK % Q1
        if len(orbit) == n:
            out.append(tuple(sorted(orbit)))
    return out
