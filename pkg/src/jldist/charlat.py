"""Multiplicative characters of finite fields and exact cyclotomic values.

A character of F_Q^× is an exponent a: it sends g^k to zeta_{Q-1}^(a·k).
Values are kept as exact rationals modulo 1 (``RootOfUnity``) and sums of
them as cyclotomic integers reduced modulo the cyclotomic polynomial
(``CycloInt``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable

import numpy as np
from sympy import cyclotomic_poly, factorint, totient
from sympy.abc import x as _x

from .ffield import ZERO


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2πi·t) with t an exact rational in [0, 1)."""

    t: Fraction

    def __init__(self, t=0):
        object.__setattr__(self, "t", Fraction(t) % 1)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity(self.t + other.t)

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity(self.t * e)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(-self.t)

    @property
    def order(self) -> int:
        return self.t.denominator

    def is_one(self) -> bool:
        return self.t == 0

    def __complex__(self) -> complex:
        return complex(np.exp(2j * np.pi * float(self.t)))

    def __str__(self) -> str:
        return f"e(2πi·{self.t})"


@dataclass(frozen=True)
class MultChar:
    """The character g^k -> zeta_{Q-1}^(a·k) of F_Q^×."""

    Q: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % (self.Q - 1))


def evaluate(chi: MultChar, x: int) -> RootOfUnity:
    if x == ZERO:
        raise ValueError("characters are not defined at zero")
    return RootOfUnity(Fraction(chi.a * x, chi.Q - 1))


def frobenius_twist(chi: MultChar, qp: int) -> MultChar:
    """chi composed with x -> x^qp."""
    return MultChar(chi.Q, chi.a * qp)


def _log_base(Q: int, qp: int) -> int:
    n, v = 0, 1
    while v < Q:
        v *= qp
        n += 1
    if v != Q or qp < 2:
        raise ValueError(f"{Q} is not a power of {qp}")
    return n


def galois_orbit(chi: MultChar, qp: int) -> frozenset[int]:
    """Exponents a·qp^j modulo Q−1."""
    _log_base(chi.Q, qp)
    orbit, a = set(), chi.a
    while a not in orbit:
        orbit.add(a)
        a = a * qp % (chi.Q - 1)
    return frozenset(orbit)


def is_regular(chi: MultChar, qp: int, n: int) -> bool:
    if _log_base(chi.Q, qp) != n:
        raise ValueError(f"{chi.Q} is not {qp}^{n}")
    return len(galois_orbit(chi, qp)) == n


def is_trivial_on_subgroup(chi: MultChar, s: int) -> bool:
    """Triviality on the unique subgroup of order s."""
    if (chi.Q - 1) % s:
        raise ValueError(f"{s} does not divide {chi.Q - 1}")
    return chi.a % s == 0


def eta_value(chi: MultChar, q: int, n: int) -> RootOfUnity:
    """chi(eta) for eta = g^((q^(n/2)+1)/2), an element outside the subfield
    of order q^(n/2) whose square lies in it.

    Only defined when chi is trivial on that subfield, where the value does
    not depend on the choice of eta.
    """
    if n % 2 or q % 2 == 0:
        raise ValueError("eta needs n even and q odd")
    if chi.Q != q**n:
        raise ValueError(f"character lives on F_{chi.Q}, expected F_{q**n}")
    half = q ** (n // 2)
    if chi.a % (half - 1):
        raise ValueError("chi is not trivial on the half-degree subfield; chi(eta) is ill-posed")
    return RootOfUnity(Fraction(chi.a * ((half + 1) // 2), chi.Q - 1))


# ---------------------------------------------------------------- cyclotomic


@lru_cache(maxsize=None)
def _cyclo_data(N: int):
    """Phi_N, its degree, the reduction matrix x^k -> x^k mod Phi_N (k < N),
    and the normalized traces of the basis powers."""
    phi = int(totient(N))
    poly = [int(c) for c in reversed(cyclotomic_poly(N, _x, polys=True).all_coeffs())]
    red = np.zeros((N, phi), dtype=np.int64)
    v = np.zeros(phi, dtype=np.int64)
    v[0] = 1
    for k in range(N):
        red[k] = v
        top = v[-1]
        v = np.concatenate(([0], v[:-1]))
        if top:
            v = v - top * np.array(poly[:phi], dtype=np.int64)
    traces = tuple(Fraction(_ramanujan(k, N), phi) for k in range(phi))
    return phi, tuple(poly), red, traces


def _mobius(n: int) -> int:
    f = factorint(n)
    return 0 if any(e > 1 for e in f.values()) else (-1) ** len(f)


def _ramanujan(k: int, N: int) -> int:
    # trace of zeta_N^k over Q
    g = gcd(k, N)
    o = N // g
    return _mobius(o) * int(totient(N)) // int(totient(o))


def reduce_exponents(N: int, vec) -> np.ndarray:
    """Reduce sum vec[k]·zeta_N^k (k < N) to the canonical basis."""
    return np.asarray(vec, dtype=np.int64) @ _cyclo_data(N)[2]


@dataclass(frozen=True, eq=False)
class CycloInt:
    """sum coeffs[i]·zeta_N^i with i < phi(N), reduced modulo Phi_N."""

    conductor: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_vector(cls, N: int, vec) -> CycloInt:
        """From an unreduced vector indexed by exponents modulo N."""
        vec = np.asarray(vec, dtype=np.int64)
        if len(vec) > N:
            folded = np.zeros(N, dtype=np.int64)
            np.add.at(folded, np.arange(len(vec)) % N, vec)
            vec = folded
        elif len(vec) < N:
            vec = np.concatenate((vec, np.zeros(N - len(vec), dtype=np.int64)))
        return cls(N, tuple(int(c) for c in reduce_exponents(N, vec)))

    @classmethod
    def integer(cls, c: int, N: int = 1) -> CycloInt:
        phi = _cyclo_data(N)[0]
        return cls(N, (c,) + (0,) * (phi - 1))

    @classmethod
    def root(cls, k: int, N: int) -> CycloInt:
        vec = np.zeros(N, dtype=np.int64)
        vec[k % N] = 1
        return cls.from_vector(N, vec)

    def vector(self, N: int | None = None) -> np.ndarray:
        """Exponent vector of length N (a multiple of the conductor)."""
        N = N or self.conductor
        if N % self.conductor:
            raise ValueError(f"{N} is not a multiple of {self.conductor}")
        out = np.zeros(N, dtype=np.int64)
        step = N // self.conductor
        out[: len(self.coeffs) * step : step] = self.coeffs
        return out

    def to_conductor(self, N: int) -> CycloInt:
        if N == self.conductor:
            return self
        return CycloInt.from_vector(N, self.vector(N))

    def _common(self, other: CycloInt) -> tuple[CycloInt, CycloInt]:
        N = lcm(self.conductor, other.conductor)
        return self.to_conductor(N), other.to_conductor(N)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycloInt.integer(other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # the normalized trace does not depend on the conductor
        traces = _cyclo_data(self.conductor)[3]
        return hash(sum((c * t for c, t in zip(self.coeffs, traces)), Fraction(0)))

    def __add__(self, other: CycloInt) -> CycloInt:
        a, b = self._common(other)
        return CycloInt(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> CycloInt:
        return CycloInt(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: CycloInt) -> CycloInt:
        return self + (-other)

    def __mul__(self, other) -> CycloInt:
        if isinstance(other, int):
            return CycloInt(self.conductor, tuple(c * other for c in self.coeffs))
        a, b = self._common(other)
        prod = np.convolve(np.array(a.coeffs, dtype=np.int64), np.array(b.coeffs, dtype=np.int64))
        return CycloInt.from_vector(a.conductor, prod)

    __rmul__ = __mul__

    def galois(self, u: int) -> CycloInt:
        """Image under zeta -> zeta^u (u a unit modulo the conductor)."""
        N = self.conductor
        if gcd(u, N) != 1:
            raise ValueError(f"{u} is not a unit modulo {N}")
        vec = np.zeros(N, dtype=np.int64)
        np.add.at(vec, np.arange(len(self.coeffs)) * u % N, self.coeffs)
        return CycloInt.from_vector(N, vec)

    def conjugate(self) -> CycloInt:
        return self.galois(-1)

    def rational_integer(self) -> int | None:
        """The value as an int when it lies in Z, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __complex__(self) -> complex:
        k = np.arange(len(self.coeffs))
        return complex(np.sum(np.array(self.coeffs) * np.exp(2j * np.pi * k / self.conductor)))

    def __repr__(self) -> str:
        return f"CycloInt({self.conductor}, {list(self.coeffs)})"


def cyclo_sum(terms: Iterable[RootOfUnity], conductor: int | None = None) -> CycloInt:
    terms = list(terms)
    N = conductor or lcm(1, *(r.t.denominator for r in terms))
    vec = np.zeros(N, dtype=np.int64)
    for r in terms:
        k = r.t * N
        if k.denominator != 1:
            raise ValueError(f"{r} is not an {N}-th root of unity")
        vec[int(k)] += 1
    return CycloInt.from_vector(N, vec)


def cyclo_equal(x: CycloInt, y: CycloInt) -> bool:
    return x == y
