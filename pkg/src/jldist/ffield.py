"""Finite fields with discrete-log-native elements.

A nonzero element of F_Q is stored as its exponent k with respect to a
fixed generator g, so ``mul`` is addition of exponents and ``add`` goes
through a Zech table ``z`` with ``g**z[k] == 1 + g**k``.  The zero element
is the sentinel ``ZERO = -1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np
from sympy import factorint, isprime

ZERO = -1
"""Tag for the zero element (every other element is an exponent)."""

FIELD_CAP = 1 << 24


class FieldError(ValueError):
    pass


def _prime_power(Q: int) -> tuple[int, int]:
    f = factorint(Q)
    if len(f) != 1:
        raise FieldError(f"{Q} is not a prime power")
    (p, k), = f.items()
    return int(p), int(k)


def _polmulmod(a: list[int], b: list[int], mod: Sequence[int], p: int) -> list[int]:
    # coefficient lists, constant term first; mod is monic of degree k
    k = len(mod) - 1
    out = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - c * mod[j]) % p
    return out[:k]


def _x_power(e: int, mod: Sequence[int], p: int) -> list[int]:
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = ([0, 1] + [0] * (k - 2)) if k > 1 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _polmulmod(result, base, mod, p)
        base = _polmulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive(mod: Sequence[int], p: int) -> bool:
    """True when the monic polynomial ``mod`` has a root generating F_{p^k}^×."""
    k = len(mod) - 1
    if mod[-1] != 1 or mod[0] % p == 0:
        return False
    # the constant term is (-1)^k times the norm of the root, which must
    # generate F_p^×; and a primitive polynomial of degree > 1 has no root in F_p
    norm = (-1) ** k * mod[0] % p
    if p > 2 and any(pow(norm, (p - 1) // r, p) == 1 for r in factorint(p - 1)):
        return False
    if k > 1 and any(sum(c * x**i for i, c in enumerate(mod)) % p == 0 for x in range(p)):
        return False
    Q1 = p**k - 1
    one = [1] + [0] * (k - 1)
    if _x_power(Q1, mod, p) != one:
        return False
    return all(_x_power(Q1 // r, mod, p) != one for r in factorint(Q1))


def primitive_polynomials(p: int, k: int):
    """Primitive monic polynomials of degree k in lexicographic order.

    Coefficients are listed constant term first and compared in that order.
    """
    for low in itertools.product(range(p), repeat=k):
        mod = (*low, 1)
        if is_primitive(mod, p):
            yield mod


def _matpow_mod(M: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(len(M), dtype=np.int64)
    while e:
        if e & 1:
            out = out @ M % p
        M = M @ M % p
        e >>= 1
    return out


def _antilog_table(mod: Sequence[int], p: int) -> np.ndarray:
    """Integer encodings sum c_i p^i of g^0, g^1, ..., g^(Q-2)."""
    k = len(mod) - 1
    Q1 = p**k - 1
    companion = np.zeros((k, k), dtype=np.int64)
    for i in range(1, k):
        companion[i, i - 1] = 1
    companion[:, k - 1] = [(-c) % p for c in mod[:k]]
    block = min(Q1, 4096)
    vecs = np.zeros((k, block), dtype=np.int64)
    v = np.zeros(k, dtype=np.int64)
    v[0] = 1
    for i in range(block):
        vecs[:, i] = v
        v = companion @ v % p
    step = _matpow_mod(companion, block, p)
    chunks = [vecs]
    done = block
    while done < Q1:
        vecs = step @ vecs % p
        chunks.append(vecs)
        done += block
    allv = np.concatenate(chunks, axis=1)[:, :Q1]
    weights = p ** np.arange(k, dtype=np.int64)
    return weights @ allv


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_{p^k} with a fixed primitive modulus.

    ``antilog[e]`` is the integer encoding of g^e and ``log`` inverts it
    (``log[0] == ZERO``).  Encodings write an element as sum c_i p^i in the
    basis 1, g, ..., g^(k-1).
    """

    p: int
    degree: int
    modulus: tuple[int, ...]
    zech: np.ndarray = field(repr=False)
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def unit_order(self) -> int:
        return self.order - 1

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def _check(self, x: int) -> int:
        if x != ZERO and not 0 <= x < self.unit_order:
            raise FieldError(f"{x} is not an element of F_{self.order}")
        return x

    def element(self, k: int) -> int:
        """The element g^k."""
        return k % self.unit_order

    def from_int(self, v: int) -> int:
        return int(self.log[v])

    def to_int(self, x: int) -> int:
        return 0 if x == ZERO else int(self.antilog[x])

    def add(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if x == ZERO:
            return y
        if y == ZERO:
            return x
        z = int(self.zech[(x - y) % self.unit_order])
        return ZERO if z == ZERO else (y + z) % self.unit_order

    def neg(self, x: int) -> int:
        if self._check(x) == ZERO or self.p == 2:
            return x
        return (x + self.unit_order // 2) % self.unit_order

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x), self._check(y)
        if x == ZERO or y == ZERO:
            return ZERO
        return (x + y) % self.unit_order

    def inv(self, x: int) -> int:
        if self._check(x) == ZERO:
            raise ZeroDivisionError("inverse of zero")
        return (-x) % self.unit_order

    def pow(self, x: int, e: int) -> int:
        if self._check(x) == ZERO:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e == 0 else ZERO
        return x * e % self.unit_order

    def frobenius(self, x: int, power: int = 1) -> int:
        """x -> x^(p^power)."""
        return self.pow(x, self.p**power)

    def prime_element(self, c: int) -> int:
        """The image of the integer c in the prime field."""
        return self.from_int(c % self.p)

    def evaluate(self, coeffs: Sequence[int], x: int) -> int:
        """Evaluate a polynomial with field-element coefficients at x (Horner)."""
        acc = ZERO
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def elements(self):
        yield ZERO
        yield from range(self.unit_order)


def build_field(p: int, k: int = 1, cap: int = FIELD_CAP, rank: int = 0) -> FieldSpec:
    """Build F_{p^k} on the lexicographically least primitive polynomial.

    ``rank`` selects a later primitive polynomial in the same order; rank 1
    is the alternate generator used for generator-independence checks.
    """
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("degree must be positive")
    Q = p**k
    if Q > cap:
        raise FieldError(f"field order {Q} exceeds the table cap {cap}")
    mod = next(itertools.islice(primitive_polynomials(p, k), rank, None), None)
    if mod is None:
        raise FieldError(f"no primitive polynomial of rank {rank} for F_{Q}")
    antilog = _antilog_table(mod, p) if k > 1 else _prime_antilog(mod, p)
    log = np.full(Q, ZERO, dtype=np.int64)
    log[antilog] = np.arange(Q - 1)
    c0 = antilog % p
    one_plus = antilog - c0 + (c0 + 1) % p
    zech = log[one_plus]
    return FieldSpec(p, k, tuple(mod), zech, antilog, log)


def _prime_antilog(mod: Sequence[int], p: int) -> np.ndarray:
    g = (-mod[0]) % p
    out = np.empty(p - 1, dtype=np.int64)
    v = 1
    for i in range(p - 1):
        out[i] = v
        v = v * g % p
    return out


def alternate_generator(F: FieldSpec) -> int:
    """Exponent u with g^u a root of the next primitive polynomial.

    When the field has a single primitive polynomial the generator itself
    is returned (u = 1).
    """
    try:
        alt = build_field(F.p, F.degree, rank=1).modulus
    except FieldError:
        return 1
    coeffs = [F.prime_element(c) for c in alt]
    for u in range(1, F.unit_order):
        if gcd(u, F.unit_order) == 1 and F.evaluate(coeffs, u) == ZERO:
            return u
    raise FieldError("alternate modulus has no root")  # unreachable for a valid field


def subfield_embedding(Q: int, Q0: int) -> int:
    """Exponent multiplier sending the generator of F_Q0^× into F_Q^×."""
    p, k = _prime_power(Q)
    p0, k0 = _prime_power(Q0)
    if p != p0 or k % k0:
        raise FieldError(f"F_{Q} does not contain F_{Q0}")
    return (Q - 1) // (Q0 - 1)


def compatible_embedding(big: FieldSpec, small: FieldSpec) -> int:
    """Exponent multiplier c·u of a field homomorphism small -> big.

    Multiplicative subgroup embeddings are only defined up to a unit; this
    picks the least u for which g_big^(c·u) is a root of the small modulus,
    so sums are respected as well as products.
    """
    c = subfield_embedding(big.order, small.order)
    coeffs = [big.prime_element(x) for x in small.modulus]
    for u in range(1, small.unit_order + 1):
        if gcd(u, small.unit_order) == 1 and big.evaluate(coeffs, c * u % big.unit_order) == ZERO:
            return c * u % big.unit_order
    raise FieldError("no root of the subfield modulus")  # unreachable


def embed(big: FieldSpec, small: FieldSpec, x: int, multiplier: int | None = None) -> int:
    if x == ZERO:
        return ZERO
    if multiplier is None:
        multiplier = compatible_embedding(big, small)
    return x * multiplier % big.unit_order


def _det(F: FieldSpec, M: list[list[int]]) -> int:
    # Gaussian elimination over F
    A = [row[:] for row in M]
    n = len(A)
    det = 0  # exponent of 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != ZERO), None)
        if piv is None:
            return ZERO
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = F.neg(det)
        det = F.mul(det, A[c][c])
        ic = F.inv(A[c][c])
        for r in range(c + 1, n):
            if A[r][c] != ZERO:
                f = F.mul(A[r][c], ic)
                A[r] = [F.sub(A[r][j], F.mul(f, A[c][j])) for j in range(n)]
    return det


def eigenvalue_in_extension(M: Sequence[Sequence[int]], base: FieldSpec, f: int | None = None,
                            ext: FieldSpec | None = None) -> tuple[FieldSpec, int]:
    """A root of the characteristic polynomial of an elliptic regular M.

    ``M`` has entries in ``base`` = F_q.  Returns the extension F_{q^f} and a
    root in it.  The characteristic polynomial must be irreducible of degree
    f = size of M, which is detected by the root's Frobenius orbit.
    """
    m = len(M)
    if f is None:
        f = m
    if f != m:
        raise FieldError("elliptic regular elements have f equal to the matrix size")
    if ext is None:
        ext = build_field(base.p, base.degree * f)
    mult = compatible_embedding(ext, base)
    N = [[embed(ext, base, x, mult) for x in row] for row in M]
    q = base.order
    for lam in range(ext.unit_order):
        A = [[ext.sub(lam if i == j else ZERO, N[i][j]) for j in range(m)] for i in range(m)]
        if _det(ext, A) == ZERO:
            orbit = {lam * q**j % ext.unit_order for j in range(f)}
            if len(orbit) != f:
                break
            return ext, lam
    raise FieldError("characteristic polynomial is reducible over the base field")
