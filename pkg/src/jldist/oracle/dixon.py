"""Exact character tables by Dixon's method.

Work modulo a prime l ≡ 1 (mod e), e the exponent of G, with l > 2·sqrt|G|.
The class-sum matrices commute; their common eigenvectors, normalized at
the identity class, are the central characters omega_chi.  From them come
the degrees and the values mod l, and each value is lifted to Z[zeta_e] by
counting eigenvalue multiplicities on the cyclic group generated by the
class representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt, lcm

import numpy as np
from sympy import isprime, primitive_root

from ..charlat import CycloInt, _cyclo_data
from .groups import ConjugacyClasses, FiniteMatrixGroup, OracleError, conjugacy_classes

CLASS_CAP = 128


@dataclass(eq=False)
class CharacterTable:
    group: FiniteMatrixGroup
    classes: ConjugacyClasses
    conductor: int
    rows: list[tuple[CycloInt, ...]] = field(repr=False)

    @property
    def degrees(self) -> list[int]:
        return [row[self.classes.identity_class].rational_integer() for row in self.rows]

    @cached_property
    def coefficient_array(self) -> np.ndarray:
        """rows x classes x phi(conductor) integer coefficients."""
        return np.array([[v.coeffs for v in row] for row in self.rows], dtype=np.int64)

    def value(self, row: int, mats: np.ndarray) -> CycloInt:
        return self.rows[row][int(self.classes.classes_of(mats))]


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime l ≡ 1 (mod exponent) with l > 2·sqrt(order)."""
    ell = exponent + 1
    while ell * ell <= 4 * order or not isprime(ell):
        ell += exponent
    return ell


def class_coefficients(cc: ConjugacyClasses) -> np.ndarray:
    """c[j, k, l] = #{x in C_j : x^-1 z_l in C_k} for representatives z_l."""
    G = cc.group
    r = len(cc)
    c = np.zeros((r, r, r), dtype=np.int64)
    Xinv = G.elements[G.inverse]
    for l, z in enumerate(cc.reps):
        y = cc.class_of[G.index_of(G.tables.matmul(Xinv, G.elements[z]))]
        np.add.at(c[:, :, l], (cc.class_of, y), 1)
    return c


def _rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def _nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : A v = 0} as columns."""
    R, pivots = _rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = -R[i, f] % p
    return basis


def _normalize_basis(B: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Column basis with an identity block on its pivot rows."""
    R, pivots = _rref(B.T, p)
    k = len(pivots)
    return R[:k].T.copy(), pivots


def _split(M: np.ndarray, spaces: list[np.ndarray], p: int) -> list[np.ndarray]:
    out = []
    for B in spaces:
        k = B.shape[1]
        if k == 1:
            out.append(B)
            continue
        B, piv = _normalize_basis(B, p)
        R = (M @ B % p)[piv]
        found = 0
        for lam in range(p):
            N = _nullspace((R - lam * np.eye(k, dtype=np.int64)) % p, p)
            if N.shape[1]:
                out.append(B @ N % p)
                found += N.shape[1]
                if found == k:
                    break
        if found != k:
            raise OracleError("class matrix is not diagonalizable mod l")
    return out


def common_eigenvectors(c: np.ndarray, p: int, seed: int = 0) -> list[np.ndarray]:
    r = c.shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    rng = np.random.default_rng(seed)
    weights = rng.integers(0, p, size=r)
    combo = np.tensordot(weights, c, axes=1) % p
    spaces = _split(combo, spaces, p)
    for j in range(r):
        if all(B.shape[1] == 1 for B in spaces):
            break
        spaces = _split(c[j] % p, spaces, p)
    if not all(B.shape[1] == 1 for B in spaces):
        raise OracleError("eigenspaces did not split")
    return [B[:, 0] for B in spaces]


def dixon_table(G: FiniteMatrixGroup, cc: ConjugacyClasses | None = None) -> CharacterTable:
    cc = cc or conjugacy_classes(G)
    r = len(cc)
    if r > CLASS_CAP:
        raise OracleError(f"{r} classes exceed the cap {CLASS_CAP}")
    order = G.order
    e = lcm(*(int(o) for o in cc.rep_orders))
    p = dixon_prime(order, e)
    z = pow(int(primitive_root(p)), (p - 1) // e, p)
    coeff = class_coefficients(cc)
    sizes = cc.sizes % p
    one = cc.identity_class
    inv_cls = cc.inverse_class

    values = []
    for v in common_eigenvectors(coeff, p):
        w = v * pow(int(v[one]), p - 2, p) % p
        s = int(np.sum(w * w[inv_cls] % p * np.array([pow(int(x), p - 2, p) for x in sizes]) % p) % p)
        d2 = order * pow(s, p - 2, p) % p
        d = next((d for d in range(1, isqrt(order) + 1) if d * d % p == d2 and order % d == 0), None)
        if d is None:
            raise OracleError("no degree fits")
        chi = w * d % p * np.array([pow(int(x), p - 2, p) for x in sizes]) % p
        values.append(chi)
    X = np.array(values, dtype=np.int64)  # characters x classes, mod p

    # eigenvalue multiplicities on <g_l>
    rows = [[None] * r for _ in range(len(X))]
    for l in range(r):
        o = int(cc.rep_orders[l])
        powers = _powers(cc, l, o)
        zo = pow(z, e // o, p)
        kernel = np.array([[pow(zo, (-k * s) % o, p) for s in range(o)] for k in range(o)], dtype=np.int64)
        mult = X[:, powers] @ kernel.T % p * pow(o, p - 2, p) % p
        if np.any(mult > np.array([row[one] for row in X])[:, None]):
            raise OracleError("multiplicity lift out of range")
        vec = np.zeros((len(X), e), dtype=np.int64)
        vec[:, np.arange(o) * (e // o)] = mult
        reduced = vec @ _cyclo_data(e)[2]
        for i in range(len(X)):
            rows[i][l] = CycloInt(e, tuple(int(x) for x in reduced[i]))
    table = CharacterTable(G, cc, e, [tuple(row) for row in rows])
    check_table(table)
    return table


def _powers(cc: ConjugacyClasses, l: int, o: int) -> np.ndarray:
    G = cc.group
    x = G.elements[cc.reps[l]]
    out = np.empty(o, dtype=np.int64)
    P = np.eye(G.m, dtype=np.int32)
    for s in range(o):
        out[s] = cc.class_of[G.index_of(P)]
        P = G.tables.matmul(P, x)
    return out


def inner_products(table: CharacterTable) -> np.ndarray:
    """Exact Gram matrix sum_C |C| chi_i(C) conj(chi_j(C)) as integer
    exponent vectors reduced mod Phi_e, shape (r, r, phi(e)).

    Products of cyclotomic values are cyclic correlations of exponent
    vectors; they are formed by FFT and rounded, and the rounding is
    verified before the exact reduction.
    """
    e = table.conductor
    vec = np.zeros(table.coefficient_array.shape[:2] + (e,), dtype=np.float64)
    phi = table.coefficient_array.shape[2]
    vec[:, :, :phi] = table.coefficient_array
    F = np.fft.fft(vec, axis=2)
    S = np.einsum("c,ick,jck->ijk", table.classes.sizes.astype(np.float64), F, np.conj(F))
    corr = np.fft.ifft(S, axis=2).real
    rounded = np.rint(corr)
    if np.max(np.abs(corr - rounded)) > 1e-6 or np.max(np.abs(rounded)) > 2**50:
        raise OracleError("orthogonality rounding guard failed")
    return rounded.astype(np.int64) @ _cyclo_data(e)[2]


def check_table(table: CharacterTable) -> None:
    G, order = table.group, table.group.order
    degs = table.degrees
    if any(d is None or d <= 0 for d in degs):
        raise OracleError("first column is not the degrees")
    if sum(d * d for d in degs) != order:
        raise OracleError("degree squares do not sum to |G|")
    gram = inner_products(table)
    expected = np.zeros_like(gram)
    expected[:, :, 0] = order * np.eye(len(degs), dtype=np.int64)
    if not np.array_equal(gram, expected):
        raise OracleError("row orthogonality fails")
