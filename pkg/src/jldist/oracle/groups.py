"""Small matrix groups over finite fields, enumerated exhaustively.

Matrix entries are stored as integer codes: 0 for zero and k + 1 for g^k.
Field operations are table lookups, so products of whole batches of
matrices are numpy gathers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..ffield import ZERO, FieldSpec, build_field

GROUP_CAP = 1 << 21


class OracleError(RuntimeError):
    pass


class FieldTables:
    """Addition and multiplication tables on codes."""

    def __init__(self, F: FieldSpec):
        self.F = F
        Q = F.order
        codes = np.arange(Q)
        exps = codes - 1
        self.mul = np.zeros((Q, Q), dtype=np.int32)
        a, b = np.meshgrid(exps, exps, indexing="ij")
        nz = (a >= 0) & (b >= 0)
        self.mul[nz] = (a[nz] + b[nz]) % F.unit_order + 1
        self.add = np.zeros((Q, Q), dtype=np.int32)
        ints = np.concatenate(([0], F.antilog))
        # digitwise addition modulo p of the polynomial encodings
        s = np.zeros((Q, Q), dtype=np.int64)
        ia, ib = np.meshgrid(ints, ints, indexing="ij")
        w = 1
        for _ in range(F.degree):
            s += ((ia // w % F.p + ib // w % F.p) % F.p) * w
            w *= F.p
        self.add = (F.log[s] + 1).astype(np.int32)
        self.neg = np.array([0] + [(k + F.unit_order // 2) % F.unit_order + 1 if F.p != 2 else k + 1
                                   for k in range(F.unit_order)], dtype=np.int32)
        self.inv = np.array([0] + [(-k) % F.unit_order + 1 for k in range(F.unit_order)], dtype=np.int32)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Batched product of code matrices (broadcasting over leading axes)."""
        A, B = np.broadcast_arrays(A, B)
        m = A.shape[-1]
        out = np.empty(A.shape, dtype=np.int32)
        for i in range(m):
            for j in range(m):
                acc = self.mul[A[..., i, 0], B[..., 0, j]]
                for k in range(1, m):
                    acc = self.add[acc, self.mul[A[..., i, k], B[..., k, j]]]
                out[..., i, j] = acc
        return out

    def det(self, A: np.ndarray) -> np.ndarray:
        """Leibniz expansion, batched."""
        m = A.shape[-1]
        total = np.zeros(A.shape[:-2], dtype=np.int32)
        for perm in itertools.permutations(range(m)):
            term = np.full(A.shape[:-2], 1, dtype=np.int32)
            for i, j in enumerate(perm):
                term = self.mul[term, A[..., i, j]]
            inversions = sum(perm[i] > perm[j] for i in range(m) for j in range(i + 1, m))
            if inversions % 2:
                term = self.neg[term]
            total = self.add[total, term]
        return total


def to_codes(M) -> np.ndarray:
    """Field-element exponents (ZERO = -1) to codes."""
    return np.asarray(M, dtype=np.int32) + 1


def from_codes(C) -> list[list[int]]:
    return (np.asarray(C, dtype=np.int64) - 1).tolist()


@dataclass(eq=False)
class FiniteMatrixGroup:
    """A finite group of invertible m x m matrices, listed exhaustively and
    sorted by integer key."""

    tables: FieldTables
    m: int
    elements: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self):
        keys = self.encode(self.elements)
        order = np.argsort(keys, kind="stable")
        self.elements = np.ascontiguousarray(self.elements[order])
        self.keys = keys[order]
        if len(np.unique(self.keys)) != len(self.keys):
            raise OracleError("repeated elements")

    @property
    def field(self) -> FieldSpec:
        return self.tables.F

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def encode(self, mats: np.ndarray) -> np.ndarray:
        flat = np.asarray(mats, dtype=np.int64).reshape(*np.shape(mats)[:-2], self.m * self.m)
        weights = self.q ** np.arange(self.m * self.m - 1, -1, -1, dtype=np.int64)
        return flat @ weights

    def index_of(self, mats: np.ndarray, strict: bool = True) -> np.ndarray:
        keys = self.encode(mats)
        idx = np.searchsorted(self.keys, keys)
        idx = np.minimum(idx, len(self.keys) - 1)
        found = self.keys[idx] == keys
        if strict and not np.all(found):
            raise OracleError("matrix not in group")
        return np.where(found, idx, -1)

    def contains(self, mats: np.ndarray) -> np.ndarray:
        return self.index_of(mats, strict=False) >= 0

    @cached_property
    def identity(self) -> int:
        return int(self.index_of(identity_codes(self.m)))

    def mul(self, i, j) -> np.ndarray:
        return self.index_of(self.tables.matmul(self.elements[i], self.elements[j]))

    def mat_product(self, A, B) -> np.ndarray:
        return self.tables.matmul(A, B)

    @cached_property
    def inverse(self) -> np.ndarray:
        """Index of each element's inverse (x^(o-1), found by powering)."""
        X = self.elements
        inv = np.full(len(X), -1, dtype=np.int64)
        prev = np.broadcast_to(identity_codes(self.m), X.shape).copy()
        P = X.copy()
        ident = self.identity
        for _ in range(len(X) + 1):
            idx = self.index_of(P)
            hit = (idx == ident) & (inv < 0)
            inv[hit] = self.index_of(prev[hit])
            if np.all(inv >= 0):
                return inv
            prev, P = P, self.tables.matmul(P, X)
        raise OracleError("inverse search failed")

    @cached_property
    def element_orders(self) -> np.ndarray:
        X = self.elements
        orders = np.zeros(len(X), dtype=np.int64)
        P = X.copy()
        ident = self.identity
        k = 1
        while np.any(orders == 0):
            hit = (self.index_of(P) == ident) & (orders == 0)
            orders[hit] = k
            P = self.tables.matmul(P, X)
            k += 1
        return orders

    def subgroup(self, indices, name: str = "") -> FiniteMatrixGroup:
        return FiniteMatrixGroup(self.tables, self.m, self.elements[np.asarray(indices)], name)


def identity_codes(m: int) -> np.ndarray:
    return (np.eye(m, dtype=np.int32))


def gl_order(m: int, q: int) -> int:
    out = 1
    for i in range(m):
        out *= q**m - q**i
    return out


_TABLES: dict[tuple[int, int], FieldTables] = {}


def field_tables(q: int) -> FieldTables:
    from sympy import factorint
    (p, k), = factorint(q).items()
    key = (int(p), int(k))
    if key not in _TABLES:
        _TABLES[key] = FieldTables(build_field(*key))
    return _TABLES[key]


def enumerate_gl(m: int, q: int, cap: int = GROUP_CAP) -> FiniteMatrixGroup:
    """All of GL_m(F_q), by filtering candidate matrices on the determinant."""
    size = gl_order(m, q)
    if size > cap:
        raise OracleError(f"|GL_{m}(F_{q})| = {size} exceeds the cap {cap}")
    T = field_tables(q)
    total = q ** (m * m)
    chunk = 1 << 18
    digits = q ** np.arange(m * m - 1, -1, -1, dtype=np.int64)
    found = []
    for start in range(0, total, chunk):
        keys = np.arange(start, min(total, start + chunk), dtype=np.int64)
        mats = (keys[:, None] // digits % q).astype(np.int32).reshape(-1, m, m)
        found.append(mats[T.det(mats) != 0])
    G = FiniteMatrixGroup(T, m, np.concatenate(found), f"GL_{m}(F_{q})")
    if G.order != size:
        raise OracleError("enumeration does not match the order formula")
    return G


@dataclass(eq=False)
class ConjugacyClasses:
    """Classes of G, ordered by their least element; the representative is
    that least element."""

    group: FiniteMatrixGroup
    reps: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def inverse_class(self) -> np.ndarray:
        return self.class_of[self.group.inverse[self.reps]]

    @cached_property
    def identity_class(self) -> int:
        return int(self.class_of[self.group.identity])

    @cached_property
    def rep_orders(self) -> np.ndarray:
        return self.group.element_orders[self.reps]

    def power_map(self, k: int) -> np.ndarray:
        """Class of rep^k for every class."""
        G = self.group
        X = G.elements[self.reps]
        P = np.broadcast_to(identity_codes(G.m), X.shape).copy()
        base, e = X, k
        while e:
            if e & 1:
                P = G.tables.matmul(P, base)
            base = G.tables.matmul(base, base)
            e >>= 1
        return self.class_of[G.index_of(P)]

    def classes_of(self, mats: np.ndarray) -> np.ndarray:
        return self.class_of[self.group.index_of(mats)]


def conjugacy_classes(G: FiniteMatrixGroup) -> ConjugacyClasses:
    class_of = np.full(G.order, -1, dtype=np.int64)
    reps, sizes = [], []
    X, Xinv = G.elements, G.elements[G.inverse]
    for i in range(G.order):
        if class_of[i] >= 0:
            continue
        conj = G.tables.matmul(G.tables.matmul(X, G.elements[i]), Xinv)
        members = np.unique(G.index_of(conj))
        class_of[members] = len(reps)
        reps.append(i)
        sizes.append(len(members))
    return ConjugacyClasses(G, np.array(reps), np.array(sizes, dtype=np.int64), class_of)
