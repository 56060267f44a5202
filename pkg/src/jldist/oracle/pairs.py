"""Finite symmetric pairs, restriction multiplicities, and the Prasad and
Lusztig cross-checks."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING
from fractions import Fraction

import numpy as np

from ..charlat import CycloInt, RootOfUnity
from ..ffield import ZERO, FieldSpec, build_field, compatible_embedding, embed
from .dixon import CharacterTable
from .groups import FiniteMatrixGroup, OracleError, enumerate_gl, field_tables, to_codes

if TYPE_CHECKING:
    from ..green import CuspidalLabel


class PairKind(enum.Enum):
    EXT_FIELD_EMBED = "ext-field-embed"
    NONSPLIT_TORUS = "nonsplit-torus"
    LEVI_HALF = "levi-half"
    EXT_LEVI_ETA = "ext-levi-eta"
    EXT_GALOIS_GAMMA = "ext-galois-gamma"


@dataclass(eq=False)
class SymmetricPairSpec:
    kind: PairKind
    G: FiniteMatrixGroup | None
    H: FiniteMatrixGroup
    theta: np.ndarray | None = None
    coset: np.ndarray | None = None
    torus: FiniteMatrixGroup | None = None
    torus_exponents: np.ndarray | None = None
    torus_field_order: int = 0
    w: np.ndarray | None = None

    def check(self) -> None:
        T = self.H.tables
        if self.theta is not None:
            th = self.theta
            th_inv = _invert(self.G, th)
            fixed = T.matmul(T.matmul(th, self.H.elements), th_inv)
            if not np.array_equal(fixed, self.H.elements):
                raise OracleError("H is not fixed by the involution")
        if self.coset is not None:
            if self.H.contains(self.coset[None])[0]:
                raise OracleError("coset element lies in H")
            if not self.H.contains(T.matmul(self.coset, self.coset)[None])[0]:
                raise OracleError("coset element squared is outside H")


def _invert(G: FiniteMatrixGroup, M: np.ndarray) -> np.ndarray:
    return G.elements[G.inverse[G.index_of(M)]]


# ------------------------------------------------------------ embeddings


class RegularRepresentation:
    """F_{q^s} acting on itself, written in the basis 1, g, ..., g^(s-1)
    over F_q (g the generator of the big field)."""

    def __init__(self, small: FieldSpec, s: int):
        self.small = small
        self.s = s
        self.big = build_field(small.p, small.degree * s)
        self.mult = compatible_embedding(self.big, small)
        B = self.big
        self.coords: dict[int, tuple[int, ...]] = {}
        for vec in itertools.product(list(small.elements()), repeat=s):
            v = ZERO
            for i, x in enumerate(vec):
                v = B.add(v, B.mul(embed(B, small, x, self.mult), i))
            self.coords[v] = vec
        if len(self.coords) != B.order:
            raise OracleError("power basis does not span")

    def matrix(self, z: int) -> np.ndarray:
        """Code matrix of multiplication by z (columns are images of basis)."""
        B = self.big
        M = np.zeros((self.s, self.s), dtype=np.int32)
        for j in range(self.s):
            col = self.coords[B.mul(z, j) if z != ZERO else ZERO]
            M[:, j] = to_codes(col)
        return M


def field_embedding_group(m: int, q: int, s: int) -> FiniteMatrixGroup:
    """GL_m(F_{q^s}) inside GL_{ms}(F_q), entry by entry through the regular
    representation."""
    small_T = field_tables(q)
    rep = RegularRepresentation(small_T.F, s)
    big_G = enumerate_gl(m, q**s)
    blocks = np.stack([np.zeros((s, s), dtype=np.int32)] + [rep.matrix(k) for k in range(rep.big.unit_order)])
    E = blocks[big_G.elements]  # (N, m, m, s, s)
    E = E.transpose(0, 1, 3, 2, 4).reshape(len(E), m * s, m * s)
    return FiniteMatrixGroup(small_T, m * s, E, f"GL_{m}(F_{q**s}) in GL_{m * s}(F_{q})")


def subfield_group(m: int, q: int, s: int, G: FiniteMatrixGroup | None = None) -> FiniteMatrixGroup:
    """GL_m(F_q) inside GL_m(F_{q^s}) through the compatible field embedding."""
    big = G if G is not None else enumerate_gl(m, q**s)
    small = enumerate_gl(m, q)
    mult = compatible_embedding(big.field, small.field)
    ex = small.elements.astype(np.int64) - 1
    img = np.where(ex < 0, 0, ex * mult % big.field.unit_order + 1).astype(np.int32)
    return FiniteMatrixGroup(big.tables, m, img, f"GL_{m}(F_{q})")


def nonsplit_torus(G: FiniteMatrixGroup) -> tuple[FiniteMatrixGroup, np.ndarray, RegularRepresentation]:
    """The image of F_{q^2}^× in GL_2(F_q), with the exponent of each element."""
    if G.m != 2:
        raise OracleError("nonsplit torus needs GL_2")
    rep = RegularRepresentation(G.field, 2)
    mats = np.stack([rep.matrix(k) for k in range(rep.big.unit_order)])
    T = FiniteMatrixGroup(G.tables, 2, mats, "T")
    exps = np.empty(len(T), dtype=np.int64)
    exps[T.index_of(mats)] = np.arange(rep.big.unit_order)
    return T, exps, rep


def _scalar(G: FiniteMatrixGroup, code: int) -> np.ndarray:
    return (np.eye(G.m, dtype=np.int32) * code).astype(np.int32)


def build_pair(kind: PairKind | str, q: int, m: int = 2, s: int = 2) -> SymmetricPairSpec:
    kind = PairKind(kind) if not isinstance(kind, PairKind) else kind
    if kind is PairKind.EXT_FIELD_EMBED:
        H = field_embedding_group(m, q, s)
        return SymmetricPairSpec(kind, None, H)

    if kind in (PairKind.NONSPLIT_TORUS, PairKind.EXT_GALOIS_GAMMA):
        G = enumerate_gl(2, q)
        T, exps, rep = nonsplit_torus(G)
        w = rep.matrix((q + 1) // 2)  # w^2 generates F_q^×, a nonsquare
        pair = SymmetricPairSpec(kind, G, T, theta=w, torus=T, torus_exponents=exps,
                                 torus_field_order=q * q, w=w)
        if kind is PairKind.EXT_GALOIS_GAMMA:
            pair.coset = find_gamma(G, T, rep, w)
        pair.check()
        return pair

    if m % 2:
        raise OracleError("the Levi pair needs m even")
    G = enumerate_gl(m, q)
    h = m // 2
    one, minus = 1, G.tables.neg[1]
    theta = np.diag([one] * h + [minus] * h).astype(np.int32)
    blocks = G.elements[:, :h, h:], G.elements[:, h:, :h]
    levi = (np.all(blocks[0] == 0, axis=(1, 2))) & (np.all(blocks[1] == 0, axis=(1, 2)))
    L = G.subgroup(np.nonzero(levi)[0], "L")
    pair = SymmetricPairSpec(kind, G, L, theta=theta)
    if m == 2:
        T, exps, _ = nonsplit_torus(G)
        pair.torus, pair.torus_exponents, pair.torus_field_order = T, exps, q * q
    if kind is PairKind.EXT_LEVI_ETA:
        eps = 2  # code of g, a nonsquare for odd q
        eta = np.zeros((m, m), dtype=np.int32)
        eta[:h, h:] = _scalar(G, eps)[:h, :h]
        eta[h:, :h] = np.eye(h, dtype=np.int32)
        pair.coset = eta
    pair.check()
    return pair


def find_gamma(G: FiniteMatrixGroup, T: FiniteMatrixGroup, rep: RegularRepresentation,
               w: np.ndarray) -> np.ndarray:
    """Least element acting on T by the q-power map, squaring into T and
    negating w."""
    tab, q = G.tables, G.q
    gen, gen_q = rep.matrix(1), rep.matrix(q % rep.big.unit_order)
    X, Xinv = G.elements, G.elements[G.inverse]
    ok = np.all(tab.matmul(tab.matmul(X, gen), Xinv) == gen_q, axis=(1, 2))
    ok &= T.contains(tab.matmul(X, X))
    minus_w = tab.matmul(_scalar(G, tab.neg[1]), w)
    ok &= np.all(tab.matmul(tab.matmul(X, w), Xinv) == minus_w, axis=(1, 2))
    hits = np.nonzero(ok)[0]
    if len(hits) == 0:
        raise OracleError("no Galois element found")
    return X[hits[0]]


# --------------------------------------------------------- multiplicities


def class_sum(table: CharacterTable, row: int, mats: np.ndarray) -> CycloInt:
    counts = np.bincount(table.classes.classes_of(mats), minlength=len(table.classes))
    return CycloInt(table.conductor, tuple(int(x) for x in counts @ table.coefficient_array[row]))


def _as_count(value: CycloInt, denom: int) -> int:
    c = value.rational_integer()
    if c is None or c % denom or c < 0:
        raise OracleError(f"multiplicity {value}/{denom} is not a nonnegative integer")
    return c // denom


def multiplicity_trivial(table: CharacterTable, row: int, H: FiniteMatrixGroup) -> int:
    return _as_count(class_sum(table, row, H.elements), len(H))


def twisted_multiplicity(table: CharacterTable, row: int, H: FiniteMatrixGroup, c: np.ndarray,
                         s: RootOfUnity) -> int:
    """Multiplicity of the trivial character of the group generated by H and
    s·c, where the scalar s is the action of the uniformizer."""
    if not (s**2).is_one():
        raise OracleError("inconsistent scalar: the extended group is not an extension of H by Z/2")
    plain = class_sum(table, row, H.elements)
    shifted = class_sum(table, row, table.group.tables.matmul(c, H.elements))
    total = plain + shifted * (1 if s.is_one() else -1)
    return _as_count(total, 2 * len(H))


# ------------------------------------------------------------------ Prasad


@dataclass(frozen=True)
class PrasadEntry:
    label: CuspidalLabel
    multiplicity: int
    predicted: bool

    @property
    def agrees(self) -> bool:
        return self.multiplicity == int(self.predicted)


def prasad_check(table: CharacterTable, q: int) -> list[PrasadEntry]:
    """For GL_m(F_{q^2}): compare the multiplicity over GL_m(F_q) with the
    test "contragredient equals Frobenius twist"."""
    from ..green import green_match  # green depends on this package

    G, cc = table.group, table.classes
    if G.q != q * q:
        raise OracleError(f"table is not for a group over F_{q * q}")
    H = subfield_group(G.m, q, 2, G)
    match = green_match(table)
    reps = G.elements[cc.reps].astype(np.int64) - 1
    sigma = np.where(reps < 0, 0, reps * q % G.field.unit_order + 1).astype(np.int32)
    sigma_class = cc.classes_of(sigma)
    out = []
    for row, label in sorted(match.rows.items(), key=lambda kv: kv[1].orbit):
        values = table.rows[row]
        predicted = all(values[cc.inverse_class[c]] == values[sigma_class[c]] for c in range(len(cc)))
        out.append(PrasadEntry(label, multiplicity_trivial(table, row, H), predicted))
    return out


# ----------------------------------------------------------------- Lusztig


@dataclass(frozen=True)
class XiClass:
    representative: int
    theta_stable: bool
    r: int
    stabilizer: str = ""


def _sigma(rank: int) -> int:
    return -1 if rank % 2 else 1


def lusztig_xi(pair: SymmetricPairSpec, a: int) -> list[XiClass]:
    """Double cosets T\\G/H with their signed contributions for the
    cuspidal attached to the character a of the elliptic torus T.

    Contributions are normalized to the cuspidal itself, that is to
    (-1)^(m-1) times the Deligne-Lusztig character of (T, a), so that they
    add up to the multiplicity of the trivial character of H.
    """
    G, H, T = pair.G, pair.H, pair.torus
    if G is None or T is None or pair.theta is None:
        raise OracleError("Lusztig data needs an ambient group, a torus and an involution")
    tab = G.tables
    Q1 = pair.torus_field_order - 1
    t_idx = G.index_of(T.elements)
    h_idx = set(G.index_of(H.elements).tolist())
    center = set(G.index_of(np.stack([_scalar(G, c) for c in range(1, G.q)])).tolist())
    exps_by_g = dict(zip(t_idx.tolist(), pair.torus_exponents[T.index_of(T.elements)].tolist()))
    theta, theta_inv = pair.theta, _invert(G, pair.theta)
    m = G.m
    outer = _sigma(m) * _sigma(1)

    seen = np.zeros(G.order, dtype=bool)
    out = []
    for g in range(G.order):
        if seen[g]:
            continue
        gH = tab.matmul(G.elements[g], H.elements)
        coset = G.index_of(tab.matmul(T.elements[:, None], gH[None]))
        seen[coset.ravel()] = True
        x, x_inv = G.elements[g], G.elements[G.inverse[g]]
        conj = tab.matmul(tab.matmul(x_inv, T.elements), x)
        Tp = set(G.index_of(conj).tolist())
        moved = set(G.index_of(tab.matmul(tab.matmul(theta, conj), theta_inv)).tolist())
        if moved != Tp:
            out.append(XiClass(g, False, 0))
            continue
        S = Tp & h_idx
        if S == Tp:
            sign, kind = outer * _sigma(1) * _sigma(1), "torus"
        elif S == center:
            sign, kind = outer * _sigma(m) * _sigma(1), "center"
        else:
            raise OracleError("unsupported fixed-point pattern")
        S_mats = G.elements[sorted(S)]
        back = G.index_of(tab.matmul(tab.matmul(x, S_mats), x_inv))
        trivial = all(a * exps_by_g[int(i)] % Q1 == 0 for i in back)
        out.append(XiClass(g, True, sign if trivial else 0, kind))
    return out
