"""Exact model of the standard apartment R^m / R(1,...,1) and the four
embeddings of the apartment of GL_m(D) into that of GL_mu(Delta).

Points are stored with the first coordinate shifted to 0; a point is a
vertex when that representative is integral.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .localdata import CaseTag, LocalSetup

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ApartmentPoint:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, coords: Sequence) -> ApartmentPoint:
        coords = [Fraction(c) for c in coords]
        return cls(tuple(c - coords[0] for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_vertex(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def building_case(setup: LocalSetup) -> CaseTag:
    """Embedding type: ramification and parity of d."""
    return CaseTag.of(setup.ram, setup.d)


def _even_nr_vertex(v: Sequence[int]) -> list[Fraction]:
    out = []
    for x in v:
        k, r = divmod(int(x), 2)
        out += [HALF + k, Fraction(k)] if r == 0 else [Fraction(1 + k), HALF + k]
    return out


def _kuhn_simplex(x: Sequence[Fraction]) -> list[tuple[Fraction, list[int]]]:
    """Write x as a convex combination of the vertices of the chamber of the
    standard decomposition containing it."""
    base = [c.numerator // c.denominator for c in x]
    frac = [c - b for c, b in zip(x, base)]
    order = sorted(range(len(x)), key=lambda i: -frac[i])
    levels = [Fraction(1)] + [frac[i] for i in order] + [Fraction(0)]
    out, v = [], list(base)
    for k in range(len(x) + 1):
        w = levels[k] - levels[k + 1]
        if w:
            out.append((w, list(v)))
        if k < len(x):
            v[order[k]] += 1
    return out


def j_map(case: CaseTag | str, x: ApartmentPoint | Sequence) -> ApartmentPoint:
    case = CaseTag.parse(case)
    if not isinstance(x, ApartmentPoint):
        x = ApartmentPoint.of(x)
    c = x.coords
    if case is CaseTag.NR_ODD:
        return x
    if case is CaseTag.TR_ODD:
        return ApartmentPoint.of([2 * v for v in c])
    if case is CaseTag.TR_EVEN:
        return ApartmentPoint.of([v for v in c for _ in (0, 1)])
    acc = [Fraction(0)] * (2 * len(c))
    for w, v in _kuhn_simplex(c):
        acc = [a + w * y for a, y in zip(acc, _even_nr_vertex(v))]
    return ApartmentPoint.of(acc)


def chamber_vertices(m: int) -> list[ApartmentPoint]:
    """s_i = (0, ..., 0, 1, ..., 1) with i ones, i = 0..m-1."""
    return [ApartmentPoint.of([0] * (m - i) + [1] * i) for i in range(m)]


def _exact_left_inverse(A: list[list[Fraction]]) -> tuple[list[int], list[list[Fraction]]]:
    """Rows P with A[P] invertible, and A[P]^{-1}."""
    rows, cols = len(A), len(A[0])
    chosen, basis = [], []
    for i in range(rows):
        trial = basis + [A[i]]
        if _rank(trial) == len(trial):
            chosen.append(i)
            basis = trial
        if len(chosen) == cols:
            break
    if len(chosen) != cols:
        raise ValueError("degenerate simplex")
    return chosen, _inverse(basis)


def _rank(M: list[list[Fraction]]) -> int:
    M = [row[:] for row in M]
    r = 0
    for c in range(len(M[0])):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def _inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c])
        A[c], A[piv] = A[piv], A[c]
        A[c] = [v / A[c][c] for v in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


def image_vertices(case: CaseTag | str, m: int) -> list[ApartmentPoint]:
    """Vertices of the big apartment lying in the image of the standard chamber.

    Candidates are the integer points of the bounding box of the image
    simplex (in first-coordinate-zero form, which also identifies points
    differing by integer multiples of (1, ..., 1)); a candidate is kept when
    its barycentric coordinates, solved exactly, are all nonnegative.
    """
    case = CaseTag.parse(case)
    images = [j_map(case, s).coords for s in chamber_vertices(m)]
    D = len(images[0])
    # rows: coordinates, then the affine constraint sum(lambda) = 1
    A = [[images[i][r] for i in range(m)] for r in range(D)] + [[Fraction(1)] * m]
    P, inv = _exact_left_inverse(A)
    den = 1
    for row in inv:
        for v in row:
            den = den * v.denominator // np.gcd(den, v.denominator)
    scale = 1
    for row in A:
        for v in row:
            scale = scale * v.denominator // np.gcd(scale, v.denominator)
    A_int = np.array([[int(v * scale) for v in row] for row in A], dtype=np.int64)
    inv_int = np.array([[int(v * den) for v in row] for row in inv], dtype=np.int64)

    lo = [min(im[r] for im in images) for r in range(D)]
    hi = [max(im[r] for im in images) for r in range(D)]
    ranges = [range(-((-l.numerator) // l.denominator), h.numerator // h.denominator + 1)
              for l, h in zip(lo, hi)]
    if any(len(r) == 0 for r in ranges):
        return []
    pts = np.array(list(itertools.product(*ranges)), dtype=np.int64).reshape(-1, D)
    rhs = np.hstack([pts * scale, np.full((len(pts), 1), scale, dtype=np.int64)])
    # den·lambda, exact; then check every equation and the sign
    lam = rhs[:, P] @ inv_int.T
    ok = np.all(lam @ A_int.T == den * rhs, axis=1) & np.all(lam >= 0, axis=1)
    return [ApartmentPoint.of(row) for row in pts[ok]]


def permute(x: ApartmentPoint, perm: Sequence[int]) -> ApartmentPoint:
    """Coordinate permutation: position perm[i] receives coordinate i."""
    out = [Fraction(0)] * x.dim
    for i, c in enumerate(x.coords):
        out[perm[i]] = c
    return ApartmentPoint.of(out)


def doubled_permutation(perm: Sequence[int]) -> list[int]:
    """The permutation of 2m coordinates moving the pair (2k, 2k+1) to
    (2·perm[k], 2·perm[k]+1), in 0-based indexing."""
    out = [0] * (2 * len(perm))
    for k, t in enumerate(perm):
        out[2 * k], out[2 * k + 1] = 2 * t, 2 * t + 1
    return out


# -------------------------------------------------- reduced norm bookkeeping


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_det(M: list[list[dict[int, int]]]) -> dict[int, int]:
    """Cofactor expansion along the first row, skipping zero entries."""
    n = len(M)
    if n == 1:
        return M[0][0]
    out: dict[int, int] = {}
    for j, entry in enumerate(M[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = _poly_mul(entry, _poly_det(minor))
        sign = -1 if j % 2 else 1
        for k, v in term.items():
            out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def uniformizer_matrix(delta: int) -> list[list[dict[int, int]]]:
    """delta x delta matrix with ones above the diagonal and the uniformizer
    (the polynomial variable) in the bottom-left corner."""
    if delta == 1:
        return [[{1: 1}]]
    M = [[{} for _ in range(delta)] for _ in range(delta)]
    for i in range(delta - 1):
        M[i][i + 1] = {0: 1}
    M[delta - 1][0] = {1: 1}
    return M


@dataclass(frozen=True)
class NrdValuations:
    delta_uniformizer: int
    k_uniformizer: int
    det_sign: int


def uniformizer_nrd_valuations(setup: LocalSetup) -> NrdValuations:
    """K-valuations of Nrd(ϖ_Delta·I_mu) and Nrd(ϖ_K·I_mu), with the sign of
    det(w_0) = ±ϖ_K found by symbolic expansion."""
    det = _poly_det(uniformizer_matrix(setup.delta))
    (val, sign), = det.items()
    return NrdValuations(delta_uniformizer=setup.mu * val, k_uniformizer=setup.mu * setup.delta,
                         det_sign=sign)
