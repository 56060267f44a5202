"""Cuspidal characters of GL_f(F_q) on elliptic regular classes.

A Frobenius orbit of a regular character a of F_{q^f}^× labels a cuspidal
whose value at an elliptic element with eigenvalue g^k is

    (-1)^(f-1) · sum_j zeta^(a·k·q^j),   zeta = zeta_{q^f - 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .charlat import CycloInt
from .ffield import FieldError, build_field, eigenvalue_in_extension
from .localdata import regular_orbits
from .oracle.dixon import CharacterTable
from .oracle.groups import OracleError, from_codes


@dataclass(frozen=True)
class CuspidalLabel:
    q: int
    f: int
    orbit: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orbit", tuple(sorted(self.orbit)))
        Q1 = self.q**self.f - 1
        if {a * self.q % Q1 for a in self.orbit} != set(self.orbit) or len(self.orbit) != self.f:
            raise ValueError(f"{self.orbit} is not a regular Frobenius orbit")

    @classmethod
    def of(cls, q: int, f: int, a: int) -> CuspidalLabel:
        Q1 = q**f - 1
        return cls(q, f, tuple({a * q**j % Q1 for j in range(f)}))

    @property
    def a(self) -> int:
        return self.orbit[0]

    @property
    def degree(self) -> int:
        return prod(self.q**i - 1 for i in range(1, self.f))


def green_value(label: CuspidalLabel, k: int) -> CycloInt:
    q, f = label.q, label.f
    Q1 = q**f - 1
    if len({k * q**j % Q1 for j in range(f)}) != f:
        raise ValueError(f"g^{k} does not generate F_{q**f} over F_{q}")
    vec = np.zeros(Q1, dtype=np.int64)
    sign = -1 if (f - 1) % 2 else 1
    for j in range(f):
        vec[label.a * k * q**j % Q1] += sign
    return CycloInt.from_vector(Q1, vec)


def elliptic_classes(table: CharacterTable) -> dict[int, int]:
    """Class index -> an eigenvalue exponent in F_{q^f}, for elliptic
    regular classes."""
    G = table.group
    ext = build_field(G.field.p, G.field.degree * G.m)
    out = {}
    for c, rep in enumerate(table.classes.reps):
        try:
            _, k = eigenvalue_in_extension(from_codes(G.elements[rep]), G.field, G.m, ext)
        except FieldError:
            continue
        out[c] = k
    return out


@dataclass(frozen=True)
class GreenMatch:
    rows: dict[int, CuspidalLabel]
    elliptic: dict[int, int]

    def row_of(self, label: CuspidalLabel) -> int:
        return next(r for r, lab in self.rows.items() if lab == label)


def green_match(table: CharacterTable) -> GreenMatch:
    """Pair each cuspidal row with the orbit whose Green values it carries."""
    G = table.group
    q, f = G.q, G.m
    elliptic = elliptic_classes(table)
    labels = [CuspidalLabel(q, f, o) for o in regular_orbits(q, f)]
    degree = prod(q**i - 1 for i in range(1, f))
    candidates = [i for i, d in enumerate(table.degrees) if d == degree]
    matched: dict[int, CuspidalLabel] = {}
    for lab in labels:
        want = {c: green_value(lab, k) for c, k in elliptic.items()}
        hits = [i for i in candidates if all(table.rows[i][c] == v for c, v in want.items())]
        if len(hits) != 1 or hits[0] in matched:
            raise OracleError(f"NO_MATCH for orbit {lab.orbit}: rows {hits}")
        matched[hits[0]] = lab
    if len(matched) != len(candidates):
        raise OracleError(f"NO_MATCH: {len(candidates)} rows of degree {degree}, {len(matched)} orbits")
    return GreenMatch(matched, elliptic)
