"""The m = 1 unramified case checked by direct restriction.

With n = d the inner form is D^× inside Delta^×, and at residue level the
question is whether the character of F_{q^(2n)}^× is trivial on F_{q^n}^×.
That is decided here by evaluating the character on every element of the
embedded subfield, without any congruence shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from ..charlat import MultChar, RootOfUnity, evaluate
from ..ffield import build_field, compatible_embedding


@dataclass(frozen=True)
class AbelianVerdict:
    a: int
    t: RootOfUnity
    distinguished: bool


def restriction_trivial(q: int, n: int) -> list[bool]:
    """For each exponent a of F_{q^(2n)}^×: is the character trivial on the
    subfield F_{q^n}^×?"""
    big = build_field(*_pk(q**(2 * n)))
    small = build_field(*_pk(q**n))
    mult = compatible_embedding(big, small)
    sub = [k * mult % big.unit_order for k in range(small.unit_order)]
    Q = big.order
    out = []
    for a in range(Q - 1):
        chi = MultChar(Q, a)
        out.append(all(evaluate(chi, x).is_one() for x in sub))
    return out


def abelian_verdicts(q: int, n: int, ts=(RootOfUnity(0), RootOfUnity(Fraction(1, 2)))) -> list[AbelianVerdict]:
    trivial = restriction_trivial(q, n)
    return [AbelianVerdict(a, t, triv and t.is_one()) for a, triv in enumerate(trivial) for t in ts]


def _pk(Q: int) -> tuple[int, int]:
    (p, k), = factorint(Q).items()
    return int(p), int(k)
