from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from jldist.charlat import CycloInt, RootOfUnity
from jldist.green import CuspidalLabel, green_match
from jldist.oracle import (OracleError, abelian_verdicts, build_pair, check_table,
                           conjugacy_classes, dixon_table, enumerate_gl, lusztig_xi,
                           multiplicity_trivial, prasad_check, restriction_trivial,
                           twisted_multiplicity)
from jldist.oracle import dixon as dixon_mod
from jldist.oracle.dixon import dixon_prime, inner_products
from jldist.oracle.pairs import subfield_group

ONE, MINUS = RootOfUnity(0), RootOfUnity(Fraction(1, 2))


@pytest.mark.parametrize("m,q,order", [(2, 3, 48), (1, 5, 4), (2, 5, 480), (2, 9, 5760)])
def test_enumerate_gl(m, q, order):
    G = enumerate_gl(m, q)
    assert G.order == order
    assert len(np.unique(G.keys)) == order


def test_group_closure_gl2_f3():
    G = enumerate_gl(2, 3)
    idx = np.arange(G.order)
    prods = G.mul(idx[:, None], idx[None, :])
    assert prods.min() >= 0 and sorted(np.unique(prods)) == list(idx)
    assert np.array_equal(G.inverse[G.inverse], idx)
    assert np.all(G.mul(idx, G.inverse) == G.identity)


def test_enumerate_cap():
    with pytest.raises(OracleError):
        enumerate_gl(3, 9)
    with pytest.raises(OracleError):
        enumerate_gl(2, 5, cap=100)


@pytest.mark.parametrize("m,q,count", [(2, 3, 8), (1, 7, 6), (2, 5, 24), (2, 9, 80)])
def test_conjugacy_classes(m, q, count):
    cc = conjugacy_classes(enumerate_gl(m, q))
    assert len(cc) == count
    assert cc.sizes.sum() == cc.group.order
    assert Counter(cc.class_of.tolist()) == dict(enumerate(cc.sizes.tolist()))


def test_dixon_prime():
    p = dixon_prime(48, 24)
    assert p % 24 == 1 and p * p > 4 * 48
    assert dixon_prime(4, 4) == 5


def test_dixon_gl2_f3(tables):
    t = tables(2, 3)
    assert sorted(t.degrees) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert t.conductor == 24


def test_dixon_cyclic_of_order_4(tables):
    # GL_1(F_5) is cyclic of order 4; class c holds the single element g^k
    t = tables(1, 5)
    assert t.degrees == [1, 1, 1, 1] and t.conductor == 4
    exps = [int(t.group.elements[r][0, 0]) - 1 for r in t.classes.reps]
    found = set()
    for row in t.rows:
        a = next(a for a in range(4) if all(v == CycloInt.root(a * k, 4) for v, k in zip(row, exps)))
        found.add(a)
    assert found == {0, 1, 2, 3}


def test_dixon_gl2_f5(tables):
    t = tables(2, 5)
    assert Counter(t.degrees)[4] == 10
    assert sum(d * d for d in t.degrees) == 480


def test_dixon_gl2_f9(tables):
    t = tables(2, 9)
    assert len(t.rows) == 80 and Counter(t.degrees)[8] == 36


@pytest.mark.parametrize("m,q", [(2, 3), (2, 5), (1, 9), (2, 9)])
def test_orthogonality_exact(tables, m, q):
    t = tables(m, q)
    check_table(t)
    gram = inner_products(t)
    assert np.array_equal(gram[:, :, 0], t.group.order * np.eye(len(t.rows), dtype=np.int64))
    assert not gram[:, :, 1:].any()


def test_dixon_class_cap(monkeypatch):
    monkeypatch.setattr(dixon_mod, "CLASS_CAP", 4)
    with pytest.raises(OracleError):
        dixon_table(enumerate_gl(2, 3))


def _row(table, a):
    return green_match(table).row_of(CuspidalLabel.of(table.group.q, table.group.m, a))


def test_trivial_row_multiplicity(tables):
    t = tables(2, 3)
    trivial = next(i for i, row in enumerate(t.rows) if all(v == CycloInt.integer(1) for v in row))
    for kind in ("nonsplit-torus", "levi-half"):
        assert multiplicity_trivial(t, trivial, build_pair(kind, 3).H) == 1


def test_torus_multiplicity_examples(tables):
    t = tables(2, 3)
    T = build_pair("nonsplit-torus", 3).H
    assert len(T) == 8
    assert multiplicity_trivial(t, _row(t, 2), T) == 1
    assert multiplicity_trivial(t, _row(t, 1), T) == 0


def test_twisted_multiplicity_examples(tables):
    t = tables(2, 3)
    pair = build_pair("ext-levi-eta", 3)
    row = _row(t, 2)
    assert twisted_multiplicity(t, row, pair.H, pair.coset, ONE) == 1
    assert twisted_multiplicity(t, row, pair.H, pair.coset, MINUS) == 0
    row = _row(t, 1)
    assert multiplicity_trivial(t, row, pair.H) == 0
    assert twisted_multiplicity(t, row, pair.H, pair.coset, ONE) == 0
    with pytest.raises(OracleError, match="inconsistent scalar"):
        twisted_multiplicity(t, row, pair.H, pair.coset, RootOfUnity(Fraction(1, 4)))


def test_build_pair_examples():
    H = build_pair("ext-field-embed", 3, m=2, s=2).H
    assert len(H) == 5760 and H.m == 4
    # the image is closed under products on a sample
    rng = np.random.default_rng(0)
    i, j = rng.integers(0, len(H), 200), rng.integers(0, len(H), 200)
    assert H.contains(H.tables.matmul(H.elements[i], H.elements[j])).all()

    pair = build_pair("ext-galois-gamma", 3)
    tab, gamma, T = pair.G.tables, pair.coset, pair.torus
    g_inv = pair.G.elements[pair.G.inverse[pair.G.index_of(gamma)]]
    conj = tab.matmul(tab.matmul(gamma, T.elements), g_inv)
    cubes = tab.matmul(tab.matmul(T.elements, T.elements), T.elements)
    assert np.array_equal(conj, cubes)
    assert T.contains(tab.matmul(gamma, gamma)[None])[0]
    minus_w = tab.matmul(np.diag([tab.neg[1]] * 2).astype(np.int32), pair.w)
    assert np.array_equal(tab.matmul(tab.matmul(gamma, pair.w), g_inv), minus_w)


@pytest.mark.parametrize("kind", ["nonsplit-torus", "levi-half", "ext-levi-eta", "ext-galois-gamma"])
@pytest.mark.parametrize("q", [3, 5])
def test_pairs_satisfy_invariants(kind, q):
    build_pair(kind, q).check()


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("kind", ["nonsplit-torus", "levi-half"])
def test_cuspidal_distinction_by_divisibility(tables, q, kind):
    t = tables(2, q)
    H = build_pair(kind, q).H
    for row, label in green_match(t).rows.items():
        assert multiplicity_trivial(t, row, H) == int(label.a % (q - 1) == 0)


@pytest.mark.parametrize("q", [3, 5])
def test_multiplicity_is_conjugation_invariant(tables, q):
    t = tables(2, q)
    G = t.group
    rng = np.random.default_rng(q)
    for kind in ("nonsplit-torus", "levi-half"):
        H = build_pair(kind, q).H
        for g in rng.integers(0, G.order, 3):
            x, x_inv = G.elements[g], G.elements[G.inverse[g]]
            conj = G.subgroup(G.index_of(G.tables.matmul(G.tables.matmul(x, H.elements), x_inv)))
            for row in range(len(t.rows)):
                assert multiplicity_trivial(t, row, conj) == multiplicity_trivial(t, row, H)


@pytest.mark.parametrize("q", [3, 5])
def test_all_pair_multiplicities_at_most_one(tables, q):
    t = tables(2, q)
    match = green_match(t)
    for kind in ("nonsplit-torus", "levi-half"):
        H = build_pair(kind, q).H
        for row in match.rows:
            assert multiplicity_trivial(t, row, H) in (0, 1)
    for kind in ("ext-levi-eta", "ext-galois-gamma"):
        pair = build_pair(kind, q)
        for row in match.rows:
            for s in (ONE, MINUS):
                assert twisted_multiplicity(t, row, pair.H, pair.coset, s) in (0, 1)


def test_prasad_gl2_f9(tables):
    entries = prasad_check(tables(2, 9), 3)
    assert len(entries) == 36
    assert all(e.multiplicity == 0 and not e.predicted for e in entries)


def test_prasad_character_sum_directly(tables):
    t = tables(2, 9)
    H = subfield_group(2, 3, 2, t.group)
    assert len(H) == 48
    total = sum(multiplicity_trivial(t, row, H) for row in green_match(t).rows)
    assert total == 0


@pytest.mark.parametrize("q", [3, 5])
def test_prasad_gl1(tables, q):
    for e in prasad_check(tables(1, q * q), q):
        assert e.agrees
        assert e.multiplicity == int(e.label.a % (q - 1) == 0)


def test_lusztig_torus_pair(tables):
    t = tables(2, 3)
    pair = build_pair("nonsplit-torus", 3)
    for a, expected in [(1, 0), (2, 1), (5, 0)]:
        xi = [x for x in lusztig_xi(pair, a) if x.theta_stable]
        assert len(xi) == 3
        assert all(x.r in (-1, 0, 1) for x in xi)
        assert sum(x.r for x in xi) == expected == multiplicity_trivial(t, _row(t, a), pair.H)


@pytest.mark.parametrize("q", [3, 5])
def test_lusztig_sum_equals_multiplicity(tables, q):
    t = tables(2, q)
    for kind in ("nonsplit-torus", "levi-half"):
        pair = build_pair(kind, q)
        for row, label in green_match(t).rows.items():
            xi = lusztig_xi(pair, label.a)
            assert all(x.r == 0 for x in xi if not x.theta_stable)
            assert sum(x.r for x in xi) == multiplicity_trivial(t, row, pair.H)


def test_abelian_restriction():
    trivial = restriction_trivial(3, 3)
    assert len(trivial) == 728
    assert [a for a, ok in enumerate(trivial) if ok] == list(range(0, 728, 26))
    verdicts = abelian_verdicts(3, 3)
    assert sum(v.distinguished for v in verdicts) == 28
