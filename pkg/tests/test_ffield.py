import itertools

import pytest

from jldist.ffield import (ZERO, FieldError, alternate_generator, build_field, compatible_embedding,
                           eigenvalue_in_extension, embed, subfield_embedding)

SMALL = [(2, 1), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)]


@pytest.mark.parametrize("p,k,order", [(3, 2, 9), (3, 1, 3), (5, 2, 25)])
def test_build_field_orders(p, k, order):
    F = build_field(p, k)
    assert F.order == order
    assert F.unit_order == order - 1


def test_modulus_is_least_primitive():
    # x^2 + 2x + 2 is the first primitive quadratic over F_3 in constant-first order
    assert build_field(3, 2).modulus == (2, 1, 1)
    assert build_field(2, 3).modulus == (1, 0, 1, 1)


@pytest.mark.parametrize("p,k", SMALL)
def test_zech_table_shape(p, k):
    F = build_field(p, k)
    holes = [i for i, z in enumerate(F.zech) if z == ZERO]
    assert len(F.zech) == F.unit_order
    # the single hole sits at the exponent of -1, which is 0 in characteristic 2
    assert holes == [0 if p == 2 else F.unit_order // 2]
    # g has full order: the antilog table never repeats
    assert len(set(F.antilog.tolist())) == F.unit_order


def test_examples_in_f9():
    F = build_field(3, 2)
    assert F.add(5, ZERO) == 5
    assert F.mul(3, 7) == 2
    assert F.add(0, 0) == 4  # 1 + 1 = -1 = g^4
    with pytest.raises(ZeroDivisionError):
        F.inv(ZERO)


def test_errors():
    with pytest.raises(FieldError):
        build_field(4, 1)
    with pytest.raises(FieldError):
        build_field(2, 25)
    with pytest.raises(FieldError):
        subfield_embedding(27, 9)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (3, 3), (2, 4), (5, 2), (3, 4)])
def test_field_axioms_exhaustive(p, k):
    F = build_field(p, k)
    els = list(F.elements())
    for x, y in itertools.product(els, repeat=2):
        assert F.add(x, y) == F.add(y, x)
        assert F.mul(x, y) == F.mul(y, x)
        assert F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y))
        assert F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y))
    for x, y, z in itertools.product(els[:12], repeat=3):
        assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    for x in els:
        assert F.add(x, F.neg(x)) == ZERO
        if x != ZERO:
            assert F.mul(x, F.inv(x)) == 0


@pytest.mark.parametrize("Q,Q0,expected", [(9, 3, 4), (81, 9, 10), (729, 27, 28)])
def test_subfield_embedding(Q, Q0, expected):
    assert subfield_embedding(Q, Q0) == expected


def test_subfield_embedding_composes():
    assert subfield_embedding(81, 9) * subfield_embedding(9, 3) == subfield_embedding(81, 3)
    assert subfield_embedding(729, 27) * subfield_embedding(27, 3) == subfield_embedding(729, 3)


@pytest.mark.parametrize("p,k,s", [(3, 1, 2), (3, 2, 2), (2, 2, 3), (5, 1, 2), (3, 1, 3)])
def test_compatible_embedding_is_a_field_map(p, k, s):
    small, big = build_field(p, k), build_field(p, k * s)
    c = compatible_embedding(big, small)
    assert c % subfield_embedding(big.order, small.order) == 0
    for x, y in itertools.product(list(small.elements()), repeat=2):
        assert embed(big, small, small.add(x, y), c) == big.add(embed(big, small, x, c), embed(big, small, y, c))


def _charpoly_roots(F, ext, M):
    c = compatible_embedding(ext, F)
    N = [[embed(ext, F, x, c) for x in row] for row in M]
    # 2x2: lambda^2 - tr lambda + det
    tr = ext.add(N[0][0], N[1][1])
    det = ext.sub(ext.mul(N[0][0], N[1][1]), ext.mul(N[0][1], N[1][0]))
    return {lam for lam in range(ext.unit_order)
            if ext.add(ext.sub(ext.mul(lam, lam), ext.mul(tr, lam)), det) == ZERO}


def test_eigenvalue_of_companion_over_f3():
    F = build_field(3)
    one, two = F.from_int(1), F.from_int(2)
    # companion matrix of x^2 + x + 2, irreducible over F_3
    M = [[ZERO, F.neg(two)], [one, F.neg(one)]]
    ext, k = eigenvalue_in_extension(M, F, 2)
    assert len({k, 3 * k % 8}) == 2
    assert _charpoly_roots(F, ext, M) == {k, 3 * k % 8}


def test_eigenvalue_of_primitive_companion_is_generator():
    F = build_field(5)
    mod = build_field(5, 2).modulus
    M = [[ZERO, F.neg(F.from_int(mod[0]))], [F.from_int(1), F.neg(F.from_int(mod[1]))]]
    ext, k = eigenvalue_in_extension(M, F, 2)
    from math import gcd
    assert gcd(k, 24) == 1
    assert _charpoly_roots(F, ext, M) == {k, 5 * k % 24}


def test_eigenvalue_one_by_one():
    F = build_field(7)
    ext, k = eigenvalue_in_extension([[3]], F, 1)
    assert k == 3


def test_eigenvalue_rejects_split():
    F = build_field(3)
    with pytest.raises(FieldError):
        eigenvalue_in_extension([[0, ZERO], [ZERO, 1]], F, 2)
    with pytest.raises(FieldError):
        eigenvalue_in_extension([[0, 0], [ZERO, 0]], F, 2)


def test_alternate_generator():
    F = build_field(3, 2)
    u = alternate_generator(F)
    assert u != 1
    alt = build_field(3, 2, rank=1).modulus
    assert F.evaluate([F.prime_element(c) for c in alt], u) == ZERO


@pytest.mark.parametrize("p,k", [(3, 8), (2, 13)])
def test_large_antilog_is_a_permutation(p, k):
    # past the 4096-step block the table is extended by a modular matrix power
    F = build_field(p, k)
    assert sorted(F.antilog.tolist()) == list(range(1, F.order))
    x, y = 5000, 4000
    assert F.to_int(F.mul(x, y)) == F.to_int((x + y) % F.unit_order)


def test_build_field_rank_gives_another_primitive_modulus():
    assert build_field(3, 2, rank=1).modulus != build_field(3, 2).modulus
