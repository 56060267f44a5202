import itertools
import random
from fractions import Fraction

import pytest

from jldist.buildings import (ApartmentPoint, building_case, chamber_vertices, doubled_permutation,
                              image_vertices, j_map, permute, uniformizer_nrd_valuations)
from jldist.localdata import CaseTag, LocalSetup

H = Fraction(1, 2)
CASES = list(CaseTag)


def pt(*c):
    return ApartmentPoint.of(c)


def test_canonical_form():
    assert pt(3, 4, 5) == pt(0, 1, 2)
    assert pt(H, 1).coords == (0, H)
    assert pt(1, 2).is_vertex() and not pt(0, H).is_vertex()


@pytest.mark.parametrize("case,x,image", [
    ("nr-odd", (0, 1, 2), (0, 1, 2)),
    ("tr-odd", (0, 1, 2), (0, 2, 4)),
    ("tr-even", (0, 1), (0, 0, 1, 1)),
    ("nr-even", (0, 1), (H, 0, 1, H)),
])
def test_j_map_examples(case, x, image):
    assert j_map(case, x) == pt(*image)


def test_chamber_vertices():
    assert chamber_vertices(1) == [pt(0)]
    assert chamber_vertices(2) == [pt(0, 0), pt(0, 1)]
    assert chamber_vertices(3) == [pt(0, 0, 0), pt(0, 0, 1), pt(0, 1, 1)]


@pytest.mark.parametrize("case,m,count", [("tr-odd", 3, 6), ("nr-even", 2, 0), ("tr-even", 4, 4), ("tr-odd", 2, 3)])
def test_image_vertex_examples(case, m, count):
    assert len(image_vertices(case, m)) == count


def test_tr_odd_m2_vertices_are_images_and_midpoint():
    assert set(image_vertices("tr-odd", 2)) == {pt(0, 0), pt(0, 2), pt(0, 1)}


@pytest.mark.parametrize("m", range(1, 9))
def test_image_vertex_counts(m):
    expected = {CaseTag.NR_ODD: m, CaseTag.TR_ODD: m * (m - 1) // 2 + m, CaseTag.NR_EVEN: 0, CaseTag.TR_EVEN: m}
    for case, count in expected.items():
        pts = image_vertices(case, m)
        assert len(pts) == count == len(set(pts))
        assert all(p.is_vertex() for p in pts)


def test_building_case_uses_parity_of_d():
    assert building_case(LocalSetup(3, "nr", 4, 2)) is CaseTag.NR_EVEN
    assert building_case(LocalSetup(3, "tr", 3, 3)) is CaseTag.TR_ODD


def _vertex_box(m, bound):
    return {pt(0, *rest) for rest in itertools.product(range(-bound, bound + 1), repeat=m - 1)}


@pytest.mark.parametrize("m", range(1, 7))
def test_injective_on_vertices(m):
    verts = _vertex_box(m, 2 if m < 6 else 1)
    for case in CASES:
        images = {j_map(case, v) for v in verts}
        assert len(images) == len(verts)


@pytest.mark.parametrize("m", range(2, 6))
def test_permutation_equivariance(m):
    rng = random.Random(m)
    for _ in range(40):
        x = pt(*(Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3, 4])) for _ in range(m)))
        perm = list(range(m))
        rng.shuffle(perm)
        for case in CASES:
            big = perm if case in (CaseTag.NR_ODD, CaseTag.TR_ODD) else doubled_permutation(perm)
            assert j_map(case, permute(x, perm)) == permute(j_map(case, x), big)


@pytest.mark.parametrize("m", range(2, 6))
def test_affine_on_chamber(m):
    verts = chamber_vertices(m)
    for case in CASES:
        for u, v in itertools.combinations(verts, 2):
            mid = pt(*((a + b) / 2 for a, b in zip(u.coords, v.coords)))
            ju, jv = j_map(case, u).coords, j_map(case, v).coords
            assert j_map(case, mid) == pt(*((a + b) / 2 for a, b in zip(ju, jv)))
        # a generic interior point, as a barycentric combination
        rng = random.Random(m)
        w = [Fraction(rng.randint(1, 9)) for _ in verts]
        w = [x / sum(w) for x in w]
        x = pt(*(sum(wi * v.coords[i] for wi, v in zip(w, verts)) for i in range(m)))
        images = [j_map(case, v).coords for v in verts]
        D = len(images[0])
        assert j_map(case, x) == pt(*(sum(wi * im[i] for wi, im in zip(w, images)) for i in range(D)))


def test_dimension_of_images():
    assert j_map("nr-even", (0, 1, 2)).dim == 6
    assert j_map("tr-odd", (0, 1, 2)).dim == 3


@pytest.mark.parametrize("q,ram,n,d,delta_val,k_val,sign", [
    (3, "nr", 3, 3, 1, 3, 1),
    (3, "nr", 2, 1, 2, 2, 1),
    (3, "nr", 8, 8, 2, 8, -1),
    (3, "tr", 4, 2, 4, 4, 1),
    (3, "nr", 4, 4, 2, 4, -1),
])
def test_nrd_valuations(q, ram, n, d, delta_val, k_val, sign):
    v = uniformizer_nrd_valuations(LocalSetup(q, ram, n, d))
    assert (v.delta_uniformizer, v.k_uniformizer, v.det_sign) == (delta_val, k_val, sign)


def test_det_sign_formula():
    for d in range(1, 13):
        s = LocalSetup(3, "nr", d, d)
        assert uniformizer_nrd_valuations(s).det_sign == (-1) ** (s.delta + 1)
