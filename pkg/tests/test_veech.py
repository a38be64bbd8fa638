import itertools

import pytest

from cyclocover import veech
from cyclocover.cover_params import CoverParams, surfaces_isomorphic, symmetry_group, units, validate

from helpers import all_valid_params


@pytest.mark.parametrize(
    "N, a, index",
    [
        (4, (1, 1, 1, 1), 1),
        (10, (1, 1, 3, 5), 3),
        (8, (1, 3, 5, 7), 6),
        (10, (1, 3, 9, 7), 3),
        (40, (1, 9, 5, 25), 3),
        (14, (1, 9, 11, 7), 2),
    ],
)
def test_known_indices(N, a, index):
    d = veech.veech_index(validate(N, a))
    assert d.index == index
    assert d.index == 6 // d.s3_image_order
    assert len(d.orbit) == index


@pytest.mark.parametrize(
    "N, a, case",
    [
        (4, (1, 1, 1, 1), veech.CASE_TRIPLE_EQUAL),
        (6, (3, 1, 1, 1), veech.CASE_TRIPLE_EQUAL),
        (10, (1, 1, 3, 5), veech.CASE_PAIR_EQUAL),
        (8, (1, 3, 5, 7), veech.CASE_DISTINCT_KLEIN_ONLY),
        (10, (1, 3, 9, 7), veech.CASE_DISTINCT_ODD_SYMMETRY),
        (40, (1, 9, 5, 25), veech.CASE_DISTINCT_ODD_SYMMETRY),
        (14, (1, 9, 11, 7), veech.CASE_DISTINCT_THREE_CYCLE),
    ],
)
def test_case_labels(N, a, case):
    assert veech.veech_index(validate(N, a)).case_label == case


def test_projection_kernel_is_klein_group():
    kernel = [pi for pi in itertools.permutations(range(4)) if veech.project_to_pairings(pi) == (0, 1, 2)]
    assert sorted(kernel) == [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]


def test_projection_is_homomorphism():
    for pi in itertools.permutations(range(4)):
        for rho in itertools.permutations(range(4)):
            comp = tuple(pi[rho[i]] for i in range(4))
            a, b = veech.project_to_pairings(pi), veech.project_to_pairings(rho)
            assert veech.project_to_pairings(comp) == tuple(a[b[i]] for i in range(3))


def test_orbit_examples():
    assert len(veech.orbit(validate(4, (1, 1, 1, 1)))) == 1
    assert len(veech.orbit(validate(8, (1, 3, 5, 7)))) == 6
    assert len(veech.orbit(validate(10, (1, 1, 3, 5)))) == 3


def test_orbit_members_pairwise_nonisomorphic():
    for p in all_valid_params(12):
        orb = veech.orbit(p)
        for i, q in enumerate(orb):
            for r in orb[i + 1 :]:
                assert not surfaces_isomorphic(q, r)


def test_index_and_orbit_sweep():
    for p in all_valid_params(14):
        d = veech.veech_index(p)
        assert d.index in (1, 2, 3, 6)
        assert len(d.orbit) == d.index
        if d.case_label == veech.CASE_PAIR_EQUAL:
            assert d.index == 3


def test_pairing_gcds_invariant_under_multiplier():
    for p in all_valid_params(12):
        base = sorted(veech.pairing_gcds(p))
        for s in symmetry_group(p):
            q = CoverParams(p.N, tuple((s.k * x - 1) % p.N + 1 for x in p.a))
            assert sorted(veech.pairing_gcds(q)) == base
        for k in units(p.N):
            q = CoverParams(p.N, tuple((k * x - 1) % p.N + 1 for x in p.a))
            assert sorted(veech.pairing_gcds(q)) == base
