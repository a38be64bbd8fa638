import pytest

from cyclocover import strata
from cyclocover.cover_params import validate
from cyclocover.strata import DifferentialKind

from helpers import all_valid_params


@pytest.mark.parametrize(
    "N, a, kind",
    [
        (6, (1, 1, 1, 3), DifferentialKind.ABELIAN_SQUARE),
        (4, (1, 3, 2, 2), DifferentialKind.QUADRATIC_HOLOMORPHIC),
        (3, (3, 1, 1, 1), DifferentialKind.QUADRATIC_MEROMORPHIC),
        (2, (1, 1, 1, 1), DifferentialKind.ABELIAN_SQUARE),
        (2, (2, 2, 1, 1), DifferentialKind.QUADRATIC_MEROMORPHIC),
    ],
)
def test_differential_kind(N, a, kind):
    assert strata.differential_kind(validate(N, a)) is kind


@pytest.mark.parametrize(
    "N, a, degrees, marked",
    [
        (6, (1, 1, 1, 3), (2, 2, 2), 3),
        (8, (4, 2, 1, 1), (6, 6, 2, 2), 4),
        (2, (2, 2, 1, 1), (-1, -1, -1, -1), 2),
        (4, (1, 3, 2, 2), (2, 2), 4),
        (4, (1, 1, 1, 1), (1, 1, 1, 1), 0),
        (5, (2, 1, 1, 1), (3, 3, 3, 3), 0),
        (3, (3, 1, 1, 1), (1, 1, 1, -1, -1, -1), 0),
        (6, (5, 3, 2, 2), (4, 1, 1, 1, 1), 3),
        (4, (4, 2, 1, 1), (2, 2, -1, -1, -1, -1), 2),
    ],
)
def test_singularity_pattern(N, a, degrees, marked):
    s = strata.singularity_pattern(validate(N, a))
    assert s.degrees == degrees
    assert s.marked_points == marked


@pytest.mark.parametrize(
    "N, a, g, g_eff",
    [
        (6, (1, 1, 1, 3), 4, None),
        (4, (1, 1, 1, 1), 3, None),
        (4, (3, 2, 2, 1), 2, 1),
        (5, (2, 1, 1, 1), 4, 5),
        (2, (2, 2, 1, 1), 0, 1),
        (2, (1, 1, 1, 1), 1, None),
        (3, (3, 1, 1, 1), 1, 3),
        (4, (4, 2, 1, 1), 1, 2),
        (8, (4, 2, 1, 1), 5, 4),
    ],
)
def test_genus(N, a, g, g_eff):
    gd = strata.genus(validate(N, a))
    assert gd.g == g
    assert gd.g_eff == g_eff
    if g_eff is None:
        assert gd.g_hat is None
    else:
        assert gd.g_hat == g + g_eff


def test_m5_double_cover_genus():
    gd = strata.genus(validate(5, (2, 1, 1, 1)))
    assert gd.g_hat == 9


def test_degree_sums_recover_genus():
    for p in all_valid_params(20):
        s = strata.singularity_pattern(p)
        gd = strata.genus(p)
        total = sum(s.degrees)
        if s.kind.is_abelian:
            assert total == 2 * gd.g - 2
        else:
            assert total == 4 * gd.g - 4
            r = sum(1 for d in s.degrees if d % 2 != 0)
            assert r % 2 == 0
            assert gd.g_eff == gd.g - 1 + r // 2


def test_abelian_kind_never_has_pole_exponent():
    for p in all_valid_params(20):
        if strata.differential_kind(p).is_abelian:
            assert all(x < p.N for x in p.a)
            assert all(d >= 1 for d in strata.singularity_pattern(p).degrees)


def test_degrees_bounded_below_and_pole_criterion():
    for p in all_valid_params(16):
        s = strata.singularity_pattern(p)
        assert all(d >= -1 for d in s.degrees)
        assert (-1 in s.degrees) == (p.N in p.a)


def test_render_stratum():
    assert strata.singularity_pattern(validate(6, (1, 1, 1, 3))).render() == "H(2,2,2)+3pts"
    assert strata.singularity_pattern(validate(8, (4, 2, 1, 1))).render() == "Q(6,6,2,2)+4pts"
    assert strata.singularity_pattern(validate(2, (2, 2, 1, 1))).render() == "Q(-1^4)+2pts"
    assert strata.singularity_pattern(validate(5, (2, 1, 1, 1))).render() == "Q(3^4)"
    assert strata.singularity_pattern(validate(4, (1, 1, 1, 1))).render() == "H(1^4)"
    assert (
        strata.singularity_pattern(validate(6, (1, 1, 1, 3))).render(include_marked=True)
        == "H(2,2,2,0,0,0)"
    )
