"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every comparison is exact (integer or rational equality; tolerance zero).
The two exhaustive N <= 30 sweeps take a few minutes each on a single core;
run with ``pytest tests/test_acceptance.py -v -s`` to watch the lines appear.
"""

import itertools
import json
import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction

import pytest

from cyclocover import checks, lyapunov, origami, perms, report, search, spin, strata, veech
from cyclocover.cover_params import canonical_surface_form, validate
from cyclocover.search import iter_valid_quadruples
from cyclocover.spin import SpinParity

N_BOUND = 30
SEARCH_BOUND = 20
CHECK_JOBS = 8


@contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"criterion {num:02d} ({title}): FAIL")
        raise
    print(f"criterion {num:02d} ({title}): PASS")


@pytest.fixture(scope="session")
def sweep():
    summary = checks.run_checks(N_BOUND, jobs=CHECK_JOBS)
    return summary, checks.render_summary(summary)


def _require_clean(summary, name):
    assert summary.fails[name] == 0, summary.failures[:3]


def test_criterion_01_permutation_fidelity():
    with criterion(1, "permutation fidelity"):
        o6 = origami.build(validate(6, (1, 1, 1, 3)))
        printed_h = perms.parse_cycle_string("(0,1,8,9,4,5)(11,10,3,2,7,6)", 12)
        printed_v = perms.parse_cycle_string("(0,7,4,11,8,3)(1,6,9,2,5,10)", 12)
        assert list(o6.pi_h) == printed_h
        assert list(o6.pi_v) == printed_v
        assert perms.cycle_string(o6.pi_h) == perms.cycle_string(printed_h)
        assert perms.cycle_string(o6.pi_v) == "(0,7,4,11,8,3)(1,6,9,2,5,10)"
        o4 = origami.build(validate(4, (1, 3, 2, 2)))
        assert perms.cycle_string(o4.pi_h) == "(0,1,6,7,4,5,2,3)"
        assert perms.cycle_string(o4.pi_v) == "(0,5)(1,4)(2,7)(3,6)"


def test_criterion_02_strata_and_genus():
    with criterion(2, "strata and genus"):
        cases = [
            (6, (1, 1, 1, 3), True, (2, 2, 2), 3, 4, None),
            (4, (1, 1, 1, 1), True, (1, 1, 1, 1), 0, 3, None),
            (4, (1, 3, 2, 2), False, (2, 2), 4, 2, 1),
            (8, (4, 2, 1, 1), False, (6, 6, 2, 2), 4, 5, 4),
            (2, (2, 2, 1, 1), False, (-1, -1, -1, -1), 2, 0, 1),
            (4, (3, 2, 2, 1), False, (2, 2), 4, 2, 1),
        ]
        for N, a, is_abelian, degrees, marked, g, g_eff in cases:
            p = validate(N, a)
            s = strata.singularity_pattern(p)
            gd = strata.genus(p)
            assert s.kind.is_abelian == is_abelian
            assert s.degrees == degrees and s.marked_points == marked
            assert gd.g == g and gd.g_eff == g_eff
        assert strata.singularity_pattern(validate(6, (1, 1, 1, 3))).render() == "H(2,2,2)+3pts"
        assert strata.singularity_pattern(validate(8, (4, 2, 1, 1))).render() == "Q(6,6,2,2)+4pts"


def test_criterion_03_topological_oracle(sweep):
    summary, _ = sweep
    with criterion(3, "topological oracle, exhaustive N<=30"):
        _require_clean(summary, "origami_verify")
        assert summary.passes["origami_verify"] == summary.total
        assert summary.total == sum(1 for _ in iter_valid_quadruples(N_BOUND))


def test_criterion_04_cylinder_identities(sweep):
    summary, _ = sweep
    with criterion(4, "cylinder identities, exhaustive N<=30"):
        _require_clean(summary, "cylinder_identities")
        assert summary.passes["cylinder_identities"] == summary.total


def test_criterion_05_veech_indices(sweep):
    summary, _ = sweep
    with criterion(5, "Veech indices"):
        expected = {
            (4, (1, 1, 1, 1)): 1,
            (10, (1, 1, 3, 5)): 3,
            (8, (1, 3, 5, 7)): 6,
            (10, (1, 3, 9, 7)): 3,
            (40, (1, 9, 5, 25)): 3,
            (14, (1, 9, 11, 7)): 2,
        }
        for (N, a), index in expected.items():
            d = veech.veech_index(validate(N, a))
            assert d.index == index
            assert len(d.orbit) == index
        _require_clean(summary, "orbit_matches_index")
        _require_clean(summary, "symmetry_case_agreement")
        assert summary.passes["orbit_matches_index"] == summary.total


def test_criterion_06_sum_formula_cross_validation(sweep):
    summary, _ = sweep
    with criterion(6, "closed form vs general formula, exhaustive N<=30"):
        _require_clean(summary, "sum_closed_vs_general")
        assert summary.passes["sum_closed_vs_general"] == summary.total


def test_criterion_07_degenerate_abelian_classification():
    with criterion(7, "degenerate square-kind classification"):
        result = search.run_search(SEARCH_BOUND, "degenerate-abelian")
        assert [(p.N, p.a) for p in result.hits] == [(4, (1, 1, 1, 1)), (6, (1, 1, 1, 3))]
        for p in result.hits:
            r = lyapunov.sum_closed(p)
            assert r.sum_abelian == Fraction(1) and r.g >= 2


def test_criterion_08_degenerate_minus_holomorphic():
    with criterion(8, "degenerate anti-invariant spectrum, holomorphic"):
        result = search.run_search(SEARCH_BOUND, "degenerate-minus", "holomorphic", 2)
        expected = {
            canonical_surface_form(validate(5, (2, 1, 1, 1))),
            canonical_surface_form(validate(6, (5, 3, 2, 2))),
            canonical_surface_form(validate(8, (4, 2, 1, 1))),
            canonical_surface_form(validate(8, (7, 4, 3, 2))),
        }
        assert set(result.hits) == expected and len(result.hits) == 4
        for p in result.hits:
            assert lyapunov.sum_closed(p).sum_minus == Fraction(1)


def test_criterion_09_plus_vanishing_iff_pole():
    with criterion(9, "invariant spectrum vanishes iff simple poles, N<=30"):
        for p in iter_valid_quadruples(N_BOUND):
            if strata.differential_kind(p).is_abelian:
                continue
            r = lyapunov.sum_closed(p)
            if p.N in p.a:
                assert r.sum_plus == 0
            else:
                assert r.sum_plus > 0


def test_criterion_10_meromorphic_special_list():
    with criterion(10, "meromorphic special list"):
        result = search.run_search(SEARCH_BOUND, "degenerate-minus", "meromorphic", 1)
        expected = {
            canonical_surface_form(validate(2, (2, 2, 1, 1))),
            canonical_surface_form(validate(3, (3, 1, 1, 1))),
            canonical_surface_form(validate(4, (4, 2, 1, 1))),
        }
        assert set(result.hits) == expected and len(result.hits) == 3
        trivial = canonical_surface_form(validate(2, (2, 2, 1, 1)))
        for p in result.hits:
            r = lyapunov.sum_closed(p)
            assert r.sum_minus == Fraction(1)
            assert r.trivially_degenerate == (p == trivial)


def test_criterion_11_spin_parity(sweep):
    summary, _ = sweep
    with criterion(11, "spin parity"):
        assert spin.spin_parity(validate(6, (1, 1, 1, 3))) is SpinParity.EVEN
        assert spin.spin_parity(validate(4, (1, 1, 1, 1))) is SpinParity.UNDEFINED
        assert spin.spin_parity(validate(2, (1, 1, 1, 1))) is SpinParity.ODD
        # independent oracle: the quadratic-form law on the full basis, and
        # stability under re-running with permuted spanning trees
        for N, a in ((2, (1, 1, 1, 1)), (6, (1, 1, 1, 3))):
            p = validate(N, a)
            analysis = spin.analyze(origami.build(p))
            basis = [v for pair in analysis.symplectic_pairs for v in pair]
            for x, y in itertools.combinations(basis, 2):
                assert analysis.q_of(x ^ y) == (
                    analysis.q_of(x) + analysis.q_of(y) + analysis.inner(x, y)
                ) % 2
            assert len({spin.spin_parity(p, tree_seed=s) for s in range(4)}) == 1
        _require_clean(summary, "spin_orbit_constant")
        assert summary.skips["spin_orbit_constant"] + summary.passes["spin_orbit_constant"] == summary.total
        assert summary.passes["spin_orbit_constant"] > 0


def test_criterion_12_determinism(sweep):
    summary_a, rendered_a = sweep
    with criterion(12, "byte determinism and JSON round-trip"):
        summary_b = checks.run_checks(N_BOUND, jobs=CHECK_JOBS)
        rendered_b = checks.render_summary(summary_b)
        assert summary_a.ok and summary_b.ok
        assert rendered_a == rendered_b

        outputs = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "cyclocover.cli", "check", "12", "--jobs", str(CHECK_JOBS)],
                capture_output=True,
            )
            assert proc.returncode == 0
            outputs.append(proc.stdout)
        assert outputs[0] == outputs[1]

        for N, a in ((6, (1, 1, 1, 3)), (4, (1, 3, 2, 2)), (2, (2, 2, 1, 1))):
            r = report.build_report(validate(N, a))
            doc = json.dumps(report.to_jsonable(r), sort_keys=True, indent=2)
            assert report.from_jsonable(json.loads(doc)) == r
