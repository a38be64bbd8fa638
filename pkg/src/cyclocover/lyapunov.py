"""Exact sums of nonnegative Lyapunov exponents and degeneracy classification.

Two independent evaluations are provided.  ``sum_closed`` uses the explicit
gcd expressions specialized to cyclic covers: with G_i = gcd(N, a_i) and the
pairing term

    T = (gcd^2(N, a1+a2) + gcd^2(N, a1+a3) + gcd^2(N, a1+a4)) / (6N),

the sum 1 + lam_2 + ... + lam_g for the square kind equals
N/6 - sum G_i^2/(6N) + T; for quadratic kinds the same expression gives the
sum of the lam+ exponents, while the lam- sum replaces the middle term by
+ G_i^2/(12N) over branches with N/G_i odd and - G_i^2/(6N) over branches
with N/G_i even.

``sum_general`` instead evaluates the general square-tiled sum formula from
first principles: a stratum constant from the singularity degrees, for the
lam- bundle a correction summing 1/(4(d+2)) over odd degrees d, plus the
average over the orbit of the total height/width ratio of the horizontal
cylinder decompositions.  Agreement of the two routes on every cover is the
package's central cross-check.

All arithmetic is exact rational; degeneracy decisions are equality tests
with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import origami, veech
from .cover_params import CoverParams
from .strata import DifferentialKind, differential_kind, genus, singularity_pattern


@lru_cache(maxsize=4096)
def _stratum_terms(is_abelian: bool, degrees: tuple[int, ...]) -> tuple[Fraction, Fraction]:
    if is_abelian:
        kappa = sum((Fraction(m * (m + 2), m + 1) for m in degrees), Fraction(0)) / 12
        odd = Fraction(0)
    else:
        kappa = sum((Fraction(d * (d + 4), d + 2) for d in degrees), Fraction(0)) / 24
        odd = sum((Fraction(1, d + 2) for d in degrees if d % 2 != 0), Fraction(0)) / 4
    return kappa, odd


@dataclass(frozen=True)
class LyapunovReport:
    kind: DifferentialKind
    g: int
    g_eff: int | None
    sum_abelian: Fraction | None  # 1 + lam_2 + ... + lam_g (square kind)
    sum_plus: Fraction | None  # lam+_1 + ... + lam+_g (quadratic kinds)
    sum_minus: Fraction | None  # 1 + lam-_2 + ... + lam-_geff (quadratic kinds)
    degenerate_abelian: bool | None
    degenerate_plus: bool | None
    degenerate_minus: bool | None
    trivially_degenerate: bool


@dataclass(frozen=True)
class GeneralSumTerms:
    """The three ingredients of the general sum formula.

    The odd-degree and cylinder terms are nonnegative; the stratum constant
    goes negative when simple poles dominate (each contributes -1/8), though
    the assembled sums never do.
    """

    stratum_term: Fraction
    odd_degree_term: Fraction
    orbit_cylinder_term: Fraction


@dataclass(frozen=True)
class DegeneracyFlags:
    kind: DifferentialKind
    degenerate_abelian: bool | None
    degenerate_plus: bool | None
    degenerate_minus: bool | None
    trivially_degenerate: bool


def _report(p: CoverParams, sums: dict[str, Fraction]) -> LyapunovReport:
    kind = differential_kind(p)
    gd = genus(p)
    if kind.is_abelian:
        s = sums["abelian"]
        assert s >= 1
        return LyapunovReport(
            kind,
            gd.g,
            None,
            s,
            None,
            None,
            degenerate_abelian=gd.g >= 2 and s == 1,
            degenerate_plus=None,
            degenerate_minus=None,
            trivially_degenerate=gd.g == 1,
        )
    plus, minus = sums["plus"], sums["minus"]
    assert plus >= 0 and minus >= 1
    return LyapunovReport(
        kind,
        gd.g,
        gd.g_eff,
        None,
        plus,
        minus,
        degenerate_abelian=None,
        degenerate_plus=plus == 0,
        degenerate_minus=gd.g_eff >= 2 and minus == 1,
        trivially_degenerate=gd.g_eff == 1,
    )


def sum_closed(p: CoverParams) -> LyapunovReport:
    """Evaluate the cyclic-cover gcd expressions (single exact division at the end)."""
    N = p.N
    a = p.a
    pairing2 = 2 * (
        gcd(N, a[0] + a[1]) ** 2 + gcd(N, a[0] + a[2]) ** 2 + gcd(N, a[0] + a[3]) ** 2
    )
    gcds = [gcd(N, x) for x in a]
    plus_numerator = 2 * N * N - 2 * sum(g * g for g in gcds) + pairing2
    if differential_kind(p).is_abelian:
        return _report(p, {"abelian": Fraction(plus_numerator, 12 * N)})
    minus_numerator = 2 * N * N + pairing2
    for g in gcds:
        minus_numerator += g * g if (N // g) % 2 == 1 else -2 * g * g
    return _report(
        p,
        {"plus": Fraction(plus_numerator, 12 * N), "minus": Fraction(minus_numerator, 12 * N)},
    )


def general_sum_terms(p: CoverParams, orbit=None) -> GeneralSumTerms:
    """Stratum constant, odd-degree correction, and orbit cylinder average.

    Marked points contribute zero to the stratum constant and are excluded;
    the orbit average runs the horizontal cylinder decomposition on every
    surface in the orbit of ``p`` (precomputed orbits may be passed in).
    """
    stratum = singularity_pattern(p)
    kappa, odd = _stratum_terms(stratum.kind.is_abelian, stratum.degrees)
    if orbit is None:
        orbit = veech.orbit(p)
    total = Fraction(0)
    for q in orbit:
        dec = origami.cylinder_decomposition(origami.build(q), "horizontal")
        # all cylinders of one surface share their width
        total += Fraction(sum(h for _, h in dec.cylinders), dec.cylinders[0][0])
    return GeneralSumTerms(kappa, odd, total / len(orbit))


def sum_general(p: CoverParams, orbit=None) -> LyapunovReport:
    """Evaluate the general sum formula from stratum and orbit-cylinder data."""
    terms = general_sum_terms(p, orbit)
    if differential_kind(p).is_abelian:
        return _report(p, {"abelian": terms.stratum_term + terms.orbit_cylinder_term})
    return _report(
        p,
        {
            "plus": terms.stratum_term + terms.orbit_cylinder_term,
            "minus": terms.stratum_term + terms.odd_degree_term + terms.orbit_cylinder_term,
        },
    )


def classify_degeneracy(p: CoverParams) -> DegeneracyFlags:
    """Degeneracy flags from the closed-form sums.

    A spectrum is maximally degenerate when every exponent that is not forced
    to equal 1 vanishes: sum_abelian = 1 with g >= 2, sum_minus = 1 with
    g_eff >= 2, or sum_plus = 0.  Covers with g = 1 (square kind) or
    g_eff = 1 (quadratic kinds) have no free exponents on that bundle and are
    reported as trivially degenerate instead.
    """
    r = sum_closed(p)
    return DegeneracyFlags(
        r.kind, r.degenerate_abelian, r.degenerate_plus, r.degenerate_minus, r.trivially_degenerate
    )
