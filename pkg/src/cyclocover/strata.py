"""Differential kind, singularity pattern, genus and effective genus of a cover.

The flat metric pulled back from the two-square pillow is the square of a
holomorphic 1-form exactly when N is even and all four exponents are odd;
otherwise it comes from a quadratic differential, which is meromorphic (has
simple poles) iff some exponent equals N.

Over branch point i the cover has gcd(N, a_i) ramification points.  Each
carries a cone angle of (N / gcd(N, a_i)) * pi, i.e. a zero of degree
N/(2 gcd) - 1 of the 1-form in the square case, and of degree N/gcd - 2 of
the quadratic differential otherwise (-1 meaning a simple pole).  Points of
degree 0 are regular for the metric and are tracked separately as marked
points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .cover_params import CoverParams


class DifferentialKind(enum.Enum):
    ABELIAN_SQUARE = "abelian_square"
    QUADRATIC_HOLOMORPHIC = "quadratic_holomorphic"
    QUADRATIC_MEROMORPHIC = "quadratic_meromorphic"

    @property
    def is_abelian(self) -> bool:
        return self is DifferentialKind.ABELIAN_SQUARE

    @property
    def is_quadratic(self) -> bool:
        return not self.is_abelian


@dataclass(frozen=True)
class Stratum:
    kind: DifferentialKind
    degrees: tuple[int, ...]  # sorted descending, marked points excluded
    marked_points: int

    def render(self, include_marked: bool = False) -> str:
        return render_stratum(self, include_marked=include_marked)


@dataclass(frozen=True)
class GenusData:
    g: int
    g_hat: int | None = None  # genus of the orientation double cover (quadratic only)
    g_eff: int | None = None  # g_hat - g


def differential_kind(p: CoverParams) -> DifferentialKind:
    if p.N % 2 == 0 and all(x % 2 == 1 for x in p.a):
        return DifferentialKind.ABELIAN_SQUARE
    if any(x == p.N for x in p.a):
        return DifferentialKind.QUADRATIC_MEROMORPHIC
    return DifferentialKind.QUADRATIC_HOLOMORPHIC


def singularity_pattern(p: CoverParams) -> Stratum:
    kind = differential_kind(p)
    degrees = []
    marked = 0
    for x in p.a:
        g = gcd(p.N, x)
        if kind.is_abelian:
            d, r = divmod(p.N, 2 * g)
            assert r == 0, "abelian kind requires even N/gcd"
            d -= 1
        else:
            d = p.N // g - 2
        if d == 0:
            marked += g
        else:
            degrees.extend([d] * g)
    degrees.sort(reverse=True)
    return Stratum(kind, tuple(degrees), marked)


def genus(p: CoverParams) -> GenusData:
    """Genus from Riemann-Hurwitz; for quadratic kinds also the double-cover data.

    The orientation double cover is branched exactly over the odd-degree
    singularities, so with r of them (r is always even) its genus is
    2g - 1 + r/2.
    """
    twice = 2 * (p.N + 1) - sum(gcd(x, p.N) for x in p.a)
    assert twice % 2 == 0, f"non-integral genus for {p}"
    g = twice // 2
    kind = differential_kind(p)
    if kind.is_abelian:
        return GenusData(g)
    stratum = singularity_pattern(p)
    r = sum(1 for d in stratum.degrees if d % 2 != 0)
    assert r % 2 == 0, f"odd number of odd-degree singularities for {p}"
    g_hat = 2 * g - 1 + r // 2
    return GenusData(g, g_hat, g_hat - g)


def render_stratum(stratum: Stratum, include_marked: bool = False) -> str:
    """Strings like ``H(2,2,2)+3pts``, ``Q(6,6,2,2)+4pts``, ``Q(-1^4)``.

    Runs of four or more equal degrees use exponent shorthand.  With
    ``include_marked`` the degree-0 points join the degree list instead of
    the ``+kpts`` suffix.
    """
    degrees = list(stratum.degrees)
    marked = stratum.marked_points
    if include_marked:
        degrees += [0] * marked
        degrees.sort(reverse=True)
        marked = 0
    parts = []
    i = 0
    while i < len(degrees):
        j = i
        while j < len(degrees) and degrees[j] == degrees[i]:
            j += 1
        run = j - i
        if run >= 4:
            parts.append(f"{degrees[i]}^{run}")
        else:
            parts.extend([str(degrees[i])] * run)
        i = j
    letter = "H" if stratum.kind.is_abelian else "Q"
    s = f"{letter}({','.join(parts)})"
    if marked:
        s += f"+{marked}pt" if marked == 1 else f"+{marked}pts"
    return s
