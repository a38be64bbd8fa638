"""Parameter-space searches over canonical surface classes."""

from __future__ import annotations

from dataclasses import dataclass

from . import report
from .cover_params import CoverParams, canonical_surface_form, validate
from .errors import NotConnected, SumNotDivisible
from .lyapunov import sum_closed
from .strata import DifferentialKind, differential_kind, genus

FILTERS = ("all", "degenerate-abelian", "degenerate-minus", "degenerate-plus")


@dataclass(frozen=True)
class SearchResult:
    n_max: int
    description: str
    hits: tuple[CoverParams, ...]  # canonical forms, ordered by (N, a)


def iter_valid_quadruples(n_max: int, n_min: int = 2):
    """Every valid quadruple with n_min <= N <= n_max, lexicographically."""
    for N in range(n_min, n_max + 1):
        for a1 in range(1, N + 1):
            for a2 in range(1, N + 1):
                for a3 in range(1, N + 1):
                    a4 = -(a1 + a2 + a3) % N or N
                    try:
                        yield validate(N, (a1, a2, a3, a4))
                    except (NotConnected, SumNotDivisible):
                        continue


def run_search(
    n_max: int,
    fltr: str,
    kind_filter: str | None = None,
    geff_min: int | None = None,
) -> SearchResult:
    """Classify all canonical surface classes up to degree ``n_max``.

    ``fltr`` selects maximally degenerate spectra: ``degenerate-abelian``
    keeps square-kind covers of genus >= 2 whose exponent sum is exactly 1,
    ``degenerate-minus`` keeps quadratic covers with sum_minus exactly 1 and
    effective genus at least ``geff_min`` (default 2, so that at least one
    free exponent vanishes), ``degenerate-plus`` keeps quadratic covers with
    sum_plus exactly 0, and ``all`` keeps everything.  ``kind_filter``
    restricts to ``"holomorphic"`` or ``"meromorphic"`` quadratic kinds.
    """
    if fltr not in FILTERS:
        raise ValueError(f"unknown filter {fltr!r}; expected one of {FILTERS}")
    if kind_filter not in (None, "holomorphic", "meromorphic"):
        raise ValueError(f"unknown kind filter {kind_filter!r}")
    minus_bound = 2 if geff_min is None else geff_min

    hits = []
    seen = set()
    for p in iter_valid_quadruples(n_max):
        canon = canonical_surface_form(p)
        if canon in seen:
            continue
        seen.add(canon)
        kind = differential_kind(canon)
        if kind_filter == "holomorphic" and kind is not DifferentialKind.QUADRATIC_HOLOMORPHIC:
            continue
        if kind_filter == "meromorphic" and kind is not DifferentialKind.QUADRATIC_MEROMORPHIC:
            continue
        if geff_min is not None:
            gd = genus(canon)
            if gd.g_eff is None or gd.g_eff < geff_min:
                continue
        if fltr == "all":
            hits.append(canon)
            continue
        sums = sum_closed(canon)
        if fltr == "degenerate-abelian":
            if sums.degenerate_abelian:
                hits.append(canon)
        elif fltr == "degenerate-plus":
            if sums.degenerate_plus:
                hits.append(canon)
        else:
            if kind.is_quadratic and sums.sum_minus == 1 and genus(canon).g_eff >= minus_bound:
                hits.append(canon)
    hits.sort()

    parts = [fltr]
    if kind_filter:
        parts.append(kind_filter)
    if geff_min is not None:
        parts.append(f"geff>={geff_min}")
    return SearchResult(n_max, " ".join(parts), tuple(hits))


def hit_lines(result: SearchResult) -> list[dict]:
    return [report.minimal_jsonable(p) for p in result.hits]
