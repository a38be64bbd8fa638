"""Aggregate report for a single cover, with a stable JSON representation.

Rationals serialize as strings like ``"5/6"``, with integers normalized to
``"1"``; spin parity serializes as ``"even"``, ``"odd"`` or null.  Reports
round-trip exactly through :func:`to_jsonable` / :func:`from_jsonable`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lyapunov, origami, perms, spin, strata, veech
from .cover_params import CoverParams


@dataclass(frozen=True)
class CoverReport:
    n: int
    a: tuple[int, ...]
    kind: strata.DifferentialKind
    stratum: str
    degrees: tuple[int, ...]
    marked_points: int
    genus: int
    g_hat: int | None
    g_eff: int | None
    pi_h: str
    pi_v: str
    pi_h_array: tuple[int, ...]
    pi_v_array: tuple[int, ...]
    cylinders_horizontal: tuple[tuple[int, int], ...]
    cylinders_vertical: tuple[tuple[int, int], ...]
    veech_index: int
    veech_case: str
    s3_image_order: int
    orbit: tuple[tuple[int, ...], ...]
    sum_abelian: Fraction | None
    sum_plus: Fraction | None
    sum_minus: Fraction | None
    degenerate_abelian: bool | None
    degenerate_plus: bool | None
    degenerate_minus: bool | None
    trivially_degenerate: bool
    spin: spin.SpinParity


def build_report(p: CoverParams, include_marked: bool = False) -> CoverReport:
    stratum = strata.singularity_pattern(p)
    gd = strata.genus(p)
    o = origami.build(p)
    origami.verify(o, p)
    horizontal = origami.cylinder_decomposition(o, "horizontal")
    vertical = origami.cylinder_decomposition(o, "vertical")
    descriptor = veech.veech_index(p)
    sums = lyapunov.sum_closed(p)
    return CoverReport(
        n=p.N,
        a=p.a,
        kind=stratum.kind,
        stratum=stratum.render(include_marked=include_marked),
        degrees=stratum.degrees,
        marked_points=stratum.marked_points,
        genus=gd.g,
        g_hat=gd.g_hat,
        g_eff=gd.g_eff,
        pi_h=perms.cycle_string(o.pi_h),
        pi_v=perms.cycle_string(o.pi_v),
        pi_h_array=o.pi_h,
        pi_v_array=o.pi_v,
        cylinders_horizontal=horizontal.cylinders,
        cylinders_vertical=vertical.cylinders,
        veech_index=descriptor.index,
        veech_case=descriptor.case_label,
        s3_image_order=descriptor.s3_image_order,
        orbit=tuple(q.a for q in descriptor.orbit),
        sum_abelian=sums.sum_abelian,
        sum_plus=sums.sum_plus,
        sum_minus=sums.sum_minus,
        degenerate_abelian=sums.degenerate_abelian,
        degenerate_plus=sums.degenerate_plus,
        degenerate_minus=sums.degenerate_minus,
        trivially_degenerate=sums.trivially_degenerate,
        spin=spin.spin_parity(p),
    )


def _fraction_out(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _fraction_in(s: str | None) -> Fraction | None:
    return None if s is None else Fraction(s)


def to_jsonable(r: CoverReport) -> dict:
    return {
        "n": r.n,
        "a": list(r.a),
        "kind": r.kind.value,
        "stratum": r.stratum,
        "degrees": list(r.degrees),
        "marked_points": r.marked_points,
        "genus": r.genus,
        "g_hat": r.g_hat,
        "g_eff": r.g_eff,
        "pi_h": r.pi_h,
        "pi_v": r.pi_v,
        "pi_h_array": list(r.pi_h_array),
        "pi_v_array": list(r.pi_v_array),
        "cylinders_horizontal": [list(c) for c in r.cylinders_horizontal],
        "cylinders_vertical": [list(c) for c in r.cylinders_vertical],
        "veech_index": r.veech_index,
        "veech_case": r.veech_case,
        "s3_image_order": r.s3_image_order,
        "orbit": [list(a) for a in r.orbit],
        "sum_abelian": _fraction_out(r.sum_abelian),
        "sum_plus": _fraction_out(r.sum_plus),
        "sum_minus": _fraction_out(r.sum_minus),
        "degenerate_abelian": r.degenerate_abelian,
        "degenerate_plus": r.degenerate_plus,
        "degenerate_minus": r.degenerate_minus,
        "trivially_degenerate": r.trivially_degenerate,
        "spin": None if r.spin is spin.SpinParity.UNDEFINED else r.spin.value,
    }


def from_jsonable(d: dict) -> CoverReport:
    return CoverReport(
        n=d["n"],
        a=tuple(d["a"]),
        kind=strata.DifferentialKind(d["kind"]),
        stratum=d["stratum"],
        degrees=tuple(d["degrees"]),
        marked_points=d["marked_points"],
        genus=d["genus"],
        g_hat=d["g_hat"],
        g_eff=d["g_eff"],
        pi_h=d["pi_h"],
        pi_v=d["pi_v"],
        pi_h_array=tuple(d["pi_h_array"]),
        pi_v_array=tuple(d["pi_v_array"]),
        cylinders_horizontal=tuple(tuple(c) for c in d["cylinders_horizontal"]),
        cylinders_vertical=tuple(tuple(c) for c in d["cylinders_vertical"]),
        veech_index=d["veech_index"],
        veech_case=d["veech_case"],
        s3_image_order=d["s3_image_order"],
        orbit=tuple(tuple(a) for a in d["orbit"]),
        sum_abelian=_fraction_in(d["sum_abelian"]),
        sum_plus=_fraction_in(d["sum_plus"]),
        sum_minus=_fraction_in(d["sum_minus"]),
        degenerate_abelian=d["degenerate_abelian"],
        degenerate_plus=d["degenerate_plus"],
        degenerate_minus=d["degenerate_minus"],
        trivially_degenerate=d["trivially_degenerate"],
        spin=spin.SpinParity(d["spin"]) if d["spin"] else spin.SpinParity.UNDEFINED,
    )


def minimal_jsonable(p: CoverParams) -> dict:
    """The per-hit search record: stratum, genus data, sums and flags."""
    stratum = strata.singularity_pattern(p)
    gd = strata.genus(p)
    sums = lyapunov.sum_closed(p)
    return {
        "n": p.N,
        "a": list(p.a),
        "kind": stratum.kind.value,
        "stratum": stratum.render(),
        "genus": gd.g,
        "g_eff": gd.g_eff,
        "sum_abelian": _fraction_out(sums.sum_abelian),
        "sum_plus": _fraction_out(sums.sum_plus),
        "sum_minus": _fraction_out(sums.sum_minus),
        "degenerate_abelian": sums.degenerate_abelian,
        "degenerate_plus": sums.degenerate_plus,
        "degenerate_minus": sums.degenerate_minus,
        "trivially_degenerate": sums.trivially_degenerate,
    }
