"""Cross-validation sweep: run every consistency check on every valid quadruple.

For each cover up to the requested degree bound this performs, in order: the
full origami verification against its topological oracles; the cylinder
width/height and area identities in both directions; exact agreement of the
closed-form exponent sums with the general formula evaluated from orbit
cylinder data; orbit size against the computed Veech index; agreement of the
exponent-pattern classification with the group computation; and constancy of
the spin parity along the orbit and under duality (where defined).

Output is byte-deterministic for a fixed bound, independent of the worker
count: tasks are enumerated in a fixed order and results are merged in task
order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from . import lyapunov, origami, spin, veech
from .cover_params import CoverParams, dual, symmetry_group
from .errors import VerificationFailure
from .search import iter_valid_quadruples
from .spin import SpinParity

CHECK_NAMES = (
    "origami_verify",
    "cylinder_identities",
    "sum_closed_vs_general",
    "orbit_matches_index",
    "symmetry_case_agreement",
    "spin_orbit_constant",
)

PASS, SKIP = None, "skipped"

_spin_memo: dict[CoverParams, SpinParity] = {}


def _memoized_spin(p: CoverParams) -> SpinParity:
    value = _spin_memo.get(p)
    if value is None:
        value = spin.spin_parity(p)
        _spin_memo[p] = value
    return value


def check_quadruple(p: CoverParams) -> list[tuple[str, str | None]]:
    """Run all checks on one cover; returns (check name, None | 'skipped' | failure)."""
    results = []

    o = None
    try:
        o = origami.build(p)
        origami.verify(o, p)
        results.append(("origami_verify", PASS))
    except (VerificationFailure, AssertionError) as e:
        results.append(("origami_verify", str(e)))

    try:
        failure = PASS
        for direction, pair in (("horizontal", p.a[0] + p.a[3]), ("vertical", p.a[0] + p.a[1])):
            g = gcd(p.N, pair)
            dec = origami.cylinder_decomposition(o, direction)
            if dec.total_area != 2 * p.N:
                failure = f"{direction} area {dec.total_area} != {2 * p.N}"
            elif any(w != 2 * p.N // g for w, _ in dec.cylinders):
                failure = f"{direction} widths {dec.cylinders} != {2 * p.N // g}"
            elif sum(h for _, h in dec.cylinders) != g:
                failure = f"{direction} total height != {g}"
        results.append(("cylinder_identities", failure))
    except Exception as e:  # keep sweeping on unexpected errors
        results.append(("cylinder_identities", f"error: {e!r}"))

    orbit = None
    try:
        orbit = veech.orbit(p)
        closed = lyapunov.sum_closed(p)
        general = lyapunov.sum_general(p, orbit)
        results.append(
            ("sum_closed_vs_general", PASS if closed == general else f"{closed} != {general}")
        )
    except Exception as e:
        results.append(("sum_closed_vs_general", f"error: {e!r}"))

    index = None
    try:
        symmetries = symmetry_group(p)
        image = {veech.project_to_pairings(s.pi) for s in symmetries}
        index = 6 // len(image)
        ok = index in (1, 2, 3, 6) and orbit is not None and len(orbit) == index
        results.append(("orbit_matches_index", PASS if ok else f"orbit size != index {index}"))
        case, predicted = veech._case_and_predicted_index(p, symmetries)
        results.append(
            (
                "symmetry_case_agreement",
                PASS if predicted == index else f"case {case} predicts {predicted}, computed {index}",
            )
        )
    except Exception as e:
        results.append(("orbit_matches_index", f"error: {e!r}"))
        results.append(("symmetry_case_agreement", f"error: {e!r}"))

    try:
        parity = _memoized_spin(p)
        if parity is SpinParity.UNDEFINED:
            results.append(("spin_orbit_constant", SKIP))
        else:
            ok = _memoized_spin(dual(p)) is parity and all(
                _memoized_spin(q) is parity for q in (orbit or veech.orbit(p))
            )
            results.append(("spin_orbit_constant", PASS if ok else "parity varies on orbit"))
    except Exception as e:
        results.append(("spin_orbit_constant", f"error: {e!r}"))

    return results


def _worker(task):
    N, a = task
    return [(name, status) for name, status in check_quadruple(CoverParams(N, a))]


@dataclass(frozen=True)
class CheckSummary:
    n_max: int
    total: int
    passes: dict[str, int]
    fails: dict[str, int]
    skips: dict[str, int]
    failures: tuple[tuple[str, str, str], ...]  # (cover, check, message)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_checks(n_max: int, jobs: int = 1) -> CheckSummary:
    tasks = [(p.N, p.a) for p in iter_valid_quadruples(n_max)]
    passes = {name: 0 for name in CHECK_NAMES}
    fails = {name: 0 for name in CHECK_NAMES}
    skips = {name: 0 for name in CHECK_NAMES}
    failures = []

    if jobs > 1:
        executor = ProcessPoolExecutor(max_workers=jobs)
        chunk = max(16, len(tasks) // (jobs * 16) or 1)
        stream = executor.map(_worker, tasks, chunksize=chunk)
    else:
        executor = None
        stream = map(_worker, tasks)
    try:
        for task, results in zip(tasks, stream):
            for name, status in results:
                if status is PASS:
                    passes[name] += 1
                elif status == SKIP:
                    skips[name] += 1
                else:
                    fails[name] += 1
                    failures.append((f"M_{task[0]}{task[1]}", name, status))
    finally:
        if executor is not None:
            executor.shutdown()

    return CheckSummary(n_max, len(tasks), passes, fails, skips, tuple(failures))


def render_summary(summary: CheckSummary) -> str:
    lines = [f"checked {summary.total} quadruples for 2 <= N <= {summary.n_max}"]
    for name in CHECK_NAMES:
        line = f"{name:<24} {summary.passes[name]} pass, {summary.fails[name]} fail"
        if summary.skips[name]:
            line += f", {summary.skips[name]} skipped"
        lines.append(line)
    lines.append("RESULT: OK" if summary.ok else f"RESULT: FAIL ({len(summary.failures)} failures)")
    return "\n".join(lines) + "\n"
