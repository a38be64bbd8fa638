"""Validated parameter quadruples of cyclic covers and their arithmetic symmetries.

A cover is described by a degree ``N > 1`` and four branching exponents
``a = (a1, a2, a3, a4)`` with each ``a_i`` in ``(0, N]``, ``gcd(N, a1, ..., a4) = 1``
(connectedness) and ``a1 + a2 + a3 + a4 = 0 mod N`` (no branching at infinity).
Exponents are always stored reduced into the representative range ``(0, N]`` so
that ``a_i = N`` is allowed; it marks simple poles of the induced quadratic
differential.

Two covers with the same degree are isomorphic over the labeled base sphere
iff one exponent tuple is a unit multiple of the other mod N.  As unmarked
flat surfaces there is an extra freedom: the four branch labels may also be
permuted by the Klein four-group of pillow symmetries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DegreeMismatch, DegreeTooSmall, NotConnected, SumNotDivisible

# Pillow symmetries: the Klein four-group inside S4, acting on branch labels.
KLEIN_GROUP = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

# Coset representatives of the Klein group in S4, all fixing label 1.
KLEIN_COSET_REPS = (
    (0, 1, 2, 3),
    (0, 1, 3, 2),
    (0, 2, 1, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
    (0, 3, 2, 1),
)


@dataclass(frozen=True, order=True)
class CoverParams:
    """A degree ``N`` and exponent 4-tuple ``a``, assumed reduced into (0, N].

    Instances are normally produced by :func:`validate`, which enforces the
    invariants; direct construction performs no checks.
    """

    N: int
    a: tuple[int, int, int, int]

    def __str__(self):
        return f"M_{self.N}({','.join(map(str, self.a))})"


@dataclass(frozen=True, order=True)
class Symmetry:
    """A unit ``k`` mod N and a label permutation ``pi`` with ``k*a[i] = a[pi[i]] mod N``."""

    k: int
    pi: tuple[int, int, int, int]


def _reduce(x: int, N: int) -> int:
    """Reduce into the representative range (0, N]."""
    r = x % N
    return r if r else N


def validate(N: int, raw) -> CoverParams:
    """Reduce ``raw`` into (0, N] and check the three cover conditions."""
    if N <= 1:
        raise DegreeTooSmall(f"cover degree must be > 1, got N = {N}")
    a = tuple(_reduce(int(x), N) for x in raw)
    if len(a) != 4:
        raise ValueError(f"expected 4 exponents, got {len(a)}")
    g = gcd(N, *a)
    if g != 1:
        raise NotConnected(f"gcd(N, a1..a4) = {g} != 1: the cover is disconnected")
    s = sum(a)
    if s % N != 0:
        raise SumNotDivisible(f"a1+a2+a3+a4 = {s} is not divisible by N = {N}")
    return CoverParams(N, a)


def dual(p: CoverParams) -> CoverParams:
    """The cover with complementary exponents (N - a1, ..., N - a4)."""
    return CoverParams(p.N, tuple(_reduce(p.N - x, p.N) for x in p.a))


@lru_cache(maxsize=None)
def units(N: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, N) if gcd(k, N) == 1)


def _mul(k: int, a, N: int):
    # exponents are in (0, N] and k >= 1, so (k*x - 1) % N + 1 reduces correctly
    return ((k * a[0] - 1) % N + 1, (k * a[1] - 1) % N + 1, (k * a[2] - 1) % N + 1, (k * a[3] - 1) % N + 1)


def covers_isomorphic(p: CoverParams, q: CoverParams) -> bool:
    """Isomorphism over the labeled base sphere: some unit k with k*a = b entrywise."""
    if p.N != q.N:
        raise DegreeMismatch(f"covers have degrees {p.N} and {q.N}")
    return any(_mul(k, p.a, p.N) == q.a for k in units(p.N))


def surfaces_isomorphic(p: CoverParams, q: CoverParams) -> bool:
    """Same point of the stratum: unit multiplication combined with a pillow symmetry."""
    if p.N != q.N:
        raise DegreeMismatch(f"covers have degrees {p.N} and {q.N}")
    targets = {tuple(q.a[kappa[i]] for i in range(4)) for kappa in KLEIN_GROUP}
    return any(_mul(k, p.a, p.N) in targets for k in units(p.N))


def klein_class_key(p: CoverParams) -> tuple[int, int, int, int]:
    """Least tuple over the unit x Klein action; equal keys iff isomorphic surfaces."""
    N = p.N
    best = None
    for k in units(N):
        b = _mul(k, p.a, N)
        for kappa in KLEIN_GROUP:
            c = (b[kappa[0]], b[kappa[1]], b[kappa[2]], b[kappa[3]])
            if best is None or c < best:
                best = c
    return best


def symmetry_group(p: CoverParams) -> frozenset[Symmetry]:
    """All pairs (k, pi) with k a unit mod N and k*a[i] = a[pi[i]] mod N for all i.

    Exponent values may repeat, so one multiplier can admit several
    permutations.  Brute force over the phi(N) * 24 candidate pairs, skipping
    multipliers that do not even preserve the exponent multiset.
    """
    a = p.a
    reference = sorted(a)
    out = set()
    for k in units(p.N):
        b = _mul(k, a, p.N)
        if sorted(b) != reference:
            continue
        for pi in itertools.permutations(range(4)):
            if b[0] == a[pi[0]] and b[1] == a[pi[1]] and b[2] == a[pi[2]] and b[3] == a[pi[3]]:
                out.add(Symmetry(k, pi))
    return frozenset(out)


def canonical_surface_form(p: CoverParams) -> CoverParams:
    """Lexicographically least exponent tuple over the full unit x S4 action.

    This is a deduplication key for unordered classification searches; it is
    coarser than :func:`surfaces_isomorphic`, which only allows the Klein
    subgroup of label permutations.
    """
    best = min(tuple(sorted(_mul(k, p.a, p.N))) for k in units(p.N))
    return CoverParams(p.N, best)


def compose_symmetries(s: Symmetry, t: Symmetry, N: int) -> Symmetry:
    """(k, pi) * (k', pi') = (k k' mod N, pi o pi')."""
    return Symmetry((s.k * t.k) % N, tuple(s.pi[t.pi[i]] for i in range(4)))
