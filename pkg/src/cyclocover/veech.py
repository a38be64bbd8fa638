"""Veech-group index and orbit of a square-tiled cyclic cover.

The integer affine group acts on covers through relabelings of the four
branch points, and relabelings by the Klein four-group of pillow symmetries
give the same flat surface.  The index of the Veech group inside the integer
affine group therefore equals the index of the image of the cover's symmetry
group under the quotient map from the label group S4 to S3, where S3 permutes
the three ways of splitting the labels into two pairs.  The orbit itself is
the set of the six coset relabelings up to surface isomorphism.

The index is always 1, 2, 3 or 6, and which one is readable off the exponent
pattern: a value repeated three times forces index 1; a repeated pair (and no
triple) forces 3; with four distinct values the index is 2 when some symmetry
acts as a 3-cycle, 3 when one acts as a 4-cycle or a single transposition,
and 6 when only Klein-type symmetries exist.  The group computation is
primary and the pattern rule is asserted against it on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cover_params import (
    KLEIN_COSET_REPS,
    CoverParams,
    klein_class_key,
    symmetry_group,
)
from .errors import ClassificationMismatch

CASE_TRIPLE_EQUAL = "triple_equal"
CASE_PAIR_EQUAL = "pair_equal"
CASE_DISTINCT_KLEIN_ONLY = "distinct_klein_only"
CASE_DISTINCT_ODD_SYMMETRY = "distinct_odd_symmetry"
CASE_DISTINCT_THREE_CYCLE = "distinct_three_cycle"


@dataclass(frozen=True)
class VeechDescriptor:
    index: int  # in {1, 2, 3, 6}
    s3_image_order: int
    case_label: str
    orbit: tuple[CoverParams, ...]


def project_to_pairings(pi) -> tuple[int, int, int]:
    """Image of a label permutation on the three pairings {12|34, 13|24, 14|23}.

    Pairing m is the one matching label 0 with label m+1; the Klein group is
    exactly the kernel of this action.
    """
    image = []
    for m in range(3):
        x, y = pi[0], pi[m + 1]
        if x == 0:
            partner = y
        elif y == 0:
            partner = x
        else:
            # label 0 landed in the complementary block
            partner = next(z for z in (1, 2, 3) if z not in (x, y))
        image.append(partner - 1)
    return tuple(image)


def _cycle_lengths(pi):
    seen = [False] * 4
    lengths = []
    for i in range(4):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            n += 1
            j = pi[j]
        lengths.append(n)
    return sorted(lengths, reverse=True)


def _case_and_predicted_index(p: CoverParams, symmetries):
    counts = sorted((p.a.count(v) for v in set(p.a)), reverse=True)
    if counts[0] >= 3:
        return CASE_TRIPLE_EQUAL, 1
    if counts[0] == 2:
        return CASE_PAIR_EQUAL, 3
    shapes = {tuple(_cycle_lengths(s.pi)) for s in symmetries}
    if (3, 1) in shapes:
        return CASE_DISTINCT_THREE_CYCLE, 2
    if (4,) in shapes or (2, 1, 1) in shapes:
        return CASE_DISTINCT_ODD_SYMMETRY, 3
    return CASE_DISTINCT_KLEIN_ONLY, 6


def orbit(p: CoverParams) -> list[CoverParams]:
    """Representatives of the six coset relabelings, up to surface isomorphism."""
    reps: list[CoverParams] = []
    seen = set()
    for pi in KLEIN_COSET_REPS:
        candidate = CoverParams(p.N, (p.a[pi[0]], p.a[pi[1]], p.a[pi[2]], p.a[pi[3]]))
        key = klein_class_key(candidate)
        if key not in seen:
            seen.add(key)
            reps.append(candidate)
    return reps


def veech_index(p: CoverParams) -> VeechDescriptor:
    """Index of the Veech group, its orbit, and the exponent-pattern case.

    Raises ClassificationMismatch if the pattern rule or the orbit size ever
    disagrees with the group computation; neither can happen for valid input.
    """
    symmetries = symmetry_group(p)
    image = {project_to_pairings(s.pi) for s in symmetries}
    order = len(image)
    assert 6 % order == 0, f"image order {order} does not divide 6"
    index = 6 // order
    orb = orbit(p)
    case_label, predicted = _case_and_predicted_index(p, symmetries)
    if predicted != index:
        raise ClassificationMismatch(
            f"{p}: case {case_label} predicts index {predicted}, group computation gives {index}"
        )
    if len(orb) != index:
        raise ClassificationMismatch(f"{p}: orbit size {len(orb)} != index {index}")
    return VeechDescriptor(index, order, case_label, tuple(orb))


def pairing_gcds(p: CoverParams) -> tuple[int, int, int]:
    """gcd(N, a_i + a_j) over the three pairings; a relabeling invariant."""
    a = p.a
    return (gcd(p.N, a[0] + a[1]), gcd(p.N, a[0] + a[2]), gcd(p.N, a[0] + a[3]))
