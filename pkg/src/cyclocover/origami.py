"""Square-tiled surface of a cyclic cover as an explicit edge-gluing complex.

The base pillow is glued from a white and a black unit square whose corners
carry the four branch labels.  The cover is tiled by 2N unit squares: deck
copy k of the white square gets number 2k, of the black square 2k+1.  Every
square keeps its own chart with sides B, R, T, L (counterclockwise) and
corners BL, BR, TR, TL; corner labels read A, B, C, D counterclockwise from
the top-left corner on white squares and are mirrored on black squares.

Each side of a white square is glued to the like-lettered side of a black
square.  Crossing from white deck copy k lands on the black copy with deck
index k (through the CD side), k + a3 (BC), k + a2 + a3 (AB), or k - a4 (DA);
the increments are fixed by requiring the loop around the corner labeled i to
act on deck copies as +a_i.  Vertical-side gluings (L to R) are translations
of the charts, horizontal ones (T to T, B to B) are rotations by pi.

The neighbor permutations follow two conventions.  For quadratic kinds they
are label-based: pi_h points through the CD side of a white square and the AB
side of a black one, pi_v through the AD side of a white square and the BC
side of a black one.  For the square-of-a-1-form kind the flat structure has
a global vertical direction, every square with even deck index is upright and
every square with odd deck index is upside down, and pi_h / pi_v point to the
geometric right / top neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import perms
from .cover_params import CoverParams
from .errors import VerificationFailure
from .strata import DifferentialKind, differential_kind, genus, singularity_pattern

# Side codes in counterclockwise boundary order, and corner codes such that
# corner c is the counterclockwise start of side c.
SIDE_B, SIDE_R, SIDE_T, SIDE_L = 0, 1, 2, 3
CORNER_BL, CORNER_BR, CORNER_TR, CORNER_TL = 0, 1, 2, 3

# Branch label (0-based index into a) sitting at each corner, by corner code.
WHITE_CORNER_LABELS = (1, 2, 3, 0)  # BL=B, BR=C, TR=D, TL=A
BLACK_CORNER_LABELS = (2, 1, 0, 3)  # BL=C, BR=B, TR=A, TL=D


@dataclass(frozen=True)
class Origami:
    params: CoverParams
    kind: DifferentialKind
    n_squares: int
    glue: tuple[int, ...]  # slot 4*j+side -> slot, an involution
    pi_h: tuple[int, ...]
    pi_v: tuple[int, ...]
    upright: tuple[bool, ...] | None  # abelian kind only

    def corner_label(self, square: int, corner: int) -> int:
        table = WHITE_CORNER_LABELS if square % 2 == 0 else BLACK_CORNER_LABELS
        return table[corner]


@dataclass(frozen=True)
class CylinderDecomposition:
    direction: str  # "horizontal" | "vertical"
    cylinders: tuple[tuple[int, int], ...]  # (width, height) pairs

    @property
    def total_area(self) -> int:
        return sum(w * h for w, h in self.cylinders)


@dataclass(frozen=True)
class VerificationReport:
    transitive: bool
    cone_angle_halves: tuple[int, ...]  # each vertex angle in units of pi, sorted
    genus_from_euler: int
    deck_shift_equivariant: bool
    holonomy_trivial: bool


def build(p: CoverParams) -> Origami:
    """Assemble the gluing complex of ``p`` and derive the neighbor permutations."""
    N = p.N
    a1, a2, a3, a4 = p.a
    n = 2 * N
    glue = [0] * (4 * n)
    for k in range(N):
        w = 8 * k  # slot base of white square 2k
        b = 4 * (2 * ((k + a3) % N) + 1)  # black partner through the BC side
        glue[w] = b
        glue[b] = w
        b = w + 4  # black square 2k+1 through the CD side
        glue[w + 1] = b + 3
        glue[b + 3] = w + 1
        b = 4 * (2 * ((k - a4) % N) + 1)  # through the AD side
        glue[w + 2] = b + 2
        glue[b + 2] = w + 2
        b = 4 * (2 * ((k + a2 + a3) % N) + 1)  # through the AB side
        glue[w + 3] = b + 1
        glue[b + 1] = w + 3

    kind = differential_kind(p)
    pi_h = [0] * n
    pi_v = [0] * n
    if kind.is_abelian:
        upright = tuple((j >> 1) % 2 == 0 for j in range(n))
        for j in range(n):
            base = 4 * j
            if upright[j]:
                pi_h[j] = glue[base + SIDE_R] >> 2
                pi_v[j] = glue[base + SIDE_T] >> 2
            else:
                pi_h[j] = glue[base + SIDE_L] >> 2
                pi_v[j] = glue[base + SIDE_B] >> 2
    else:
        upright = None
        for j in range(n):
            base = 4 * j
            pi_h[j] = glue[base + SIDE_R] >> 2
            pi_v[j] = glue[base + (SIDE_T if j % 2 == 0 else SIDE_B)] >> 2

    return Origami(p, kind, n, tuple(glue), tuple(pi_h), tuple(pi_v), upright)


def vertex_orbits(o: Origami) -> list[list[int]]:
    """Orbits of corner slots under rotation around each vertex of the complex.

    A corner slot is encoded as 4*square + corner.  Rotating in the direction
    of the surface orientation crosses the side that starts at the corner and
    lands on the counterclockwise end corner of the glued side.  Every corner
    contributes a quarter turn, so a vertex with s slots has cone angle s*pi/2.
    """
    glue = o.glue
    total = 4 * o.n_squares
    seen = [False] * total
    orbits = []
    for start in range(total):
        if seen[start]:
            continue
        orbit = []
        slot = start
        while not seen[slot]:
            seen[slot] = True
            orbit.append(slot)
            # corner code == side code of the side starting at it
            target = glue[slot]
            slot = (target & ~3) | ((target + 1) & 3)
        orbits.append(orbit)
    return orbits


def _holonomy_sweep(o: Origami):
    """Try to orient all charts coherently; returns flags or None on obstruction.

    Vertical-side gluings keep the chart orientation, horizontal ones reverse
    it, so a consistent 0/1 assignment exists iff the flat metric has trivial
    linear holonomy.
    """
    n = o.n_squares
    glue = o.glue
    ori = [None] * n
    ori[0] = 0
    stack = [0]
    while stack:
        j = stack.pop()
        base = 4 * j
        for side in range(4):
            target = glue[base + side]
            j2 = target >> 2
            flip = 1 - (side & 1)
            want = ori[j] ^ flip
            if ori[j2] is None:
                ori[j2] = want
                stack.append(j2)
            elif ori[j2] != want:
                return None
    return ori


def verify(o: Origami, p: CoverParams) -> VerificationReport:
    """Cross-check the built complex against independent topological oracles.

    Checks, in order: (a) the neighbor permutations act transitively; (b) the
    cone angles collected by walking around every vertex reproduce the
    predicted singularity pattern, and the Euler characteristic of the complex
    reproduces the predicted genus; (c) shifting all deck indices by one
    conjugates pi_h and pi_v to themselves (quadratic kinds) or to their
    inverses (square kind, whose 1-form changes sign under the deck
    generator); (d) the chart orientation sweep succeeds exactly for the
    square kind.
    """
    if o.params != p:
        raise VerificationFailure("params", f"origami was built from {o.params}, not {p}")
    n = o.n_squares
    N = p.N

    if not perms.orbits_transitive([o.pi_h, o.pi_v], n):
        raise VerificationFailure("transitivity", f"<pi_h, pi_v> is not transitive for {p}")

    orbits = vertex_orbits(o)
    by_label = {i: [] for i in range(4)}
    for orbit in orbits:
        labels = {o.corner_label(slot >> 2, slot & 3) for slot in orbit}
        if len(labels) != 1:
            raise VerificationFailure("vertex_walk", f"vertex mixes branch labels {labels} for {p}")
        by_label[labels.pop()].append(len(orbit))
    for i in range(4):
        g = gcd(N, p.a[i])
        expected = [2 * N // g] * g
        if sorted(by_label[i]) != expected:
            raise VerificationFailure(
                "cone_angles",
                f"branch {i + 1} of {p}: walk found slot counts {sorted(by_label[i])}, expected {expected}",
            )
    # translate walk angles (slots quarter turns) into singularity degrees
    stratum = singularity_pattern(p)
    walk_degrees = []
    walk_marked = 0
    for orbit in orbits:
        slots = len(orbit)
        d = slots // 4 - 1 if o.kind.is_abelian else slots // 2 - 2
        if d == 0:
            walk_marked += 1
        else:
            walk_degrees.append(d)
    if sorted(walk_degrees, reverse=True) != list(stratum.degrees) or walk_marked != stratum.marked_points:
        raise VerificationFailure(
            "cone_angles",
            f"walk stratum {sorted(walk_degrees, reverse=True)}+{walk_marked}pts differs from "
            f"{list(stratum.degrees)}+{stratum.marked_points}pts for {p}",
        )

    # V - E + F with E = 2*n, F = n squares
    euler = len(orbits) - 2 * n + n
    g_euler = (2 - euler) // 2
    gd = genus(p)
    if g_euler != gd.g:
        raise VerificationFailure("genus", f"Euler characteristic gives genus {g_euler}, formula gives {gd.g} for {p}")

    def shift_conjugate(pi):
        return [(pi[(j - 2) % n] + 2) % n for j in range(n)]

    if o.kind.is_abelian:
        expect_h, expect_v = perms.invert(o.pi_h), perms.invert(o.pi_v)
    else:
        expect_h, expect_v = list(o.pi_h), list(o.pi_v)
    if shift_conjugate(o.pi_h) != expect_h or shift_conjugate(o.pi_v) != expect_v:
        raise VerificationFailure("deck_shift", f"deck-shift conjugation of pi_h/pi_v failed for {p}")

    ori = _holonomy_sweep(o)
    if o.kind.is_abelian:
        if ori is None:
            raise VerificationFailure("holonomy", f"square kind but no coherent chart orientation for {p}")
        if any((ori[j] == 0) != o.upright[j] for j in range(n)):
            raise VerificationFailure("holonomy", f"chart orientations disagree with upright flags for {p}")
    elif ori is not None:
        raise VerificationFailure("holonomy", f"quadratic kind but chart orientations are coherent for {p}")

    angle_halves = tuple(sorted(len(orbit) // 2 for orbit in orbits))
    return VerificationReport(True, angle_halves, g_euler, True, ori is not None)


def _boundary_sides(o: Origami, direction: str):
    """Per square, the two chart sides bounding its row of the decomposition.

    Horizontal rows are bounded by the geometric top and bottom sides,
    vertical ones by left and right.  The chart of a square drawn upside down
    in its row contributes the opposite side: in the square kind that is any
    square with an odd deck index; in quadratic kinds rows of pi_h draw every
    square upright, while columns of pi_v alternate, each black square being
    rotated by pi relative to the white ones.
    """
    n = o.n_squares
    if direction == "horizontal":
        first, second = SIDE_T, SIDE_B
    else:
        first, second = SIDE_L, SIDE_R
    flipped = {SIDE_T: SIDE_B, SIDE_B: SIDE_T, SIDE_L: SIDE_R, SIDE_R: SIDE_L}
    if o.upright is not None:
        one = [first if o.upright[j] else flipped[first] for j in range(n)]
        two = [second if o.upright[j] else flipped[second] for j in range(n)]
    elif direction == "horizontal":
        one, two = [first] * n, [second] * n
    else:
        one = [first if j % 2 == 0 else flipped[first] for j in range(n)]
        two = [second if j % 2 == 0 else flipped[second] for j in range(n)]
    return one, two


def cylinder_decomposition(o: Origami, direction: str) -> CylinderDecomposition:
    """Maximal cylinders of closed horizontal or vertical trajectories.

    Rows are the cycles of pi_h (resp. pi_v); each is a width-w, height-1
    cylinder.  Two rows merge across a shared boundary circle iff every
    vertex on that circle is a regular point of the metric (cone angle
    exactly 2*pi), which happens iff both branch labels carried by the
    circle satisfy 2*gcd(N, a_i) = N.  Marked points therefore never block
    merging, while zeros and simple poles always do.
    """
    if direction not in ("horizontal", "vertical"):
        raise ValueError(f"direction must be 'horizontal' or 'vertical', got {direction!r}")
    pi = o.pi_h if direction == "horizontal" else o.pi_v
    N = o.params.N
    glue = o.glue
    row_cycles = perms.cycles(pi)
    row_of = [0] * o.n_squares
    for r, cyc in enumerate(row_cycles):
        for j in cyc:
            row_of[j] = r

    regular_label = [2 * gcd(N, x) == N for x in o.params.a]
    parent = list(range(len(row_cycles)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    white, black = WHITE_CORNER_LABELS, BLACK_CORNER_LABELS
    sides_a, sides_b = _boundary_sides(o, direction)
    for sides in (sides_a, sides_b):
        for r, cyc in enumerate(row_cycles):
            regular = True
            for j in cyc:
                s = sides[j]
                table = white if (j & 1) == 0 else black
                if not (regular_label[table[s]] and regular_label[table[(s + 1) & 3]]):
                    regular = False
                    break
            if not regular:
                continue
            for j in cyc:
                ra, rb = find(r), find(row_of[glue[4 * j + sides[j]] >> 2])
                if ra != rb:
                    parent[ra] = rb

    groups = {}
    for r, cyc in enumerate(row_cycles):
        groups.setdefault(find(r), []).append(r)
    cylinders = []
    for rows in groups.values():
        widths = {len(row_cycles[r]) for r in rows}
        assert len(widths) == 1, "merged rows of unequal width"
        cylinders.append((min(row_cycles[r][0] for r in rows), (widths.pop(), len(rows))))
    cylinders.sort()
    return CylinderDecomposition(direction, tuple(c for _, c in cylinders))
