"""Parity of the spin structure of a square-kind cover via the Arf invariant.

The parity is defined when the flat structure comes from a holomorphic
1-form all of whose zero degrees are even.  It is computed as the Arf
invariant of the canonical mod-2 quadratic form q(c) = winding(c) + 1 on
H1 of the surface:

* squares are nodes of a dual graph whose edges are the 4N gluings; the
  fundamental cycles of a spanning tree generate H1;
* every generator is realized as an embedded axis-parallel loop through
  square centers and edge crossing points, which avoids all cone points;
* its winding number is the signed number of quarter turns divided by 4,
  read off in the translation charts (legal because the holonomy is
  trivial), and q = winding + 1 mod 2;
* mod-2 intersection numbers come from chord crossings inside each square,
  with every generator crossing edges at its own offset so that all chord
  endpoints are distinct;
* a symplectic basis over GF(2) is extracted by greedy pairing and
  Arf = sum of q(alpha_i) q(beta_i).

Leftover generators that pair to zero with everything span the relations
of the presentation; q must vanish on them, which cross-checks the winding
numbers against the intersection form and is asserted on every run.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .origami import Origami, build
from .cover_params import CoverParams
from .strata import differential_kind, genus, singularity_pattern


class SpinParity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    UNDEFINED = "undefined"


# plane direction codes: E=0, N=1, W=2, S=3
_UPRIGHT_DIR = {0: 3, 1: 0, 2: 1, 3: 2}  # side B,R,T,L -> S,E,N,W
_FLIPPED_DIR = {0: 1, 1: 2, 2: 3, 3: 0}  # side B,R,T,L -> N,W,S,E


@dataclass(frozen=True)
class SpinAnalysis:
    n_generators: int
    gram: tuple[int, ...]  # row bitmasks of the mod-2 intersection form
    q_values: tuple[int, ...]  # q on each generator loop
    symplectic_pairs: tuple[tuple[int, int], ...]  # bitmask combinations
    radical: tuple[int, ...]
    arf: int

    def inner(self, x: int, y: int) -> int:
        total = 0
        xx = x
        while xx:
            t = (xx & -xx).bit_length() - 1
            total ^= (self.gram[t] & y).bit_count() & 1
            xx &= xx - 1
        return total

    def q_of(self, vec: int) -> int:
        """q extended to combinations by q(x + y) = q(x) + q(y) + <x, y>."""
        bits = []
        v = vec
        while v:
            bits.append((v & -v).bit_length() - 1)
            v &= v - 1
        acc = 0
        for i, t in enumerate(bits):
            acc ^= self.q_values[t]
            rest = 0
            for u in bits[i + 1 :]:
                rest |= 1 << u
            acc ^= (self.gram[t] & rest).bit_count() & 1
        return acc


def _spanning_tree(o: Origami, tree_seed: int):
    """BFS spanning tree of the square-adjacency graph.

    Returns (parent_slot, root, non_tree_edges); parent_slot[j] is the slot
    on square j crossing to its parent.  A nonzero seed shuffles the root
    and the per-square side preference, changing tree and generators but
    never the Arf invariant.
    """
    n = o.n_squares
    glue = o.glue
    side_order = [0, 1, 2, 3]
    root = 0
    if tree_seed:
        rng = random.Random(tree_seed)
        side_order = rng.sample(range(4), 4)
        root = rng.randrange(n)
    parent_slot = [-1] * n
    seen = [False] * n
    seen[root] = True
    queue = [root]
    tree_edges = set()
    for j in queue:
        for side in side_order:
            slot = 4 * j + side
            j2 = glue[slot] >> 2
            if not seen[j2]:
                seen[j2] = True
                parent_slot[j2] = glue[slot]
                tree_edges.add(min(slot, glue[slot]))
                queue.append(j2)
    assert all(seen), "square-adjacency graph is disconnected"
    non_tree = [
        s for s in range(4 * n) if s < glue[s] and min(s, glue[s]) not in tree_edges
    ]
    return parent_slot, root, non_tree


def _generator_crossings(o: Origami, parent_slot, root, entry_slot):
    """The fundamental cycle through a non-tree edge, as (square, exit slot) pairs."""
    glue = o.glue
    ja, jb = entry_slot >> 2, glue[entry_slot] >> 2

    def path_to_root(j):
        path = [j]
        while path[-1] != root:
            path.append(glue[parent_slot[path[-1]]] >> 2)
        return path

    path_a = path_to_root(ja)
    on_a = {j: i for i, j in enumerate(path_a)}
    path_b = path_to_root(jb)
    lca_b = next(i for i, j in enumerate(path_b) if j in on_a)
    lca = path_b[lca_b]

    crossings = [(ja, entry_slot)]
    for j in path_b[:lca_b]:
        crossings.append((j, parent_slot[j]))
    for j in reversed(path_a[: on_a[lca]]):
        crossings.append((glue[parent_slot[j]] >> 2, glue[parent_slot[j]]))
    for i, (j, slot) in enumerate(crossings):
        assert slot >> 2 == j
        nxt = crossings[(i + 1) % len(crossings)][0]
        assert glue[slot] >> 2 == nxt
    return crossings


def _winding_q(o: Origami, crossings) -> int:
    """q = (signed quarter turns)/4 + 1 mod 2 for one embedded loop."""
    dirs = []
    for j, slot in crossings:
        table = _UPRIGHT_DIR if o.upright[j] else _FLIPPED_DIR
        dirs.append(table[slot & 3])
    turns = 0
    for i, d in enumerate(dirs):
        delta = (d - dirs[i - 1]) % 4
        assert delta != 2, "loop makes a U-turn"
        turns += delta if delta != 3 else -1
    assert turns % 4 == 0, "non-integral winding number"
    return (turns // 4 + 1) % 2


def _gf2_kernel(rows, m):
    """Basis of the right kernel of an m x m GF(2) matrix given as row bitmasks."""
    reduced = list(rows)
    pivot_row_of_col = {}
    for r in range(m):
        row = reduced[r]
        while row:
            c = row.bit_length() - 1
            if c not in pivot_row_of_col:
                break
            row ^= reduced[pivot_row_of_col[c]]
        reduced[r] = row
        if row:
            pivot_row_of_col[row.bit_length() - 1] = r
    for c, r in sorted(pivot_row_of_col.items(), reverse=True):
        for rr in range(m):
            if rr != r and (reduced[rr] >> c) & 1:
                reduced[rr] ^= reduced[r]
    kernel = []
    for free in range(m):
        if free in pivot_row_of_col:
            continue
        vec = 1 << free
        for c, r in pivot_row_of_col.items():
            if (reduced[r] >> free) & 1:
                vec |= 1 << c
        kernel.append(vec)
    return kernel


def analyze(o: Origami, tree_seed: int = 0) -> SpinAnalysis:
    """Full Arf computation for a square-kind origami with even zero degrees."""
    assert o.kind.is_abelian, "spin parity needs the square kind"
    parent_slot, root, non_tree = _spanning_tree(o, tree_seed)
    m = len(non_tree)
    glue = o.glue

    # generator t crosses every edge at offset (t+1)/(m+1) in the edge's
    # reference chart; positions along the square boundary are compared after
    # scaling by m+1, keeping everything in integers
    square_chords: dict[int, list[tuple[int, int, int]]] = {}
    q_values = []

    def boundary_position(slot, t):
        u = t + 1 if slot < glue[slot] else m - t
        return (slot & 3) * (m + 1) + u

    for t, entry in enumerate(non_tree):
        crossings = _generator_crossings(o, parent_slot, root, entry)
        q_values.append(_winding_q(o, crossings))
        for i, (j, exit_slot) in enumerate(crossings):
            entry_slot = glue[crossings[i - 1][1]]
            assert entry_slot >> 2 == j and entry_slot != exit_slot
            square_chords.setdefault(j, []).append(
                (t, boundary_position(entry_slot, t), boundary_position(exit_slot, t))
            )

    gram = [0] * m
    for chords in square_chords.values():
        for i, (t1, a1, b1) in enumerate(chords):
            lo, hi = min(a1, b1), max(a1, b1)
            for t2, a2, b2 in chords[i + 1 :]:
                if (lo < a2 < hi) != (lo < b2 < hi):
                    gram[t1] ^= 1 << t2
                    gram[t2] ^= 1 << t1

    analysis = SpinAnalysis(m, tuple(gram), tuple(q_values), (), (), 0)

    # pool entries carry (vector, G*vector); G*e_t is row t since G is symmetric,
    # and G is linear, so the image updates by xor alongside the vector
    pool = [(1 << t, gram[t]) for t in range(m)]
    pairs = []
    while True:
        found = None
        for i in range(len(pool)):
            vi = pool[i][0]
            for j in range(i + 1, len(pool)):
                if (vi & pool[j][1]).bit_count() & 1:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        x, gx = pool[i]
        y, gy = pool[j]
        pairs.append((x, y))
        new_pool = []
        for k, (z, gz) in enumerate(pool):
            if k in (i, j):
                continue
            if (z & gy).bit_count() & 1:
                z ^= x
                gz ^= gx
            if (z & gx).bit_count() & 1:
                z ^= y
                gz ^= gy
            new_pool.append((z, gz))
        pool = new_pool

    g = genus(o.params).g
    assert len(pairs) == g, f"extracted {len(pairs)} symplectic pairs, genus is {g}"

    radical = tuple(v for v, _ in pool if v)
    for v in radical:
        assert analysis.q_of(v) == 0, "winding numbers inconsistent on a trivial class"
    for v in _gf2_kernel(gram, m):
        assert analysis.q_of(v) == 0, "winding numbers inconsistent on the radical"

    arf = 0
    for x, y in pairs:
        arf ^= analysis.q_of(x) & analysis.q_of(y)
    return SpinAnalysis(m, tuple(gram), tuple(q_values), tuple(pairs), radical, arf)


def spin_parity(p: CoverParams, tree_seed: int = 0) -> SpinParity:
    """Even/odd spin parity, or UNDEFINED off the even square-kind strata."""
    if not differential_kind(p).is_abelian:
        return SpinParity.UNDEFINED
    if any(d % 2 != 0 for d in singularity_pattern(p).degrees):
        return SpinParity.UNDEFINED
    analysis = analyze(build(p), tree_seed)
    return SpinParity.ODD if analysis.arf else SpinParity.EVEN
