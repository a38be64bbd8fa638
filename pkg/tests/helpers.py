"""Shared test utilities: parameter enumeration and slow reference oracles."""

import itertools

from cyclocover import origami, perms
from cyclocover.cover_params import validate
from cyclocover.errors import NotConnected, SumNotDivisible


def all_valid_params(n_max, n_min=2):
    """Every valid quadruple with n_min <= N <= n_max, in enumeration order."""
    for N in range(n_min, n_max + 1):
        for a1, a2, a3 in itertools.product(range(1, N + 1), repeat=3):
            a4 = -(a1 + a2 + a3) % N or N
            try:
                yield validate(N, (a1, a2, a3, a4))
            except (NotConnected, SumNotDivisible):
                continue


def reference_cylinders(o, direction):
    """Cylinder decomposition driven by vertex-walk cone angles.

    Independent of the fast branch-label criterion: straight-line continuation
    through every 4-slot (regular) vertex groups the grid edges into lines, a
    line is singular iff it meets a vertex of cone angle other than 2*pi, and
    rows merge whenever they share an edge on a regular line.
    """
    n = o.n_squares
    glue = o.glue
    orbits = origami.vertex_orbits(o)
    vertex_of = [0] * (4 * n)
    regular_vertex = [False] * len(orbits)
    for v, orbit in enumerate(orbits):
        regular_vertex[v] = len(orbit) == 4
        for slot in orbit:
            vertex_of[slot] = v

    parity = 0 if direction == "horizontal" else 1
    edges = [min(s, glue[s]) for s in range(4 * n) if (s & 1) == parity and s <= glue[s]]
    edge_index = {e: i for i, e in enumerate(edges)}

    def canonical_edge(slot):
        return edge_index[min(slot, glue[slot])]

    line = list(range(len(edges)))

    def find(x):
        while line[x] != x:
            line[x] = line[line[x]]
            x = line[x]
        return x

    # Around a regular vertex the four incident edges alternate between the
    # two grid directions; opposite ones continue each other straight.
    for v, orbit in enumerate(orbits):
        if not regular_vertex[v]:
            continue
        # the side crossed from a corner slot shares its encoding; the two
        # same-parity ones sit opposite each other around the vertex
        sides = [slot for slot in orbit if (slot & 1) == parity]
        assert len(sides) == 2
        a, b = find(canonical_edge(sides[0])), find(canonical_edge(sides[1]))
        if a != b:
            line[a] = b

    singular = set()
    for i, e in enumerate(edges):
        j, s = e >> 2, e & 3
        for corner in (s, (s + 1) & 3):
            if not regular_vertex[vertex_of[4 * j + corner]]:
                singular.add(find(i))

    pi = o.pi_h if direction == "horizontal" else o.pi_v
    row_cycles = perms.cycles(pi)
    row_of = [0] * n
    for r, cyc in enumerate(row_cycles):
        for j in cyc:
            row_of[j] = r
    comp = list(range(len(row_cycles)))

    def cfind(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for i, e in enumerate(edges):
        if find(i) in singular:
            continue
        a, b = cfind(row_of[e >> 2]), cfind(row_of[glue[e] >> 2])
        if a != b:
            comp[a] = b

    groups = {}
    for r, cyc in enumerate(row_cycles):
        groups.setdefault(cfind(r), []).append(r)
    out = []
    for rows in groups.values():
        widths = {len(row_cycles[r]) for r in rows}
        assert len(widths) == 1
        out.append((widths.pop(), len(rows)))
    return sorted(out)
