"""Small helpers for permutations given in one-line form.

A permutation on {0, ..., n-1} is a list/tuple ``p`` with ``p[i]`` the image
of ``i``.  Cycle strings follow the usual parenthesized convention, e.g.
``"(0,1,6,7,4,5,2,3)"``; fixed points are omitted.  The canonical rendering
starts every cycle at its smallest element and lists cycles by increasing
first element.
"""

from __future__ import annotations


def is_permutation(p) -> bool:
    n = len(p)
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
            return False
        seen[x] = True
    return True


def invert(p):
    q = [0] * len(p)
    for i, x in enumerate(p):
        q[x] = i
    return q


def compose(p, q):
    """Return the permutation i -> p[q[i]]."""
    return [p[x] for x in q]


def cycles(p):
    """Cycles of ``p`` (fixed points included), each starting at its minimum."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def cycle_string(p) -> str:
    """Canonical cycle notation; fixed points are dropped, identity is ``"()"``."""
    parts = ["(" + ",".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) if parts else "()"


def parse_cycle_string(s: str, n: int):
    """One-line form of a cycle string over {0, ..., n-1}."""
    p = list(range(n))
    s = s.replace(" ", "")
    if s in ("", "()"):
        return p
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed cycle string: {s!r}")
    for chunk in s[1:-1].split(")("):
        entries = [int(tok) for tok in chunk.split(",")]
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated element in cycle {chunk!r}")
        for a, b in zip(entries, entries[1:] + entries[:1]):
            if p[a] != a:
                raise ValueError(f"element {a} appears in two cycles")
            p[a] = b
    return p


def orbits_transitive(perms, n: int) -> bool:
    """Whether the group generated by ``perms`` acts transitively on {0..n-1}."""
    if n == 0:
        return True
    gens = []
    for p in perms:
        gens.append(p)
        gens.append(invert(p))
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        i = stack.pop()
        for g in gens:
            j = g[i]
            if not seen[j]:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == n
