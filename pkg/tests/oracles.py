"""Independent naive implementations used as test oracles.

Everything here is deliberately written from scratch against the published
definitions (graph6 format, face traversal, cycle/path enumeration,
automorphisms) with different algorithmic structure than the package code,
so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import Counter

from scaffoldkit.embeddings import canonical_cycle
from scaffoldkit.graphs import CubicGraph


# -- graph6, via explicit bit strings ---------------------------------------

def g6_encode(n: int, edges: set[tuple[int, int]]) -> str:
    assert n <= 62
    bits = ""
    for j in range(1, n):
        for i in range(j):
            bits += "1" if (i, j) in edges or (j, i) in edges else "0"
    while len(bits) % 6:
        bits += "0"
    out = chr(n + 63)
    for k in range(0, len(bits), 6):
        out += chr(63 + int(bits[k : k + 6], 2))
    return out


def g6_decode(s: str) -> tuple[int, set[tuple[int, int]]]:
    n = ord(s[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in s[1:])
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.add((i, j))
            k += 1
    return n, edges


# -- path and cycle enumeration ---------------------------------------------

def naive_three_paths(g: CubicGraph, u: int, v: int) -> set[tuple[int, ...]]:
    out = set()
    for a in range(g.n):
        for b in range(g.n):
            quad = (u, a, b, v)
            if len(set(quad)) != 4:
                continue
            if g.has_edge(u, a) and g.has_edge(a, b) and g.has_edge(b, v):
                out.add(min(quad, quad[::-1]))
    return out


def naive_all_path3(g: CubicGraph) -> set[tuple[int, ...]]:
    out = set()
    for quad in itertools.permutations(range(g.n), 4):
        t0, t1, t2, t3 = quad
        if g.has_edge(t0, t1) and g.has_edge(t1, t2) and g.has_edge(t2, t3):
            out.add(min(quad, quad[::-1]))
    return out


def naive_cycles(g: CubicGraph, k: int) -> set[tuple[int, ...]]:
    out = set()
    for subset in itertools.combinations(range(g.n), k):
        rest = subset[1:]
        for perm in itertools.permutations(rest):
            cyc = (subset[0],) + perm
            if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                out.add(canonical_cycle(cyc))
    return out


# -- automorphisms -----------------------------------------------------------

def naive_automorphisms(g: CubicGraph) -> set[tuple[int, ...]]:
    """Brute force for n <= 8; plain unpruned backtracking above that."""
    edges = {(min(u, v), max(u, v)) for u, v in g.edges}

    def is_auto(perm) -> bool:
        return all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges)

    if g.n <= 8:
        return {p for p in itertools.permutations(range(g.n)) if is_auto(p)}

    found = set()
    image = [-1] * g.n
    used = [False] * g.n

    def rec(v: int) -> None:
        if v == g.n:
            found.add(tuple(image))
            return
        for w in range(g.n):
            if used[w]:
                continue
            if any(
                image[u] >= 0 and g.has_edge(v, u) != g.has_edge(w, image[u])
                for u in range(g.n)
            ):
                continue
            image[v] = w
            used[w] = True
            rec(v + 1)
            image[v] = -1
            used[w] = False

    rec(0)
    return found


# -- face traversal ----------------------------------------------------------

def naive_trace_faces(g: CubicGraph, scheme) -> list[tuple[int, ...]]:
    """Faces as canonical vertex cycles, multiset (sorted list).

    Builds the full next-state map as a dictionary over ((u, v), bit)
    states, splits it into orbits, then pairs orbits whose dart sequences
    are reversals of each other; each pair is one face.
    """
    sign = {e: s for e, s in zip(g.edges, scheme.signature)}

    def neg(u, v):
        return sign[(min(u, v), max(u, v))] < 0

    states = [((u, v), o) for (u, v) in g.edges for o in (0, 1)]
    states += [((v, u), o) for (u, v) in g.edges for o in (0, 1)]
    nxt = {}
    for (u, v), o in states:
        o2 = o ^ (1 if neg(u, v) else 0)
        rot = scheme.rotation[v]
        i = rot.index(u)
        w = rot[(i + 1) % 3] if o2 == 0 else rot[(i - 1) % 3]
        nxt[((u, v), o)] = ((v, w), o2)

    seen = set()
    orbits = []
    for s0 in sorted(states):
        if s0 in seen:
            continue
        orb = []
        s = s0
        while s not in seen:
            seen.add(s)
            orb.append(s)
            s = nxt[s]
        orbits.append(orb)

    def dart_cycle(orb):
        return tuple(d for d, _ in orb)

    def rev_key(darts):
        rev = tuple((v, u) for (u, v) in reversed(darts))
        best = min(rev[i:] + rev[:i] for i in range(len(rev)))
        return best

    def fwd_key(darts):
        return min(darts[i:] + darts[:i] for i in range(len(darts)))

    by_key: dict[tuple, list] = {}
    for orb in orbits:
        darts = dart_cycle(orb)
        key = min(fwd_key(darts), rev_key(darts))
        by_key.setdefault(key, []).append(orb)

    faces = []
    for key, group in sorted(by_key.items()):
        assert len(group) == 2, "face orbits must pair up"
        darts = dart_cycle(group[0])
        faces.append(canonical_cycle(tuple(u for (u, _) in darts)))
    return sorted(faces)


def naive_is_polyhedral(g: CubicGraph, faces: list[tuple[int, ...]]) -> bool:
    for f in faces:
        if len(set(f)) != len(f):
            return False
    def edgeset(f):
        return {tuple(sorted((f[i], f[(i + 1) % len(f)]))) for i in range(len(f))}
    for a, b in itertools.combinations(range(len(faces)), 2):
        sv = set(faces[a]) & set(faces[b])
        se = edgeset(faces[a]) & edgeset(faces[b])
        if len(sv) == 0 and len(se) == 0:
            continue
        if len(sv) == 1 and len(se) == 0:
            continue
        if len(sv) == 2 and len(se) == 1 and set(next(iter(se))) == sv:
            continue
        return False
    return True


def naive_scaffold(faces: list[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    """Endpoint pair -> number of facial 3-path windows, via sliding windows."""
    windows = set()
    for f in faces:
        L = len(f)
        for i in range(L):
            quad = (f[i], f[(i + 1) % L], f[(i + 2) % L], f[(i + 3) % L])
            if quad[0] != quad[3]:
                windows.add(min(quad, quad[::-1]))
    count: Counter = Counter()
    for w in windows:
        count[tuple(sorted((w[0], w[3])))] += 1
    return dict(count)
