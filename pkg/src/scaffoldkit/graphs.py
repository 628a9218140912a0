"""Cubic graphs: representation, graph6 I/O, validation, and small-scale queries.

Vertices are integers 0..n-1.  A CubicGraph is a plain value; construction
does not validate, so decoded-but-broken inputs can be inspected and then
rejected by ``validate_cubic``.  Everything downstream (embedding schemes,
face tracing, reconstruction) assumes a graph that passed validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class Graph6Error(ValueError):
    """Malformed graph6 input.  Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class CubicGraph:
    """A labeled graph given by per-vertex neighbor lists.

    For valid inputs every vertex has exactly 3 distinct neighbors, the
    adjacency is symmetric, the graph is connected and simple.  Neighbor
    lists are kept sorted so equal graphs compare equal.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "CubicGraph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return CubicGraph(n, tuple(tuple(sorted(b)) for b in nbrs))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted (u, v) pairs with u < v; defines the edge indexing."""
        out = []
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    out.append((u, v))
        return tuple(sorted(out))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def relabel(self, perm: "VertexPermutation") -> "CubicGraph":
        """Image graph under vertex permutation v -> perm[v]."""
        return CubicGraph.from_edges(
            self.n, [(perm[u], perm[v]) for u, v in self.edges]
        )


@dataclass(frozen=True)
class Path3:
    """A path on four distinct-endpoint vertices (t0 t1 t2 t3).

    Stored in canonical orientation: the lexicographically smaller of the
    quadruple and its reverse.  Closed walks (t0 == t3) are excluded, as are
    walks revisiting an endpoint.
    """

    vertices: tuple[int, int, int, int]

    @staticmethod
    def of(t0: int, t1: int, t2: int, t3: int) -> "Path3":
        fwd = (t0, t1, t2, t3)
        rev = (t3, t2, t1, t0)
        return Path3(min(fwd, rev))

    @property
    def ends(self) -> tuple[int, int]:
        a, b = self.vertices[0], self.vertices[3]
        return (a, b) if a < b else (b, a)

    @property
    def internal(self) -> tuple[int, int]:
        return self.vertices[1:3]

    def is_path_of(self, g: CubicGraph) -> bool:
        t0, t1, t2, t3 = self.vertices
        if t0 == t3 or t1 in (t0, t3) or t2 in (t0, t3) or t1 == t2:
            return False
        return g.has_edge(t0, t1) and g.has_edge(t1, t2) and g.has_edge(t2, t3)


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on vertex ids, as an image tuple."""

    mapping: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other: v -> self[other[v]]."""
        return VertexPermutation(tuple(self.mapping[x] for x in other.mapping))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * len(self.mapping)
        for i, x in enumerate(self.mapping):
            inv[x] = i
        return VertexPermutation(tuple(inv))

    @staticmethod
    def identity(n: int) -> "VertexPermutation":
        return VertexPermutation(tuple(range(n)))

    def preserves(self, g: CubicGraph) -> bool:
        return all(g.has_edge(self.mapping[u], self.mapping[v]) for u, v in g.edges)


@dataclass(frozen=True)
class Violation:
    kind: str  # "not-3-regular" | "not-simple" | "disconnected"
    detail: str
    vertices: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


# ---------------------------------------------------------------------------
# graph6 (format of the nauty tool suite; 6-bit big-endian upper triangle,
# printable bytes offset by 63)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, index of first triangle byte)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    b0 = data[0]
    if b0 < 63 or b0 > 126:
        raise Graph6Error(f"out-of-range byte {b0}", 0)
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2:
        raise Graph6Error("truncated size field", 1)
    if data[1] == 126:
        raise Graph6Error("graphs with n >= 258048 are not supported", 1)
    if len(data) < 4:
        raise Graph6Error("truncated size field", len(data))
    n = 0
    for i in range(1, 4):
        b = data[i]
        if b < 63 or b > 126:
            raise Graph6Error(f"out-of-range byte {b}", i)
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> CubicGraph:
    """Decode one graph6 line.  Validation is separate (``validate_cubic``)."""
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    data = line.encode("ascii", errors="replace")
    n, pos = _g6_decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated bit field: need {nbytes} bytes, have {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after bit field", pos + nbytes)
    bits = []
    for i in range(nbytes):
        b = data[pos + i]
        if b < 63 or b > 126:
            raise Graph6Error(f"out-of-range byte {b}", pos + i)
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return CubicGraph.from_edges(n, edges)


def emit_graph6(g: CubicGraph) -> str:
    """Encode a graph as a one-line graph6 string."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise ValueError("graphs with n >= 258048 are not supported")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


def read_corpus(text: str) -> list[str]:
    """graph6 lines of a corpus file; '#'-prefixed comments and blanks skipped."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


# ---------------------------------------------------------------------------
# validation and connectivity
# ---------------------------------------------------------------------------

def validate_cubic(g: CubicGraph) -> ValidationReport:
    violations: list[Violation] = []
    bad_degree = tuple(v for v in range(g.n) if len(g.adjacency[v]) != 3)
    if bad_degree:
        violations.append(
            Violation("not-3-regular", f"{len(bad_degree)} vertices of degree != 3", bad_degree)
        )
    non_simple = []
    for v in range(g.n):
        nbrs = g.adjacency[v]
        if v in nbrs or len(set(nbrs)) != len(nbrs):
            non_simple.append(v)
    if non_simple:
        violations.append(
            Violation("not-simple", "loops or repeated neighbors", tuple(non_simple))
        )
    if g.n > 0 and not _is_connected(g):
        violations.append(Violation("disconnected", "graph is not connected"))
    return ValidationReport(not violations, tuple(violations))


def _is_connected(g: CubicGraph, removed: tuple[int, ...] = ()) -> bool:
    banned = set(removed)
    alive = [v for v in range(g.n) if v not in banned]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def is_three_connected(g: CubicGraph) -> bool:
    """Exhaustive 2-subset removal; fine at the scale this toolkit targets."""
    if g.n < 4 or not _is_connected(g):
        return False
    for pair in itertools.combinations(range(g.n), 2):
        if not _is_connected(g, pair):
            return False
    return True


# ---------------------------------------------------------------------------
# automorphisms and isomorphism (plain backtracking; adequate for n <= 16)
# ---------------------------------------------------------------------------

def _distance_profile(g: CubicGraph, v: int) -> tuple[int, ...]:
    """BFS distance histogram from v, an isomorphism-invariant vertex key."""
    dist = [-1] * g.n
    dist[v] = 0
    order = [v]
    for u in order:
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                order.append(w)
    hist: dict[int, int] = {}
    for d in dist:
        hist[d] = hist.get(d, 0) + 1
    return tuple(hist.get(d, 0) for d in range(g.n))


def _search_order(g: CubicGraph) -> list[int]:
    """BFS order from vertex 0 so each new vertex touches a placed one."""
    order = [0]
    seen = {0}
    for u in order:
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    for v in range(g.n):  # disconnected fallbacks, keeps search total
        if v not in seen:
            seen.add(v)
            order.append(v)
    return order


def _isomorphism_search(
    g: CubicGraph, h: CubicGraph, find_all: bool
) -> list[VertexPermutation]:
    if g.n != h.n or g.m != h.m:
        return []
    n = g.n
    pg = [_distance_profile(g, v) for v in range(n)]
    ph = [_distance_profile(h, v) for v in range(n)]
    if sorted(pg) != sorted(ph):
        return []
    order = _search_order(g)
    candidates = [[w for w in range(n) if ph[w] == pg[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n
    found: list[VertexPermutation] = []

    def extend(i: int) -> bool:
        if i == n:
            found.append(VertexPermutation(tuple(mapping)))
            return not find_all
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(n):
                if mapping[u] >= 0 and g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    extend(0)
    return found


def automorphisms(g: CubicGraph) -> list[VertexPermutation]:
    """The full automorphism group, as an explicit list."""
    return _isomorphism_search(g, g, find_all=True)


def is_isomorphic(g: CubicGraph, h: CubicGraph) -> Optional[VertexPermutation]:
    """A witness isomorphism g -> h, or None."""
    found = _isomorphism_search(g, h, find_all=False)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# path and cycle queries
# ---------------------------------------------------------------------------

def all_path3(g: CubicGraph) -> list[Path3]:
    """Every canonical 3-path of g (distinct endpoints)."""
    out = set()
    for t1, t2 in g.edges:
        for t0 in g.adjacency[t1]:
            if t0 == t2:
                continue
            for t3 in g.adjacency[t2]:
                if t3 == t1 or t3 == t0:
                    continue
                out.add(Path3.of(t0, t1, t2, t3))
    return sorted(out, key=lambda p: p.vertices)


def three_paths_between(g: CubicGraph, u: int, v: int) -> list[Path3]:
    """All 3-paths with endpoint set {u, v}; at most 9 in a cubic graph."""
    if u == v:
        raise ValueError("endpoints must differ")
    out = set()
    for a in g.adjacency[u]:
        if a == v:
            continue
        for b in g.adjacency[v]:
            if b == u or b == a:
                continue
            if g.has_edge(a, b):
                out.add(Path3.of(u, a, b, v))
    return sorted(out, key=lambda p: p.vertices)


def cycles_of_length(g: CubicGraph, k: int) -> list[tuple[int, ...]]:
    """All simple k-cycles, each once up to rotation/reflection.

    Cycles are reported as vertex tuples starting at their smallest vertex,
    with the smaller of the two neighbors second.
    """
    if k < 3:
        raise ValueError("cycle length must be >= 3")
    cycles: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        head = path[-1]
        start = path[0]
        if len(path) == k:
            if g.has_edge(head, start):
                cycles.append(tuple(path))
            return
        for w in g.adjacency[head]:
            # keep start minimal and fix reflection: second vertex < last vertex
            if w <= start or w in path:
                continue
            path.append(w)
            extend(path)
            path.pop()

    for s in range(g.n):
        extend([s])
    return sorted(c for c in cycles if c[1] < c[-1])
