"""Embedding schemes, face tracing, polyhedrality, and facial-system equivalence.

An embedding of a graph in a closed surface (orientable or not) is encoded
combinatorially by a rotation at each vertex (cyclic order of incident
edges) plus a sign on each edge.  Faces are recovered by the standard
traversal: walk a directed edge carrying an orientation bit, flip the bit
on negative edges, and turn to the rotation successor or predecessor of the
arrival edge depending on the bit.  Each face is traced exactly twice, once
per boundary orientation; the traversal state space is (dart, bit) with
4m = 6n states for a cubic graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import CubicGraph, VertexPermutation, automorphisms


@dataclass(frozen=True)
class EmbeddingScheme:
    """Rotation + signature data for one embedding.

    rotation[v] is the cyclic neighbor order at v (a triple); signature[i]
    is +1 or -1 for edge i in the graph's edge indexing.  Normalized form
    puts +1 on every edge of the lowest-index BFS tree.
    """

    rotation: tuple[tuple[int, int, int], ...]
    signature: tuple[int, ...]

    def is_valid_for(self, g: CubicGraph) -> bool:
        if len(self.rotation) != g.n or len(self.signature) != g.m:
            return False
        if any(s not in (-1, 1) for s in self.signature):
            return False
        return all(
            sorted(self.rotation[v]) == list(g.adjacency[v]) for v in range(g.n)
        )


@dataclass(frozen=True)
class FacialWalk:
    """One face boundary, as a closed vertex walk in canonical form.

    Canonical form is the lexicographically least rotation among the walk
    and its reversal, so a walk and its mirror compare equal.
    """

    vertices: tuple[int, ...]

    @staticmethod
    def of(vertices: Sequence[int]) -> "FacialWalk":
        return FacialWalk(canonical_cycle(tuple(vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def darts(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(d)) for d in self.darts)

    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def canonical_cycle(vs: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation of vs or of its reversal."""
    L = len(vs)
    rev = vs[::-1]
    best = vs
    for seq in (vs, rev):
        for i in range(L):
            cand = seq[i:] + seq[:i]
            if cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class FacialSystem:
    """The multiset of face boundary walks of one embedding."""

    n: int
    walks: tuple[FacialWalk, ...]

    @staticmethod
    def of(n: int, walks: Iterable[FacialWalk]) -> "FacialSystem":
        return FacialSystem(n, tuple(sorted(walks, key=lambda w: (len(w), w.vertices))))

    @property
    def face_count(self) -> int:
        return len(self.walks)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "faces": [list(w.vertices) for w in self.walks]}

    @staticmethod
    def from_json_dict(d: dict) -> "FacialSystem":
        return FacialSystem.of(int(d["n"]), (FacialWalk.of(f) for f in d["faces"]))


@dataclass(frozen=True)
class PolyhedralityReport:
    ok: bool
    violations: tuple[tuple, ...] = ()


class MalformedSystemError(ValueError):
    pass


# ---------------------------------------------------------------------------
# face tracing
# ---------------------------------------------------------------------------

def trace_faces(g: CubicGraph, scheme: EmbeddingScheme) -> FacialSystem:
    """Trace all face boundaries of (g, scheme).

    Deterministic: walks come out in canonical form, sorted.  Raises if the
    traversal orbits fail to pair into faces, which would mean the scheme
    data is not a valid embedding encoding.
    """
    n = g.n
    adj = g.adjacency
    rot = scheme.rotation
    neg = [1 if s < 0 else 0 for s in scheme.signature]
    eidx = g.edge_index

    ndarts = 3 * n
    head = [adj[d // 3][d % 3] for d in range(ndarts)]
    edge_of = [
        eidx[(min(d // 3, head[d]), max(d // 3, head[d]))] for d in range(ndarts)
    ]
    dart_id = {}
    for u in range(n):
        for k, v in enumerate(adj[u]):
            dart_id[(u, v)] = 3 * u + k
    rev = [dart_id[(head[d], d // 3)] for d in range(ndarts)]
    # rotation position of each in-neighbor at each vertex
    rotpos = [{u: i for i, u in enumerate(rot[v])} for v in range(n)]

    def next_state(state: int) -> int:
        d, o = state >> 1, state & 1
        u, v = d // 3, head[d]
        o2 = o ^ neg[edge_of[d]]
        p = rotpos[v][u]
        w = rot[v][(p + 1) % 3] if o2 == 0 else rot[v][(p - 1) % 3]
        return (dart_id[(v, w)] << 1) | o2

    def mirror(state: int) -> int:
        d, o = state >> 1, state & 1
        return (rev[d] << 1) | (o ^ neg[edge_of[d]] ^ 1)

    visited = [False] * (2 * ndarts)
    walks = []
    for s0 in range(2 * ndarts):
        if visited[s0]:
            continue
        orbit = []
        s = s0
        while not visited[s]:
            visited[s] = True
            orbit.append(s)
            s = next_state(s)
        if s != s0:
            raise MalformedSystemError("face traversal is not a permutation")
        mirror_states = {mirror(x) for x in orbit}
        if mirror_states & set(orbit):
            raise MalformedSystemError("self-mirror face orbit")
        for x in mirror_states:
            visited[x] = True
        walks.append(FacialWalk.of(tuple((x >> 1) // 3 for x in orbit)))
    return FacialSystem.of(n, walks)


def euler_genus(g: CubicGraph, fs: FacialSystem) -> int:
    """2 - n + m - f; 0 sphere, 1 projective plane, 2 Klein bottle/torus."""
    genus = 2 - g.n + g.m - fs.face_count
    if genus < 0:
        raise MalformedSystemError(f"negative Euler genus {genus}")
    return genus


# ---------------------------------------------------------------------------
# polyhedrality
# ---------------------------------------------------------------------------

def is_polyhedral(g: CubicGraph, fs: FacialSystem) -> PolyhedralityReport:
    """Check that every walk is a cycle and any two walks meet properly.

    Proper intersection is empty, one vertex, or one edge (the edge's two
    endpoints plus the edge itself).  Violations carry full witnesses.
    """
    violations: list[tuple] = []
    for w in fs.walks:
        if not w.is_cycle():
            violations.append(("walk-not-cycle", w))
    walks = fs.walks
    vsets = [frozenset(w.vertices) for w in walks]
    esets = [frozenset(tuple(sorted(d)) for d in w.darts) for w in walks]
    for i in range(len(walks)):
        for j in range(i + 1, len(walks)):
            sv = vsets[i] & vsets[j]
            se = esets[i] & esets[j]
            proper = (
                len(sv) == 0
                and len(se) == 0
                or len(sv) == 1
                and len(se) == 0
                or len(sv) == 2
                and len(se) == 1
                and set(next(iter(se))) == sv
            )
            if not proper:
                violations.append(
                    ("improper-pair", walks[i], walks[j], tuple(sorted(sv)), tuple(sorted(se)))
                )
    return PolyhedralityReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# equivalence up to graph automorphisms
# ---------------------------------------------------------------------------

def _walk_key(fs: FacialSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(w.vertices for w in fs.walks))


def apply_permutation(fs: FacialSystem, perm: VertexPermutation) -> FacialSystem:
    return FacialSystem.of(
        fs.n, (FacialWalk.of([perm[v] for v in w.vertices]) for w in fs.walks)
    )


def canonical_system(
    g: CubicGraph,
    fs: FacialSystem,
    auts: Optional[list[VertexPermutation]] = None,
) -> bytes:
    """Deduplication key: minimal serialized walk set over the automorphism
    group.  Equal keys exactly characterize equivalent systems."""
    if auts is None:
        auts = automorphisms(g)
    best = None
    for sigma in auts:
        key = _walk_key(apply_permutation(fs, sigma))
        if best is None or key < best:
            best = key
    return repr(best).encode()


def systems_equivalent(
    g: CubicGraph,
    a: FacialSystem,
    b: FacialSystem,
    auts: Optional[list[VertexPermutation]] = None,
) -> bool:
    """True iff some automorphism of g maps the walk set of a onto b's."""
    if a.face_count != b.face_count:
        return False
    if auts is None:
        auts = automorphisms(g)
    target = _walk_key(b)
    return any(_walk_key(apply_permutation(a, sigma)) == target for sigma in auts)
