"""Exhaustive enumeration of the polyhedral embeddings of a cubic graph.

The scheme space is normalized over a fixed spanning tree: flipping every
edge sign at a vertex (and reversing its rotation) never changes the face
walks, so every embedding has a representative with +1 on all tree edges.
That leaves 2^n rotation choices times 2^(m-n+1) sign choices, scanned in
index order.  Survivors of the vectorized filter are re-traced with the
plain tracer, verified, and deduplicated up to graph automorphisms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

from ._fastscan import FastScan, bfs_tree_edges
from .embeddings import (
    EmbeddingScheme,
    FacialSystem,
    canonical_system,
    euler_genus,
    is_polyhedral,
    trace_faces,
)
from .graphs import CubicGraph, automorphisms

DEFAULT_MAX_N = 14
_ENV_MAX_N = "SCAFFOLDKIT_MAX_N"


class SizeGuardError(ValueError):
    pass


def resolved_max_n(max_n: Optional[int] = None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get(_ENV_MAX_N)
    return int(env) if env else DEFAULT_MAX_N


def scheme_count(g: CubicGraph) -> int:
    return 1 << (g.n + g.m - g.n + 1)


def scheme_from_index(g: CubicGraph, idx: int) -> EmbeddingScheme:
    """Scheme for one index: low n bits pick rotations, the rest pick
    non-tree edge signs (tree edges are +1)."""
    rotation = []
    for v in range(g.n):
        a, b, c = g.adjacency[v]
        rotation.append((a, b, c) if (idx >> v) & 1 == 0 else (a, c, b))
    _, nontree = bfs_tree_edges(g)
    signature = [1] * g.m
    for t, e in enumerate(nontree):
        if (idx >> (g.n + t)) & 1:
            signature[e] = -1
    return EmbeddingScheme(tuple(rotation), tuple(signature))


def enumerate_schemes(g: CubicGraph) -> Iterator[EmbeddingScheme]:
    """All normalized schemes, in deterministic index order."""
    for idx in range(scheme_count(g)):
        yield scheme_from_index(g, idx)


@dataclass(frozen=True)
class EmbeddingCensus:
    graph: CubicGraph
    systems: tuple[FacialSystem, ...]  # pairwise inequivalent, all polyhedral
    scheme_count_scanned: int
    genus_histogram: dict[int, int]

    def to_json_dict(self) -> dict:
        from .graphs import emit_graph6

        return {
            "graph6": emit_graph6(self.graph),
            "systems": [fs.to_json_dict() for fs in self.systems],
            "genus_histogram": {str(k): v for k, v in sorted(self.genus_histogram.items())},
            "schemes_scanned": self.scheme_count_scanned,
        }


def labeled_polyhedral_systems(
    g: CubicGraph,
    max_n: Optional[int] = None,
    batch_size: int = 1 << 16,
) -> list[FacialSystem]:
    """All distinct labeled polyhedral facial systems of g (no quotient by
    automorphisms); deterministic order."""
    bound = resolved_max_n(max_n)
    if g.n > bound:
        raise SizeGuardError(f"n={g.n} exceeds the configured bound {bound}")

    scan = FastScan(g)
    total = scan.scheme_count
    candidates: list[int] = []
    for start in range(0, total, batch_size):
        flagged, suspicious = scan.scan(start, min(start + batch_size, total))
        candidates.extend(flagged)
        candidates.extend(suspicious)
    candidates.sort()

    by_exact: dict[tuple, FacialSystem] = {}
    for idx in candidates:
        fs = trace_faces(g, scheme_from_index(g, idx))
        if not is_polyhedral(g, fs).ok:
            continue
        by_exact.setdefault(tuple(sorted(w.vertices for w in fs.walks)), fs)
    return [fs for _, fs in sorted(by_exact.items())]


def enumerate_polyhedral(
    g: CubicGraph,
    max_n: Optional[int] = None,
    batch_size: int = 1 << 16,
) -> EmbeddingCensus:
    """Census of all inequivalent polyhedral facial systems of g."""
    labeled = labeled_polyhedral_systems(g, max_n=max_n, batch_size=batch_size)
    auts = automorphisms(g)
    by_class: dict[bytes, FacialSystem] = {}
    for fs in labeled:
        key = canonical_system(g, fs, auts)
        by_class.setdefault(key, fs)

    systems = tuple(fs for _, fs in sorted(by_class.items()))
    hist: dict[int, int] = {}
    for fs in systems:
        e = euler_genus(g, fs)
        hist[e] = hist.get(e, 0) + 1
    return EmbeddingCensus(g, systems, scheme_count(g), hist)
