"""Extended graphs: the input graph plus its scaffold edges.

A scaffold edge [u w] records that some 3-path (u t1 t2 w) lies on a face
boundary.  Scaffold edges carry multiplicity 1 or 2; two witnesses is the
ceiling, and it occurs exactly when the endpoint pair is an antipodal pair
of a hexagonal face or the pair across an edge shared by two square faces.
Graph edges and scaffold edges are kept in disjoint classes, so a scaffold
edge parallel to a graph edge (square faces force those) is representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .embeddings import FacialSystem
from .graphs import CubicGraph, Path3, emit_graph6, parse_graph6


class CorruptSystemError(ValueError):
    pass


@dataclass(frozen=True)
class ScaffoldEdge:
    u: int
    w: int
    multiplicity: int
    witnesses: tuple[Path3, ...] = ()

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.w)


@dataclass(frozen=True)
class ExtendedGraph:
    graph: CubicGraph
    scaffold: tuple[ScaffoldEdge, ...]

    @staticmethod
    def of(graph: CubicGraph, edges: Iterable[ScaffoldEdge]) -> "ExtendedGraph":
        return ExtendedGraph(graph, tuple(sorted(edges, key=lambda s: s.pair)))

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        return {s.pair: s.multiplicity for s in self.scaffold}

    def multiplicity(self, u: int, w: int) -> int:
        pair = (u, w) if u < w else (w, u)
        for s in self.scaffold:
            if s.pair == pair:
                return s.multiplicity
        return 0

    def to_json_dict(self, include_witnesses: bool = True) -> dict:
        out = {"graph6": emit_graph6(self.graph), "scaffold": []}
        for s in self.scaffold:
            rec = {"u": s.u, "w": s.w, "multiplicity": s.multiplicity}
            if include_witnesses and s.witnesses:
                rec["witnesses"] = [list(p.vertices) for p in s.witnesses]
            out["scaffold"].append(rec)
        return out

    @staticmethod
    def from_json_dict(d: dict) -> "ExtendedGraph":
        g = parse_graph6(d["graph6"])
        edges = []
        for rec in d["scaffold"]:
            u, w = sorted((int(rec["u"]), int(rec["w"])))
            witnesses = tuple(
                Path3.of(*p) for p in rec.get("witnesses", [])
            )
            edges.append(ScaffoldEdge(u, w, int(rec["multiplicity"]), witnesses))
        return ExtendedGraph.of(g, edges)


def facial_three_paths(fs: FacialSystem) -> list[Path3]:
    """Every 3-path occurring as four consecutive vertices of some walk.

    Triangle faces contribute nothing (the window closes), and windows are
    deduplicated across walks and directions.
    """
    out = set()
    for w in fs.walks:
        vs = w.vertices
        L = len(vs)
        if L < 4:
            continue
        for i in range(L):
            t0, t1, t2, t3 = (vs[i], vs[(i + 1) % L], vs[(i + 2) % L], vs[(i + 3) % L])
            if t0 != t3:
                out.add(Path3.of(t0, t1, t2, t3))
    return sorted(out, key=lambda p: p.vertices)


def build_extended(g: CubicGraph, fs: FacialSystem) -> ExtendedGraph:
    """The extended graph of a polyhedral facial system."""
    by_pair: dict[tuple[int, int], list[Path3]] = {}
    for p in facial_three_paths(fs):
        by_pair.setdefault(p.ends, []).append(p)
    edges = []
    for (u, w), witnesses in sorted(by_pair.items()):
        if u == w:
            raise CorruptSystemError(f"scaffold self-loop at vertex {u}")
        if len(witnesses) > 2:
            raise CorruptSystemError(
                f"{len(witnesses)} witness 3-paths for scaffold pair {(u, w)}; "
                "more than two is impossible for a polyhedral system"
            )
        if len(witnesses) == 2:
            a, b = witnesses
            if set(a.internal) & set(b.internal):
                raise CorruptSystemError(
                    f"witnesses for double scaffold pair {(u, w)} share an internal vertex"
                )
        edges.append(ScaffoldEdge(u, w, len(witnesses), tuple(witnesses)))
    return ExtendedGraph.of(g, edges)


def extended_equal(a: ExtendedGraph, b: ExtendedGraph) -> bool:
    """Equality as endpoint-pair -> multiplicity maps; witnesses ignored."""
    if a.graph != b.graph:
        raise ValueError("extended graphs live on different underlying graphs")
    return a.multiplicities == b.multiplicities


def relabel_extended(ext: ExtendedGraph, perm) -> ExtendedGraph:
    """Image of an extended graph under a vertex permutation."""
    g2 = ext.graph.relabel(perm)
    edges = []
    for s in ext.scaffold:
        u, w = sorted((perm[s.u], perm[s.w]))
        witnesses = tuple(Path3.of(*(perm[v] for v in p.vertices)) for p in s.witnesses)
        edges.append(ScaffoldEdge(u, w, s.multiplicity, witnesses))
    return ExtendedGraph.of(g2, edges)
