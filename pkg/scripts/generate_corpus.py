#!/usr/bin/env python3
"""Generate the graph6 corpora used by the verification harness and tests.

Connected cubic graphs are enumerated exhaustively for n <= 10 (1, 2, 5, 19
isomorphism classes) by backtracking over labeled adjacency in BFS-discovery
order, then deduplicated up to isomorphism.  The n = 12 spot corpus is a
curated list of named graphs.  A random asymmetric 14-vertex graph is frozen
for the automorphism tests.

Usage: python scripts/generate_corpus.py [--outdir corpora]
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from scaffoldkit.graphs import (
    CubicGraph,
    automorphisms,
    cycles_of_length,
    emit_graph6,
    is_isomorphic,
    validate_cubic,
)
from scaffoldkit.named_graphs import (
    durer_graph,
    franklin_graph,
    frucht_graph,
    hexagonal_prism,
    tietze_graph,
    truncated_tetrahedron,
)


def labeled_cubic_graphs(n: int):
    """All connected labeled cubic graphs on [0, n) whose labels appear in
    discovery order (each graph once per such labeling)."""
    adj = [[] for _ in range(n)]

    def lowest_unfilled():
        for v in range(n):
            if len(adj[v]) < 3:
                return v
        return None

    out = []

    def rec(introduced: int, active: int, min_next: int):
        u = lowest_unfilled()
        if u is None:
            out.append(CubicGraph(n, tuple(tuple(sorted(b)) for b in adj)))
            return
        if u >= introduced:
            return
        if u != active:
            min_next = 0  # the increasing-neighbor order is per active vertex
        for v in range(max(min_next, u + 1), introduced):
            if len(adj[v]) < 3 and v not in adj[u]:
                adj[u].append(v)
                adj[v].append(u)
                rec(introduced, u, v + 1)
                adj[u].pop()
                adj[v].pop()
        if introduced < n:
            v = introduced
            adj[u].append(v)
            adj[v].append(u)
            rec(introduced + 1, u, v + 1)
            adj[u].pop()
            adj[v].pop()

    # vertex 0's neighborhood is forced up to relabeling
    for v in (1, 2, 3):
        adj[0].append(v)
        adj[v].append(0)
    rec(4, 0, 0)
    return out


def invariant_key(g: CubicGraph):
    return tuple(len(cycles_of_length(g, k)) for k in (3, 4, 5, 6))


def connected_cubic_classes(n: int) -> list[CubicGraph]:
    buckets: dict[tuple, list[CubicGraph]] = {}
    for g in labeled_cubic_graphs(n):
        key = invariant_key(g)
        reps = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    classes = [g for reps in buckets.values() for g in reps]
    return sorted(classes, key=emit_graph6)


def random_cubic(n: int, rng: random.Random) -> CubicGraph | None:
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    edges = set()
    for i in range(0, len(stubs), 2):
        u, v = stubs[i], stubs[i + 1]
        if u == v or (min(u, v), max(u, v)) in edges:
            return None
        edges.add((min(u, v), max(u, v)))
    g = CubicGraph.from_edges(n, edges)
    return g if validate_cubic(g).ok else None


def asymmetric_cubic(n: int, seed: int = 0) -> CubicGraph:
    rng = random.Random(seed)
    while True:
        g = random_cubic(n, rng)
        if g is not None and len(automorphisms(g)) == 1:
            return g


def write_corpus(path: Path, header: str, graphs: list[CubicGraph]) -> None:
    lines = [f"# {header}"]
    lines += [emit_graph6(g) for g in graphs]
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(graphs)} graphs)")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default=str(Path(__file__).resolve().parent.parent / "corpora"))
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for n in (4, 6, 8, 10):
        classes = connected_cubic_classes(n)
        write_corpus(
            outdir / f"cubic_n{n:02d}.g6",
            f"all connected cubic graphs on {n} vertices, up to isomorphism",
            classes,
        )

    spot = [
        franklin_graph(),
        hexagonal_prism(),
        durer_graph(),
        frucht_graph(),
        tietze_graph(),
        truncated_tetrahedron(),
    ]
    assert all(validate_cubic(g).ok for g in spot)
    assert len({emit_graph6(g) for g in spot}) == len(spot)
    write_corpus(
        outdir / "spot_n12.g6",
        "spot corpus: named 12-vertex cubic graphs (Franklin first)",
        spot,
    )

    g14 = asymmetric_cubic(14, seed=7)
    write_corpus(
        outdir / "asymmetric_n14.g6",
        "a 14-vertex cubic graph with trivial automorphism group",
        [g14],
    )


if __name__ == "__main__":
    main()
