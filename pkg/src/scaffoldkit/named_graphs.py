"""Reference adjacency lists for the graphs the toolkit treats specially.

The Franklin labeling here is the one used by the stored golden scaffold
data (see ``franklin_reference_scaffold``): vertices 0..5 form a hexagon,
6..8 are the second wing of the defining double-hexagon, 9..11 close it up.
"""

from __future__ import annotations

from .graphs import CubicGraph


def k4() -> CubicGraph:
    return CubicGraph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def k33() -> CubicGraph:
    return CubicGraph.from_edges(6, [(i, j + 3) for i in range(3) for j in range(3)])


def prism(k: int = 3) -> CubicGraph:
    """Circular ladder: two k-cycles joined by spokes (k=3 triangular prism)."""
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return CubicGraph.from_edges(2 * k, edges)


def cube_graph() -> CubicGraph:
    return prism(4)


def hexagonal_prism() -> CubicGraph:
    return prism(6)


def petersen_graph() -> CubicGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + ((i + 2) % 5)))
        edges.append((i, 5 + i))
    return CubicGraph.from_edges(10, edges)


# Franklin graph, reference labeling.  Hexagon 0-1-2-3-4-5, second hexagon
# 6-1-2-3-7-8, rim closed by 9, 10, 11.
_FRANKLIN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
    (6, 1), (3, 7), (7, 8), (8, 6), (4, 8),
    (9, 0), (9, 7), (9, 11), (10, 2), (10, 6), (10, 11), (11, 5),
]


def franklin_graph() -> CubicGraph:
    return CubicGraph.from_edges(12, _FRANKLIN_EDGES)


def franklin_reference_scaffold() -> dict[tuple[int, int], int]:
    """Scaffold edge -> multiplicity for the Franklin graph's polyhedral
    embedding, in the reference labeling.

    The 12 single scaffold edges run parallel to the edges of the three
    square faces; the 12 double ones are the chords of the four hexagonal
    faces.
    """
    singles = [
        (0, 5), (5, 11), (11, 9), (9, 0),
        (1, 2), (2, 10), (10, 6), (6, 1),
        (3, 7), (7, 8), (8, 4), (4, 3),
    ]
    doubles = [
        (0, 3), (1, 4), (2, 5),
        (1, 7), (0, 8), (9, 6),
        (9, 2), (7, 10), (3, 11),
        (6, 5), (8, 11), (4, 10),
    ]
    out = {tuple(sorted(e)): 1 for e in singles}
    out.update({tuple(sorted(e)): 2 for e in doubles})
    return out


def franklin_reference_faces() -> list[list[int]]:
    """Face cycles of the Franklin graph's polyhedral embedding (Euler genus
    1): the three squares plus four hexagons, reference labeling."""
    return [
        [1, 2, 10, 6],
        [0, 5, 11, 9],
        [3, 4, 8, 7],
        [0, 1, 2, 3, 4, 5],
        [1, 0, 9, 7, 8, 6],
        [9, 7, 3, 2, 10, 11],
        [6, 8, 4, 5, 11, 10],
    ]


def tietze_graph() -> CubicGraph:
    """Petersen with vertex 0 expanded into a triangle."""
    p = petersen_graph()
    a, b, c = p.adjacency[0]
    edges = [e for e in p.edges if 0 not in e]
    # new vertices 0, 10, 11 take over 0's three edge-ends
    edges += [(0, 10), (10, 11), (11, 0), (0, a), (10, b), (11, c)]
    return CubicGraph.from_edges(12, edges)


def frucht_graph() -> CubicGraph:
    """Asymmetric cubic graph on 12 vertices (trivial automorphism group)."""
    lcf = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2]
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(i, (i + lcf[i]) % 12) for i in range(12)]
    return CubicGraph.from_edges(12, {tuple(sorted(e)) for e in edges})


def durer_graph() -> CubicGraph:
    """Generalized Petersen graph GP(6, 2)."""
    edges = []
    for i in range(6):
        edges.append((i, (i + 1) % 6))
        edges.append((6 + i, 6 + ((i + 2) % 6)))
        edges.append((i, 6 + i))
    return CubicGraph.from_edges(12, edges)


def truncated_tetrahedron() -> CubicGraph:
    """Each K4 vertex blown up into a triangle."""
    # triangle t has vertices 3t..3t+2; corner (t, j) attaches to (j, t)
    edges = []
    tri = {}
    for t in range(4):
        others = [j for j in range(4) if j != t]
        for k, j in enumerate(others):
            tri[(t, j)] = 3 * t + k
        edges += [(3 * t, 3 * t + 1), (3 * t + 1, 3 * t + 2), (3 * t, 3 * t + 2)]
    for t in range(4):
        for j in range(t + 1, 4):
            edges.append((tri[(t, j)], tri[(j, t)]))
    return CubicGraph.from_edges(12, edges)
