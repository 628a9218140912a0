"""Corpus pipelines: per-graph verification records and their aggregation.

``verify_graph`` runs the whole evidence chain for one graph: census
enumeration, pairwise injectivity of extended graphs, reconstruction
round-trips, the facial-cycle structure suite (forced triangles and
squares, induced long faces, scaffold multiplicity bounds and the double
characterization), and the shape checks tying surviving disjunctions to
butterflies and to the two special graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .embeddings import FacialSystem, systems_equivalent
from .enumeration import enumerate_polyhedral
from .extended import build_extended, extended_equal
from .graphs import (
    CubicGraph,
    automorphisms,
    cycles_of_length,
    emit_graph6,
    three_paths_between,
    validate_cubic,
)
from .reconstruct import (
    ReconstructionError,
    detect_butterflies,
    reconstruct,
    recognize_special,
)


@dataclass
class GraphRecord:
    graph6: str
    census_size: int = 0
    genus_histogram: dict[int, int] = field(default_factory=dict)
    injectivity_ok: bool = True
    roundtrip_ok: bool = True
    branch_histogram: dict[int, int] = field(default_factory=dict)
    specials: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.injectivity_ok and self.roundtrip_ok and not self.violations

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "census_size": self.census_size,
            "genus_histogram": {str(k): v for k, v in sorted(self.genus_histogram.items())},
            "injectivity_ok": self.injectivity_ok,
            "roundtrip_ok": self.roundtrip_ok,
            "branch_histogram": {str(k): v for k, v in sorted(self.branch_histogram.items())},
            "specials": self.specials,
            "violations": self.violations,
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
        }


def _cycle_positions(walk: tuple[int, ...]) -> dict[int, int]:
    return {v: i for i, v in enumerate(walk)}


def check_face_structure(g: CubicGraph, fs: FacialSystem) -> list[str]:
    """The per-system structure suite; returns human-readable violations."""
    out: list[str] = []
    facial = {w.vertices for w in fs.walks}
    from .embeddings import canonical_cycle

    for tri in cycles_of_length(g, 3):
        if canonical_cycle(tri) not in facial:
            out.append(f"3-cycle {tri} is not facial")
    if not (g.n == 4 and g.m == 6):
        for quad in cycles_of_length(g, 4):
            if canonical_cycle(quad) not in facial:
                out.append(f"4-cycle {quad} is not facial")

    for w in fs.walks:
        vs = w.vertices
        L = len(vs)
        if L < 5:
            continue
        for i in range(L):
            for j in range(i + 1, L):
                dist = min(j - i, L - (j - i))
                if dist < 2:
                    continue
                u, v = vs[i], vs[j]
                if g.has_edge(u, v):
                    out.append(f"facial cycle {vs} has chord ({u} {v})")
                for x in set(g.adjacency[u]) & set(g.adjacency[v]):
                    if dist == 2 and x == vs[(i + 1) % L] and (j - i) % L == 2:
                        continue
                    if dist == 2 and x == vs[(j + 1) % L] and (i - j) % L == 2:
                        continue
                    out.append(f"facial cycle {vs} shortcut ({u} {x} {v})")

    ext = build_extended(g, fs)
    face_cycles = [w.vertices for w in fs.walks]
    for s in ext.scaffold:
        if s.multiplicity > 2:
            out.append(f"scaffold multiplicity {s.multiplicity} at {s.pair}")
        if s.multiplicity == 2:
            u, w_ = s.pair
            if g.has_edge(u, w_):
                squares = [
                    c for c in face_cycles
                    if len(c) == 4 and u in c and w_ in c
                    and abs(c.index(u) - c.index(w_)) in (1, 3)
                ]
                if len(squares) != 2:
                    out.append(
                        f"double scaffold {s.pair} parallel to an edge is not "
                        f"shared by two square faces"
                    )
            else:
                hexes = []
                for c in face_cycles:
                    if len(c) == 6 and u in c and w_ in c:
                        pos = _cycle_positions(c)
                        if (pos[u] - pos[w_]) % 6 == 3:
                            hexes.append(c)
                if len(hexes) != 1:
                    out.append(
                        f"double scaffold {s.pair} is not the antipodal pair "
                        f"of exactly one hexagonal face"
                    )
    return out


def verify_graph(g: CubicGraph, max_n: Optional[int] = None) -> GraphRecord:
    rec = GraphRecord(graph6=emit_graph6(g))
    t0 = time.monotonic()
    census = enumerate_polyhedral(g, max_n=max_n)
    rec.census_size = len(census.systems)
    rec.genus_histogram = dict(census.genus_histogram)

    auts = automorphisms(g)
    exts = [build_extended(g, fs) for fs in census.systems]
    for i in range(len(exts)):
        for j in range(i + 1, len(exts)):
            if extended_equal(exts[i], exts[j]):
                rec.injectivity_ok = False
                rec.violations.append(
                    f"inequivalent systems {i} and {j} share an extended graph"
                )

    has_hexagon = bool(cycles_of_length(g, 6))
    for i, (fs, ext) in enumerate(zip(census.systems, exts)):
        try:
            out = reconstruct(g, ext)
        except ReconstructionError as exc:
            rec.roundtrip_ok = False
            rec.violations.append(f"system {i}: reconstruction failed: {exc}")
            continue
        rec.branch_histogram[out.branch_count] = (
            rec.branch_histogram.get(out.branch_count, 0) + 1
        )
        if out.special != "none" and out.special not in rec.specials:
            rec.specials.append(out.special)
        if not systems_equivalent(g, out.system, fs, auts):
            rec.roundtrip_ok = False
            rec.violations.append(f"system {i}: round-trip returned a different embedding")
        if build_extended(g, out.system).multiplicities != ext.multiplicities:
            rec.roundtrip_ok = False
            rec.violations.append(f"system {i}: rebuilt scaffold differs")
        unique_witness_input = all(
            len(three_paths_between(g, s.u, s.w)) == 1 for s in ext.scaffold
        )
        if unique_witness_input and out.branch_count:
            rec.violations.append(f"system {i}: branching on a unique-witness instance")
        if not has_hexagon and out.branch_count:
            rec.violations.append(f"system {i}: branching although the graph has no 6-cycles")
        if out.branch_count and not detect_butterflies(ext):
            rec.violations.append(f"system {i}: branching without a butterfly in the input")
        if out.unsolved_disjunction and recognize_special(g) == "none":
            rec.violations.append(
                f"system {i}: a disjunction survived on a non-special graph"
            )
        rec.violations.extend(
            f"system {i}: {v}" for v in check_face_structure(g, fs)
        )

    rec.wall_time = time.monotonic() - t0
    return rec


def verify_graph6_line(line: str, max_n: Optional[int] = None) -> GraphRecord:
    from .enumeration import SizeGuardError
    from .graphs import Graph6Error, parse_graph6

    def failed(*violations: str) -> GraphRecord:
        rec = GraphRecord(graph6=line.strip())
        rec.violations = list(violations)
        rec.injectivity_ok = rec.roundtrip_ok = False
        return rec

    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        return failed(f"unparseable graph6: {exc}")
    report = validate_cubic(g)
    if not report.ok:
        return failed(*(f"invalid graph: {v.kind}" for v in report.violations))
    try:
        return verify_graph(g, max_n=max_n)
    except SizeGuardError as exc:
        return failed(str(exc))


def aggregate(records: list[GraphRecord]) -> dict:
    agg = {
        "graphs": len(records),
        "failures": sum(0 if r.ok else 1 for r in records),
        "census_total": sum(r.census_size for r in records),
        "branch_histogram": {},
        "specials": sorted({s for r in records for s in r.specials}),
    }
    for r in records:
        for k, v in r.branch_histogram.items():
            agg["branch_histogram"][str(k)] = agg["branch_histogram"].get(str(k), 0) + v
    agg["branch_histogram"] = dict(sorted(agg["branch_histogram"].items()))
    return agg
