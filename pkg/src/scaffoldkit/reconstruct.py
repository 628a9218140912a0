"""Rebuild the facial cycle system of a polyhedral embedding from its
extended graph.

The state is a three-valued assignment (facial / non-facial / unknown)
over all 3-paths of the graph.  Propagation drives it to a fixpoint with
rules that are each individually sound for polyhedral systems:

* no-scaffold: a 3-path whose endpoint pair carries no scaffold edge is
  non-facial (that is what the scaffold records).
* triangle-face: every 3-cycle is a face, and it consumes its three
  corners, so any 3-path through a triangle corner is non-facial.
* quad-face: every 4-cycle is a face when the graph is not K4; its four
  windows are facial.
* unique-continuation: each corner (2-path) lies on exactly one face, so
  of the two ways to extend it past an end, exactly one is facial.
* chord-shortcut: a facial window (a b c d) forbids the chords (a c) and
  (b d), any second common neighbor of a and c (or b and d), and any
  common neighbor of a and d beyond the one that closes a pentagon.
* square-closure / pentagon-closure: a facial window whose endpoints are
  adjacent closes into a 4-cycle face; one with a unique distance-2
  connection closes into a 5-cycle face.  All windows of the closed face
  are facial.
* hexagon-closure: two internally disjoint facial 3-paths between
  nonadjacent endpoints lie on one hexagonal face; all six windows are
  facial.  Two facial 3-paths between the same endpoints sharing an
  internal vertex are impossible.
* count / unique-witness / elimination: the scaffold multiplicity of a
  pair is exactly the number of facial 3-paths between its endpoints
  (0 when absent, else 1 or 2).

Where propagation stalls, the search branches on an unresolved
continuation disjunction (fork-first), explores both sides, and keeps
every completion whose assembled walk set is polyhedral and rebuilds the
input extended graph exactly.  All completions must agree up to graph
automorphisms; for the two graphs where a disjunction genuinely survives
(checked by ``recognize_special``) there are two mirror-image completions
and either represents the unique embedding class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .embeddings import (
    FacialSystem,
    FacialWalk,
    canonical_cycle,
    is_polyhedral,
    systems_equivalent,
)
from .extended import CorruptSystemError, ExtendedGraph, build_extended
from .graphs import (
    CubicGraph,
    Path3,
    all_path3,
    cycles_of_length,
    is_isomorphic,
    validate_cubic,
)
from .named_graphs import franklin_graph, petersen_graph

UNKNOWN, FACIAL, NONFACIAL = 0, 1, 2
_VALUE_NAMES = {FACIAL: "facial", NONFACIAL: "nonfacial"}


class ReconstructionError(Exception):
    pass


class InvalidInputError(ReconstructionError):
    pass


class NotExtendedGraphError(ReconstructionError):
    pass


class UniquenessViolationError(ReconstructionError):
    pass


class BranchDepthExceededError(ReconstructionError):
    pass


class AssemblyError(ReconstructionError):
    pass


@dataclass(frozen=True)
class ContradictionReport:
    rule: str
    detail: str
    paths: tuple[Path3, ...] = ()


class ContradictionError(ReconstructionError):
    def __init__(self, report: ContradictionReport):
        super().__init__(f"{report.rule}: {report.detail}")
        self.report = report


@dataclass(frozen=True)
class Fork:
    """Two scaffold edges from t1 to both far ends of the 2-fan at t3."""

    t1: int
    t2: int
    t3: int
    t4a: int
    t4b: int


@dataclass(frozen=True)
class Butterfly:
    """Two 6-cycles sharing the path t1-t2-t3, plus the scaffold edges
    [t1 t4], [t1 t4'], [t0 t3] (B2) and also [t0' t3] (B1)."""

    kind: str  # "B1" | "B2"
    t0: int
    t1: int
    t2: int
    t3: int
    t4: int
    t5: int
    t0p: int
    t4p: int
    t5p: int


# ---------------------------------------------------------------------------
# precomputed tables for one (graph, scaffold) instance
# ---------------------------------------------------------------------------

class _Tables:
    def __init__(self, g: CubicGraph, ext: ExtendedGraph):
        self.g = g
        self.paths: list[Path3] = all_path3(g)
        self.index: dict[Path3, int] = {p: i for i, p in enumerate(self.paths)}
        self.pair_of: list[tuple[int, int]] = [p.ends for p in self.paths]
        self.pair_paths: dict[tuple[int, int], list[int]] = {}
        for i, pr in enumerate(self.pair_of):
            self.pair_paths.setdefault(pr, []).append(i)
        self.mult: dict[tuple[int, int], int] = ext.multiplicities

        # corner constraints: ordered corner (a, b, c) extended past c has
        # exactly one true literal among its two candidates
        self.constraints: list[tuple] = []  # pairs of ("T",) | ("P", pid)
        self.of_path: dict[int, list[int]] = {i: [] for i in range(len(self.paths))}
        for b in range(g.n):
            for a in g.adjacency[b]:
                for c in g.adjacency[b]:
                    if a == c:
                        continue
                    lits = []
                    for d in g.adjacency[c]:
                        if d == b:
                            continue
                        if d == a:
                            lits.append(("T",))
                        else:
                            lits.append(("P", self.index[Path3.of(a, b, c, d)]))
                    cid = len(self.constraints)
                    self.constraints.append(tuple(lits))
                    for lit in lits:
                        if lit[0] == "P":
                            self.of_path[lit[1]].append(cid)

        self.is_k4 = g.n == 4 and g.m == 6
        self.quads = [] if self.is_k4 else cycles_of_length(g, 4)
        self._common: dict[tuple[int, int], tuple[int, ...]] = {}

    def common_neighbors(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        got = self._common.get(key)
        if got is None:
            got = tuple(sorted(set(self.g.adjacency[u]) & set(self.g.adjacency[v])))
            self._common[key] = got
        return got


@dataclass
class ReconstructionState:
    """Assignment over all 3-paths plus the decision trail."""

    tables: _Tables
    assignment: list[int]
    trail: list[tuple[Path3, int, str]] = field(default_factory=list)
    branch_depth: int = 0
    seeded: bool = False
    _queue: deque = field(default_factory=deque)

    def value(self, p: Path3) -> int:
        return self.assignment[self.tables.index[p]]

    def unknown_count(self) -> int:
        return sum(1 for v in self.assignment if v == UNKNOWN)

    def copy(self) -> "ReconstructionState":
        return ReconstructionState(
            self.tables,
            list(self.assignment),
            list(self.trail),
            self.branch_depth,
            self.seeded,
            deque(),
        )

    def as_mapping(self) -> dict[Path3, int]:
        return {p: self.assignment[i] for i, p in enumerate(self.tables.paths)}


def init_state(g: CubicGraph, ext: ExtendedGraph) -> ReconstructionState:
    """Fresh state: everything unknown except pairs absent from the scaffold."""
    if ext.graph != g:
        raise InvalidInputError("extended graph is not over the given graph")
    report = validate_cubic(g)
    if not report.ok:
        kinds = ", ".join(v.kind for v in report.violations)
        raise InvalidInputError(f"not a valid cubic graph: {kinds}")
    for s in ext.scaffold:
        if s.u == s.w:
            raise InvalidInputError(f"scaffold self-loop at vertex {s.u}")
        if s.multiplicity not in (1, 2):
            raise InvalidInputError(
                f"scaffold multiplicity {s.multiplicity} at {s.pair}; must be 1 or 2"
            )
    tb = _Tables(g, ext)
    st = ReconstructionState(tb, [UNKNOWN] * len(tb.paths))
    for i, pr in enumerate(tb.pair_of):
        if pr not in tb.mult:
            _set(st, i, NONFACIAL, "no-scaffold")
    return st


# ---------------------------------------------------------------------------
# propagation
# ---------------------------------------------------------------------------

def _set(st: ReconstructionState, pid: int, value: int, rule: str) -> None:
    cur = st.assignment[pid]
    if cur == value:
        return
    if cur != UNKNOWN:
        p = st.tables.paths[pid]
        raise ContradictionError(
            ContradictionReport(
                rule,
                f"3-path {p.vertices} already {_VALUE_NAMES[cur]}, "
                f"rule wants {_VALUE_NAMES[value]}",
                (p,),
            )
        )
    st.assignment[pid] = value
    st.trail.append((st.tables.paths[pid], value, rule))
    st._queue.append(pid)


def _force_cycle_windows(st: ReconstructionState, cycle: tuple[int, ...], rule: str) -> None:
    L = len(cycle)
    for i in range(L):
        t0, t1, t2, t3 = (cycle[i], cycle[(i + 1) % L], cycle[(i + 2) % L], cycle[(i + 3) % L])
        if t0 != t3:
            _set(st, st.tables.index[Path3.of(t0, t1, t2, t3)], FACIAL, rule)


def _seed(st: ReconstructionState) -> None:
    tb = st.tables
    for lits in tb.constraints:
        if any(lit[0] == "T" for lit in lits):
            for lit in lits:
                if lit[0] == "P":
                    _set(st, lit[1], NONFACIAL, "triangle-face")
    for quad in tb.quads:
        _force_cycle_windows(st, quad, "quad-face")
    for pair in sorted(tb.mult):
        _recount_pair(st, pair)
    st.seeded = True


def _recount_pair(st: ReconstructionState, pair: tuple[int, int]) -> None:
    tb = st.tables
    k = tb.mult.get(pair, 0)
    pids = tb.pair_paths.get(pair, [])
    fac = [i for i in pids if st.assignment[i] == FACIAL]
    open_ = [i for i in pids if st.assignment[i] != NONFACIAL]
    if len(fac) > k:
        raise ContradictionError(
            ContradictionReport(
                "count",
                f"pair {pair}: {len(fac)} facial 3-paths but multiplicity {k}",
                tuple(tb.paths[i] for i in fac),
            )
        )
    if len(open_) < k:
        raise ContradictionError(
            ContradictionReport(
                "count",
                f"pair {pair}: only {len(open_)} candidate 3-paths for multiplicity {k}",
                tuple(tb.paths[i] for i in pids),
            )
        )
    if len(fac) == k:
        for i in pids:
            if st.assignment[i] == UNKNOWN:
                _set(st, i, NONFACIAL, "count")
    elif len(open_) == k:
        rule = "unique-witness" if len(pids) == k else "elimination"
        for i in open_:
            if st.assignment[i] == UNKNOWN:
                _set(st, i, FACIAL, rule)


def _check_facial_structure(st: ReconstructionState, pid: int) -> None:
    """Chord/shortcut exclusions and face closures for a facial window."""
    tb = st.tables
    g = tb.g
    a, b, c, d = tb.paths[pid].vertices
    p = tb.paths[pid]
    if g.has_edge(a, c) or g.has_edge(b, d):
        raise ContradictionError(
            ContradictionReport("chord-shortcut", f"facial window {p.vertices} has a chord", (p,))
        )
    for x in tb.common_neighbors(a, c):
        if x not in (b, d):
            raise ContradictionError(
                ContradictionReport(
                    "chord-shortcut",
                    f"2-path ({a} {x} {c}) cuts across facial window {p.vertices}",
                    (p,),
                )
            )
    for x in tb.common_neighbors(b, d):
        if x not in (c, a):
            raise ContradictionError(
                ContradictionReport(
                    "chord-shortcut",
                    f"2-path ({b} {x} {d}) cuts across facial window {p.vertices}",
                    (p,),
                )
            )
    ends_adjacent = g.has_edge(a, d)
    if ends_adjacent:
        _force_cycle_windows(st, (a, b, c, d), "square-closure")
    else:
        xs = [x for x in tb.common_neighbors(a, d) if x not in (b, c)]
        if len(xs) >= 2:
            raise ContradictionError(
                ContradictionReport(
                    "chord-shortcut",
                    f"two 2-paths connect the ends of facial window {p.vertices}",
                    (p,),
                )
            )
        if len(xs) == 1:
            _force_cycle_windows(st, (a, b, c, d, xs[0]), "pentagon-closure")
    # other facial 3-paths over the same endpoint pair
    for j in tb.pair_paths[p.ends]:
        if j == pid or st.assignment[j] != FACIAL:
            continue
        q = tb.paths[j]
        if set(p.internal) & set(q.internal):
            raise ContradictionError(
                ContradictionReport(
                    "hexagon-closure",
                    f"facial 3-paths {p.vertices} and {q.vertices} share an internal vertex",
                    (p, q),
                )
            )
        if not ends_adjacent:
            u, w = p.ends
            pa, pb = p.vertices[1:3] if p.vertices[0] == u else p.vertices[2:0:-1]
            qa, qb = q.vertices[1:3] if q.vertices[0] == u else q.vertices[2:0:-1]
            _force_cycle_windows(st, (u, pa, pb, w, qb, qa), "hexagon-closure")


def propagate(st: ReconstructionState) -> ReconstructionState:
    """Run all rules to a least fixpoint; raises ContradictionError."""
    tb = st.tables
    if not st.seeded:
        _seed(st)
    queue = st._queue
    while queue:
        pid = queue.popleft()
        v = st.assignment[pid]
        for cid in tb.of_path[pid]:
            lits = tb.constraints[cid]
            for lit in lits:
                if lit == ("P", pid):
                    continue
                if lit[0] == "T":
                    if v == FACIAL:
                        raise ContradictionError(
                            ContradictionReport(
                                "unique-continuation",
                                f"facial 3-path {tb.paths[pid].vertices} competes with a "
                                "triangle face for its corner",
                                (tb.paths[pid],),
                            )
                        )
                else:
                    other = lit[1]
                    if v == FACIAL:
                        _set(st, other, NONFACIAL, "unique-continuation")
                    else:
                        _set(st, other, FACIAL, "unique-continuation")
        _recount_pair(st, tb.pair_of[pid])
        if v == FACIAL:
            _check_facial_structure(st, pid)
    return st


# ---------------------------------------------------------------------------
# assembly of a total assignment into face walks
# ---------------------------------------------------------------------------

def assemble_walks(g: CubicGraph, assignment: dict[Path3, int]) -> FacialSystem:
    """Chain facial 3-paths (and forced triangles) into closed face walks.

    Walks are orbits of the continuation map on directed corners; every
    directed corner must have exactly one continuation.  Triangle faces
    appear as orbits of length three.
    """
    values: dict[Path3, int] = assignment

    def continuation(a: int, b: int, c: int) -> int:
        options = []
        for d in g.adjacency[c]:
            if d == b:
                continue
            if d == a:
                options.append(d)
            elif values.get(Path3.of(a, b, c, d), NONFACIAL) == FACIAL:
                options.append(d)
        if not options:
            raise AssemblyError(f"open chain: corner ({a} {b} {c}) has no facial continuation")
        if len(options) > 1:
            raise AssemblyError(
                f"corner ({a} {b} {c}) has {len(options)} facial continuations"
            )
        return options[0]

    corners = [
        (a, b, c)
        for b in range(g.n)
        for a in g.adjacency[b]
        for c in g.adjacency[b]
        if a != c
    ]
    visited: set[tuple[int, int, int]] = set()
    walks = []
    for start in corners:
        if start in visited:
            continue
        orbit = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            orbit.append(cur)
            cur = (cur[1], cur[2], continuation(*cur))
        if cur != start:
            raise AssemblyError("corner continuation is not a permutation")
        mirror = {(c, b, a) for (a, b, c) in orbit}
        if mirror & set(orbit):
            raise AssemblyError("walk traverses a corner in both directions")
        visited.update(mirror)
        walks.append(FacialWalk.of(tuple(a for a, _, _ in orbit)))
    if len(visited) != len(corners):
        raise AssemblyError("corner coverage incomplete")

    # the assembled walks must carry exactly the facial 3-paths we were given
    windows: set[Path3] = set()
    for w in walks:
        vs = w.vertices
        L = len(vs)
        for i in range(L):
            quad = (vs[i], vs[(i + 1) % L], vs[(i + 2) % L], vs[(i + 3) % L])
            if quad[0] != quad[3]:
                windows.add(Path3.of(*quad))
    facial = {p for p, v in values.items() if v == FACIAL}
    if facial != windows:
        raise AssemblyError(
            "assembled walks disagree with the assignment on "
            f"{len(facial ^ windows)} 3-paths"
        )
    return FacialSystem.of(g.n, walks)


# ---------------------------------------------------------------------------
# pattern detection
# ---------------------------------------------------------------------------

def find_forks(ext: ExtendedGraph) -> list[Fork]:
    g = ext.graph
    have = set(ext.multiplicities)
    out = []
    for t2 in range(g.n):
        for t1 in g.adjacency[t2]:
            for t3 in g.adjacency[t2]:
                if t1 == t3:
                    continue
                far = [v for v in g.adjacency[t3] if v != t2]
                if len(far) != 2 or t1 in far:
                    continue
                t4a, t4b = sorted(far)
                if (tuple(sorted((t1, t4a))) in have
                        and tuple(sorted((t1, t4b))) in have):
                    out.append(Fork(t1, t2, t3, t4a, t4b))
    return sorted(out, key=lambda f: (f.t1, f.t2, f.t3))


def _six_cycles_through(g: CubicGraph, t1: int, t2: int, t3: int) -> list[tuple[int, int, int]]:
    """Completions (t4, t5, t0) of t1-t2-t3 to a 6-cycle t0..t5, new
    vertices distinct from the shared path."""
    shared = {t1, t2, t3}
    out = []
    for t4 in g.adjacency[t3]:
        if t4 in shared:
            continue
        for t0 in g.adjacency[t1]:
            if t0 in shared or t0 == t4:
                continue
            for t5 in g.adjacency[t4]:
                if t5 in shared or t5 in (t0, t4) or not g.has_edge(t5, t0):
                    continue
                out.append((t4, t5, t0))
    return out


def detect_butterflies(ext: ExtendedGraph) -> list[Butterfly]:
    g = ext.graph
    have = set(ext.multiplicities)

    def in_s(u, v):
        return tuple(sorted((u, v))) in have

    found: dict[tuple, Butterfly] = {}
    for t2 in range(g.n):
        for t1 in g.adjacency[t2]:
            for t3 in g.adjacency[t2]:
                if t1 == t3:
                    continue
                wings = _six_cycles_through(g, t1, t2, t3)
                for i in range(len(wings)):
                    for j in range(len(wings)):
                        if i == j:
                            continue
                        t4, t5, t0 = wings[i]
                        t4p, t5p, t0p = wings[j]
                        cells = {t4, t5, t0} & {t4p, t5p, t0p}
                        if cells or t4 == t4p:
                            continue
                        if not (in_s(t1, t4) and in_s(t1, t4p)):
                            continue
                        w0, w0p = in_s(t0, t3), in_s(t0p, t3)
                        if not (w0 or w0p):
                            continue
                        if w0p and not w0:
                            t4, t5, t0, t4p, t5p, t0p = t4p, t5p, t0p, t4, t5, t0
                            w0, w0p = w0p, w0
                        kind = "B1" if (w0 and w0p) else "B2"
                        c1 = canonical_cycle((t0, t1, t2, t3, t4, t5))
                        c2 = canonical_cycle((t0p, t1, t2, t3, t4p, t5p))
                        key = (kind, *sorted((c1, c2)))
                        found.setdefault(
                            key, Butterfly(kind, t0, t1, t2, t3, t4, t5, t0p, t4p, t5p)
                        )
    return sorted(found.values(), key=lambda b: (b.kind, b.t0, b.t1, b.t2, b.t3))


def recognize_special(g: CubicGraph) -> str:
    if g.n == 10 and is_isomorphic(g, petersen_graph()) is not None:
        return "petersen"
    if g.n == 12 and is_isomorphic(g, franklin_graph()) is not None:
        return "franklin"
    return "none"


# ---------------------------------------------------------------------------
# full reconstruction
# ---------------------------------------------------------------------------

@dataclass
class ReconstructionOutcome:
    system: FacialSystem
    branch_count: int
    special: str
    used_rules: dict[str, int]
    completions: tuple[FacialSystem, ...] = ()
    unsolved_disjunction: bool = False

    @property
    def completions_found(self) -> int:
        return len(self.completions)

    def to_json_dict(self) -> dict:
        return {
            "faces": [list(w.vertices) for w in self.system.walks],
            "branch_count": self.branch_count,
            "special": self.special,
            "rules": dict(sorted(self.used_rules.items())),
        }


def _branch_pid(st: ReconstructionState, fork_pids: set[int]) -> int:
    tb = st.tables
    best = None
    for pid in range(len(tb.paths)):
        if st.assignment[pid] != UNKNOWN:
            continue
        key = (pid not in fork_pids, tb.paths[pid].vertices)
        if best is None or key < best[0]:
            best = (key, pid)
    assert best is not None
    return best[1]


def reconstruct(
    g: CubicGraph, ext: ExtendedGraph, max_branch_depth: int = 32
) -> ReconstructionOutcome:
    """Search for every facial system whose extended graph is ext.

    Propagates to a fixpoint, branches on surviving disjunctions, filters
    completions through assembly, polyhedrality, and an exact rebuild of
    the scaffold, and checks that all survivors agree up to automorphisms.
    """
    st0 = init_state(g, ext)
    target = ext.multiplicities

    fork_pids: set[int] = set()
    for f in find_forks(ext):
        for t4 in (f.t4a, f.t4b):
            p = Path3.of(f.t1, f.t2, f.t3, t4)
            if p in st0.tables.index:
                fork_pids.add(st0.tables.index[p])

    completions: list[FacialSystem] = []
    used_rules: dict[str, int] = {}
    stats = {"branches": 0, "unsolved": False}

    def count_rules(st: ReconstructionState, start: int) -> None:
        for _, _, rule in st.trail[start:]:
            used_rules[rule] = used_rules.get(rule, 0) + 1

    def harvest(st: ReconstructionState) -> None:
        try:
            fs = assemble_walks(g, st.as_mapping())
        except AssemblyError:
            return
        if not is_polyhedral(g, fs).ok:
            return
        try:
            rebuilt = build_extended(g, fs)
        except CorruptSystemError:
            return
        if rebuilt.multiplicities == target:
            completions.append(fs)

    def explore(st: ReconstructionState) -> bool:
        mark = len(st.trail)
        try:
            propagate(st)
        except ContradictionError:
            count_rules(st, mark)
            return False
        count_rules(st, mark)
        if st.unknown_count() == 0:
            harvest(st)
            return True
        if st.branch_depth >= max_branch_depth:
            raise BranchDepthExceededError(
                f"branch depth exceeded {max_branch_depth}"
            )
        pid = _branch_pid(st, fork_pids)
        stats["branches"] += 1
        ok = []
        for value in (FACIAL, NONFACIAL):
            child = st.copy()
            child.branch_depth += 1
            _set(child, pid, value, "branch")
            ok.append(explore(child))
        if ok[0] and ok[1]:
            stats["unsolved"] = True
        return True

    count_rules(st0, 0)
    explore(st0)

    if not completions:
        raise NotExtendedGraphError(
            "no polyhedral facial system rebuilds this scaffold"
        )
    base = completions[0]
    for other in completions[1:]:
        if not systems_equivalent(g, base, other):
            raise UniquenessViolationError(
                "two inequivalent facial systems share this extended graph"
            )
    system = min(completions, key=lambda fs: tuple(sorted(w.vertices for w in fs.walks)))
    special = recognize_special(g) if stats["branches"] else "none"
    return ReconstructionOutcome(
        system=system,
        branch_count=stats["branches"],
        special=special,
        used_rules=used_rules,
        completions=tuple(completions),
        unsolved_disjunction=stats["unsolved"],
    )
