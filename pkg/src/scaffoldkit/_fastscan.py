"""Vectorized scan of an embedding-scheme space for polyhedral schemes.

The traversal state space has 6n states per scheme (dart x orientation
bit).  For a batch of schemes this module builds the whole next-state table
as (batch, 6n) arrays, finds traversal orbits by pointer doubling, and
applies the polyhedrality tests (every face walk a cycle, any two faces
meeting in at most one vertex or one shared edge) with sorted-key scans.
It only *filters*: every index it emits is re-traced and re-verified by
the plain tracer, so a false positive is harmless.  Agreement with the
plain tracer (including the absence of false negatives) is covered by the
test suite on complete small scheme spaces.

Scheme index layout (shared with enumeration.enumerate_schemes): bit v of
the low n bits flips the rotation at vertex v; the following m-n+1 bits
flip the signature of the non-tree edges in edge-index order.
"""

from __future__ import annotations

import numpy as np

from .graphs import CubicGraph


def bfs_tree_edges(g: CubicGraph) -> tuple[set[int], list[int]]:
    """Edge ids of the lowest-index BFS tree from 0, and the non-tree ids."""
    seen = [False] * g.n
    seen[0] = True
    order = [0]
    tree: set[int] = set()
    for u in order:
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                order.append(v)
                tree.add(g.edge_index[(min(u, v), max(u, v))])
    nontree = [i for i in range(g.m) if i not in tree]
    return tree, nontree


class FastScan:
    """Per-graph precomputation for batched scheme scans."""

    def __init__(self, g: CubicGraph):
        self.g = g
        n = g.n
        adj = g.adjacency
        self.n = n
        self.m = g.m
        self.ns = 6 * n
        nd = 3 * n

        head = np.empty(nd, dtype=np.int64)
        revd = np.empty(nd, dtype=np.int64)
        eid = np.empty(nd, dtype=np.int64)
        dart = {}
        for u in range(n):
            for k, v in enumerate(adj[u]):
                dart[(u, v)] = 3 * u + k
        for u in range(n):
            for k, v in enumerate(adj[u]):
                d = 3 * u + k
                head[d] = v
                revd[d] = dart[(v, u)]
                eid[d] = g.edge_index[(min(u, v), max(u, v))]

        # nxt[rb, o2, v, j]: adjacency slot of the dart that continues the
        # face at v when the walk arrived from adjacency slot j
        nxt = np.empty((2, 2, n, 3), dtype=np.uint8)
        for v in range(n):
            for rb in range(2):
                rotslots = (0, 1, 2) if rb == 0 else (0, 2, 1)
                pos = {s: p for p, s in enumerate(rotslots)}
                for j in range(3):
                    p = pos[j]
                    nxt[rb, 0, v, j] = rotslots[(p + 1) % 3]
                    nxt[rb, 1, v, j] = rotslots[(p - 1) % 3]
        self._nxt = nxt

        states = np.arange(self.ns, dtype=np.int64)
        self._D = states >> 1
        self._O = (states & 1).astype(np.uint8)
        self._V = head[self._D]
        self._J = (revd[self._D] % 3).astype(np.int64)
        self._E = eid[self._D]
        self._TAIL = (self._D // 3).astype(np.uint32)
        self._REV = revd

        self.tree, self.nontree = bfs_tree_edges(g)
        self.scheme_count = 1 << (n + len(self.nontree))

        # per-edge primary dart (u -> v with u < v) and per-vertex entering darts
        self._edart = np.array(
            [dart[(u, v)] for (u, v) in g.edges], dtype=np.int64
        )
        self._ent = np.array(
            [[dart[(u, v)] for u in adj[v]] for v in range(n)], dtype=np.int64
        )

    # -- batch machinery ---------------------------------------------------

    def _tables(self, idx: np.ndarray):
        """next-state and signature tables for a batch of scheme indices."""
        n, ns = self.n, self.ns
        B = len(idx)
        rb = ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)
        sig = np.zeros((B, self.m), dtype=np.uint8)
        for t, e in enumerate(self.nontree):
            sig[:, e] = (idx >> (n + t)) & 1
        o2 = self._O[None, :] ^ sig[:, self._E]
        rbv = rb[:, self._V]
        wslot = self._nxt[rbv, o2, self._V[None, :], self._J[None, :]]
        nstate = (
            ((3 * self._V[None, :] + wslot) << 1).astype(np.uint8) | o2
        )
        return sig, o2, nstate

    def _leaders(self, nstate: np.ndarray) -> np.ndarray:
        """Per-state minimum over its traversal orbit, by pointer doubling
        on row-flattened absolute indices."""
        B = nstate.shape[0]
        off = (np.arange(B, dtype=np.int64) * self.ns)[:, None]
        P = (nstate.astype(np.int64) + off).ravel()
        L = np.broadcast_to(
            np.arange(self.ns, dtype=np.uint8), nstate.shape
        ).copy().ravel()
        steps = max(1, int(np.ceil(np.log2(self.ns))))
        for _ in range(steps):
            L = np.minimum(L, L[P])
            P = P[P]
        return L.reshape(B, self.ns)

    def scan(self, start: int, stop: int) -> tuple[list[int], list[int]]:
        """Scan scheme indices [start, stop).

        Returns (candidates, suspicious): candidate polyhedral scheme
        indices, plus any whose orbit structure failed the pairing sanity
        check and must be handled by the plain tracer.
        """
        idx = np.arange(start, stop, dtype=np.int64)
        if len(idx) == 0:
            return [], []
        sig, o2, nstate = self._tables(idx)
        L = self._leaders(nstate)

        orbit_count = (L == np.arange(self.ns, dtype=np.uint8)[None, :]).sum(axis=1)
        suspicious = (orbit_count & 1).astype(bool)

        # every face walk must be a vertex-simple cycle: no (orbit, tail
        # vertex) repeats within a scheme
        keys = (L.astype(np.uint32) << 4) | self._TAIL[None, :]
        keys = np.sort(keys, axis=1)
        bad = (keys[:, :-1] == keys[:, 1:]).any(axis=1)
        alive = ~bad & ~suspicious
        live = np.flatnonzero(alive)
        if len(live) == 0:
            return [], idx[suspicious].tolist()

        sig = sig[live]
        o2 = o2[live]
        L = L[live]

        # canonical face id: min leader of an orbit and its mirror orbit
        B2 = len(live)
        off = (np.arange(B2, dtype=np.int64) * self.ns)[:, None]
        mu = (
            (self._REV[self._D][None, :] << 1)
            | (self._O[None, :] ^ sig[:, self._E] ^ 1)
        ) + off
        fid = np.minimum(L, L.ravel()[mu]).astype(np.uint32)

        # the two faces on each edge; equal ids cannot happen for cycle faces
        fa = fid[:, 2 * self._edart]
        fb = fid[:, 2 * self._edart + 1]
        ekeys = (np.minimum(fa, fb) << 7) | np.maximum(fa, fb)

        # the three faces at each vertex (each appears twice over the six
        # entering states)
        ent_states = np.stack([2 * self._ent, 2 * self._ent + 1], axis=2).reshape(
            self.n, 6
        )
        vf = np.sort(fid[:, ent_states.reshape(-1)].reshape(-1, self.n, 6), axis=2)
        paired = (vf[:, :, 0::2] == vf[:, :, 1::2]).all(axis=(1, 2))
        tri = vf[:, :, 0::2].astype(np.uint32)  # (B', n, 3) face triples

        vkeys = np.concatenate(
            [
                (np.minimum(tri[:, :, a], tri[:, :, b]) << 7)
                | np.maximum(tri[:, :, a], tri[:, :, b])
                for a, b in ((0, 1), (0, 2), (1, 2))
            ],
            axis=1,
        )

        # combined sorted scan: each face pair may share one vertex ([v]),
        # or exactly one edge plus its endpoints ([v v e]); anything else
        # is an improper intersection
        comb = np.concatenate([vkeys * 4, ekeys * 4 + 1], axis=1)
        comb = np.sort(comb, axis=1)
        width = comb.shape[1]
        eq_next = comb[:, :-1] == comb[:, 1:]
        is_v = (comb & 3) == 0
        any_triple = (eq_next[:, :-1] & eq_next[:, 1:]).any(axis=1)
        dup_e = (eq_next & ~is_v[:, :-1]).any(axis=1)
        vv = eq_next & is_v[:, :-1]
        has_edge_after = np.zeros((len(comb), width - 1), dtype=bool)
        has_edge_after[:, : width - 2] = comb[:, 2:] == comb[:, :-2] + 1
        vv_no_edge = (vv & ~has_edge_after).any(axis=1)

        good = paired & ~any_triple & ~dup_e & ~vv_no_edge
        return idx[live[good]].tolist(), idx[suspicious].tolist()
