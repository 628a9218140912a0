"""Scaffold construction against the golden structures."""

from __future__ import annotations

import itertools

import pytest

from scaffoldkit.embeddings import FacialSystem, FacialWalk
from scaffoldkit.enumeration import enumerate_polyhedral
from scaffoldkit.extended import (
    CorruptSystemError,
    ExtendedGraph,
    ScaffoldEdge,
    build_extended,
    extended_equal,
    facial_three_paths,
    relabel_extended,
)

from scaffoldkit.named_graphs import (
    cube_graph,
    franklin_graph,
    franklin_reference_faces,
    franklin_reference_scaffold,
    k4,
    petersen_graph,
)

from .oracles import naive_scaffold


def test_k4_sphere_has_no_scaffold():
    k = k4()
    (fs,) = enumerate_polyhedral(k).systems
    assert facial_three_paths(fs) == []
    assert build_extended(k, fs).scaffold == ()


def test_hexagon_face_contributes_six_windows():
    hexagon = FacialSystem.of(6, [FacialWalk.of((0, 1, 2, 3, 4, 5))])
    paths = facial_three_paths(hexagon)
    assert len(paths) == 6
    assert {p.ends for p in paths} == {(0, 3), (1, 4), (2, 5)}


def test_square_face_contributes_four_edge_parallel_windows():
    square = FacialSystem.of(4, [FacialWalk.of((0, 1, 2, 3))])
    paths = facial_three_paths(square)
    assert len(paths) == 4
    assert {p.ends for p in paths} == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_petersen_scaffold_is_k10_complement():
    p = petersen_graph()
    (fs,) = enumerate_polyhedral(p).systems
    ext = build_extended(p, fs)
    mult = ext.multiplicities
    complement = {
        (u, v)
        for u, v in itertools.combinations(range(10), 2)
        if not p.has_edge(u, v)
    }
    assert set(mult) == complement
    assert len(mult) == 30
    assert set(mult.values()) == {1}


def test_cube_scaffold_all_parallel_doubles():
    q = cube_graph()
    (fs,) = enumerate_polyhedral(q).systems
    mult = build_extended(q, fs).multiplicities
    assert len(mult) == 12
    assert set(mult.values()) == {2}
    assert all(q.has_edge(u, w) for u, w in mult)


def test_franklin_scaffold_matches_reference():
    f = franklin_graph()
    (fs,) = enumerate_polyhedral(f).systems
    assert build_extended(f, fs).multiplicities == franklin_reference_scaffold()


def test_franklin_reference_faces_reproduce_reference_scaffold():
    faces = franklin_reference_faces()
    assert naive_scaffold([tuple(f) for f in faces]) == franklin_reference_scaffold()


def test_scaffold_matches_naive_window_count(censuses, corpus_n10):
    for g in corpus_n10:
        for fs in censuses.get(g).systems:
            ext = build_extended(g, fs)
            assert ext.multiplicities == naive_scaffold(
                [w.vertices for w in fs.walks]
            )


def test_witnesses_lie_on_faces(censuses, corpus_n12):
    for g in corpus_n12:
        for fs in censuses.get(g).systems:
            windows = set(facial_three_paths(fs))
            for s in build_extended(g, fs).scaffold:
                assert len(s.witnesses) == s.multiplicity
                for wit in s.witnesses:
                    assert wit in windows
                    assert wit.ends == s.pair
                    assert wit.is_path_of(g)
                if s.multiplicity == 2:
                    a, b = s.witnesses
                    assert not set(a.internal) & set(b.internal)


def test_triple_witness_rejected():
    # a fake "system" with three hexagons pairwise sharing an antipodal pair
    walks = [
        FacialWalk.of((0, 1, 2, 3, 4, 5)),
        FacialWalk.of((0, 6, 7, 3, 8, 9)),
        FacialWalk.of((0, 10, 11, 3, 12, 13)),
    ]
    fs = FacialSystem.of(14, walks)
    from scaffoldkit.graphs import CubicGraph

    g = CubicGraph.from_edges(14, [])  # builder only inspects the walks
    with pytest.raises(CorruptSystemError):
        build_extended(g, fs)


class TestExtendedEqual:
    def test_reflexive(self):
        p = petersen_graph()
        (fs,) = enumerate_polyhedral(p).systems
        ext = build_extended(p, fs)
        assert extended_equal(ext, ext)

    def test_dropped_edge_detected(self):
        p = petersen_graph()
        (fs,) = enumerate_polyhedral(p).systems
        ext = build_extended(p, fs)
        smaller = ExtendedGraph.of(p, ext.scaffold[1:])
        assert not extended_equal(ext, smaller)

    def test_different_graph_is_usage_error(self):
        p, k = petersen_graph(), k4()
        ext_p = ExtendedGraph.of(p, [])
        ext_k = ExtendedGraph.of(k, [])
        with pytest.raises(ValueError):
            extended_equal(ext_p, ext_k)

    def test_witnesses_do_not_affect_equality(self):
        p = petersen_graph()
        (fs,) = enumerate_polyhedral(p).systems
        ext = build_extended(p, fs)
        stripped = ExtendedGraph.of(
            p, [ScaffoldEdge(s.u, s.w, s.multiplicity) for s in ext.scaffold]
        )
        assert extended_equal(ext, stripped)


def test_json_round_trip_and_optional_witnesses():
    p = petersen_graph()
    (fs,) = enumerate_polyhedral(p).systems
    ext = build_extended(p, fs)
    full = ExtendedGraph.from_json_dict(ext.to_json_dict(include_witnesses=True))
    assert extended_equal(ext, full)
    bare = ExtendedGraph.from_json_dict(ext.to_json_dict(include_witnesses=False))
    assert extended_equal(ext, bare)
    assert all(s.witnesses == () for s in bare.scaffold)


def test_relabeling_commutes_with_building(censuses):
    from scaffoldkit.embeddings import apply_permutation
    from scaffoldkit.graphs import automorphisms

    p = petersen_graph()
    (fs,) = censuses.get(p).systems
    sigma = automorphisms(p)[3]
    left = relabel_extended(build_extended(p, fs), sigma)
    right = build_extended(p.relabel(sigma), apply_permutation(fs, sigma))
    assert left.multiplicities == right.multiplicities
