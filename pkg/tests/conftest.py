from __future__ import annotations

from pathlib import Path

import pytest

from scaffoldkit.enumeration import enumerate_polyhedral
from scaffoldkit.graphs import CubicGraph, parse_graph6, read_corpus

CORPORA = Path(__file__).resolve().parent.parent / "corpora"


def load_corpus(name: str) -> list[CubicGraph]:
    return [parse_graph6(line) for line in read_corpus((CORPORA / name).read_text())]


def small_corpus() -> list[CubicGraph]:
    """The complete connected cubic corpora for n <= 10."""
    out = []
    for name in ("cubic_n04.g6", "cubic_n06.g6", "cubic_n08.g6", "cubic_n10.g6"):
        out.extend(load_corpus(name))
    return out


@pytest.fixture(scope="session")
def corpus_n10():
    return small_corpus()


@pytest.fixture(scope="session")
def corpus_n12():
    return load_corpus("spot_n12.g6")


class CensusCache:
    """Censuses are expensive at n = 12; share them across the session."""

    def __init__(self):
        self._cache = {}

    def get(self, g: CubicGraph):
        key = g.adjacency
        if key not in self._cache:
            self._cache[key] = enumerate_polyhedral(g)
        return self._cache[key]


@pytest.fixture(scope="session")
def censuses():
    return CensusCache()
