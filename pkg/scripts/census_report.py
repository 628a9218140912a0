#!/usr/bin/env python3
"""Census explorer: polyhedral-embedding statistics over a corpus.

Prints, per graph: census size, Euler-genus histogram, face-length
profiles, scaffold sizes and double counts, and reconstruction branch
counts.  Handy for eyeballing how rare polyhedral embeddings are at desk
scale.

Usage: python scripts/census_report.py corpora/cubic_n10.g6 [more.g6 ...]
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from scaffoldkit.enumeration import enumerate_polyhedral
from scaffoldkit.extended import build_extended
from scaffoldkit.graphs import parse_graph6, read_corpus
from scaffoldkit.reconstruct import reconstruct


def main(paths: list[str]) -> None:
    totals = Counter()
    for path in paths:
        for line in read_corpus(Path(path).read_text()):
            g = parse_graph6(line)
            census = enumerate_polyhedral(g)
            totals["graphs"] += 1
            totals["systems"] += len(census.systems)
            if not census.systems:
                print(f"{line:14s} census 0")
                continue
            for fs in census.systems:
                ext = build_extended(g, fs)
                out = reconstruct(g, ext)
                lens = "+".join(str(n) for n in sorted(len(w) for w in fs.walks))
                doubles = sum(1 for s in ext.scaffold if s.multiplicity == 2)
                genus = 2 - g.n + g.m - fs.face_count
                totals[f"genus {genus}"] += 1
                print(
                    f"{line:14s} faces {lens:20s} genus {genus} "
                    f"scaffold {len(ext.scaffold):3d} doubles {doubles:3d} "
                    f"branches {out.branch_count} special {out.special}"
                )
    print("\ntotals:", dict(totals))


if __name__ == "__main__":
    main(sys.argv[1:] or [str(Path(__file__).resolve().parent.parent / "corpora" / "cubic_n10.g6")])
