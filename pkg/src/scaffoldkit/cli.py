"""Command-line surface.

Subcommands: validate, enumerate, extend, reconstruct, verify-bijection,
detect.  All outputs are JSON (JSON lines for corpus runs); the exit code
is 0 exactly when every check passed.  SCAFFOLDKIT_MAX_N overrides the
--max-n default.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
import time
from pathlib import Path
from typing import Optional

from .embeddings import FacialSystem, is_polyhedral
from .enumeration import DEFAULT_MAX_N, enumerate_polyhedral, resolved_max_n
from .extended import ExtendedGraph, build_extended
from .graphs import (
    Graph6Error,
    is_three_connected,
    parse_graph6,
    read_corpus,
    validate_cubic,
)
from .harness import aggregate, verify_graph6_line
from .reconstruct import (
    ReconstructionError,
    detect_butterflies,
    find_forks,
    reconstruct,
    recognize_special,
)


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text())


def cmd_validate(args) -> int:
    lines = read_corpus(Path(args.corpus).read_text())
    records = []
    all_ok = True
    for line in lines:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            records.append({"graph6": line, "ok": False, "error": str(exc)})
            all_ok = False
            continue
        report = validate_cubic(g)
        rec = {
            "graph6": line,
            "ok": report.ok,
            "violations": [
                {"kind": v.kind, "detail": v.detail} for v in report.violations
            ],
        }
        if report.ok:
            rec["three_connected"] = is_three_connected(g)
        records.append(rec)
        all_ok = all_ok and report.ok
    _emit({"records": records, "ok": all_ok}, args.out)
    return 0 if all_ok else 1


def _parse_valid_cubic(text: str):
    g = parse_graph6(text)
    report = validate_cubic(g)
    if not report.ok:
        kinds = ", ".join(v.kind for v in report.violations)
        raise ValueError(f"not a valid cubic graph ({kinds})")
    return g


def cmd_enumerate(args) -> int:
    try:
        g = _parse_valid_cubic(args.graph6)
        census = enumerate_polyhedral(g, max_n=args.max_n)
    except ValueError as exc:  # bad graph6, invalid graph, or size guard
        _emit({"error": str(exc)}, args.out)
        return 1
    _emit(census.to_json_dict(), args.out)
    return 0


def cmd_extend(args) -> int:
    try:
        g = _parse_valid_cubic(args.graph6)
    except ValueError as exc:
        _emit({"error": str(exc)}, args.out)
        return 1
    fs = FacialSystem.from_json_dict(_load_json(args.system))
    report = is_polyhedral(g, fs)
    if not report.ok:
        _emit({"error": "facial system is not polyhedral"}, args.out)
        return 1
    _emit(build_extended(g, fs).to_json_dict(), args.out)
    return 0


def cmd_reconstruct(args) -> int:
    ext = ExtendedGraph.from_json_dict(_load_json(args.extended))
    try:
        outcome = reconstruct(ext.graph, ext, max_branch_depth=args.max_branch_depth)
    except ReconstructionError as exc:
        _emit({"error": {"kind": type(exc).__name__, "detail": str(exc)}}, args.out)
        return 1
    _emit(outcome.to_json_dict(), args.out)
    return 0


def cmd_detect(args) -> int:
    ext = ExtendedGraph.from_json_dict(_load_json(args.extended))
    payload = {
        "forks": [
            {"t1": f.t1, "t2": f.t2, "t3": f.t3, "t4": f.t4a, "t4'": f.t4b}
            for f in find_forks(ext)
        ],
        "butterflies": [
            {
                "kind": b.kind,
                "cycle1": [b.t0, b.t1, b.t2, b.t3, b.t4, b.t5],
                "cycle2": [b.t0p, b.t1, b.t2, b.t3, b.t4p, b.t5p],
            }
            for b in detect_butterflies(ext)
        ],
        "special": recognize_special(ext.graph),
    }
    _emit(payload, args.out)
    return 0


def _verify_worker(payload):
    line, max_n = payload
    return verify_graph6_line(line, max_n=max_n)


def cmd_verify_bijection(args) -> int:
    lines = read_corpus(Path(args.corpus).read_text())
    if args.seed_corpus:
        lines += read_corpus(Path(args.seed_corpus).read_text())
    t0 = time.monotonic()
    payloads = [(line, args.max_n) for line in lines]

    sink = open(args.out, "w") if args.out else sys.stdout
    records = []
    try:
        if args.jobs > 1:
            pool = multiprocessing.Pool(args.jobs)
            stream = pool.imap(_verify_worker, payloads)
        else:
            pool = None
            stream = map(_verify_worker, payloads)
        for rec in stream:  # records stream out as they finish, in corpus order
            records.append(rec)
            sink.write(json.dumps(rec.to_json_dict()) + "\n")
            sink.flush()
        if pool is not None:
            pool.close()
            pool.join()
        summary = {
            "corpus": args.corpus,
            "summary": aggregate(records),
            "wall_time": round(time.monotonic() - t0, 3),
        }
        sink.write(json.dumps(summary) + "\n")
    finally:
        if args.out:
            sink.close()
    return 0 if all(r.ok for r in records) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="scaffoldkit",
        description="polyhedral embeddings of cubic graphs: census, scaffold "
        "edges, reconstruction, and corpus verification",
    )
    ap.add_argument(
        "--max-n",
        type=int,
        default=None,
        help=f"vertex-count guard for enumeration (default {DEFAULT_MAX_N}, "
        "env SCAFFOLDKIT_MAX_N)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a graph6 corpus file")
    p.add_argument("corpus")
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="census of polyhedral embeddings of one graph")
    p.add_argument("graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extend", help="extended graph of one facial system")
    p.add_argument("graph6")
    p.add_argument("system", help="facial-system JSON file (or - for stdin)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("reconstruct", help="rebuild the facial system of an extended graph")
    p.add_argument("extended", help="extended-graph JSON file (or - for stdin)")
    p.add_argument("--max-branch-depth", type=int, default=32)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("detect", help="forks, butterflies, and special graphs")
    p.add_argument("extended")
    p.add_argument("--out")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser(
        "verify-bijection",
        help="census + injectivity + round-trip verification over a corpus",
    )
    p.add_argument("corpus")
    p.add_argument("--seed-corpus", help="additional corpus file to include")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_bijection)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_n is None:
        args.max_n = resolved_max_n()
    try:
        return args.func(args)
    except Exception as exc:  # keep the output JSON under all outcomes
        _emit(
            {"error": {"kind": type(exc).__name__, "detail": str(exc)}},
            getattr(args, "out", None),
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
