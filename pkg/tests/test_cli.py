"""Command-line surface: exit codes, JSON outputs, determinism."""

from __future__ import annotations

import json

from scaffoldkit.cli import main
from scaffoldkit.enumeration import enumerate_polyhedral
from scaffoldkit.extended import build_extended
from scaffoldkit.graphs import emit_graph6
from scaffoldkit.named_graphs import k4, petersen_graph, prism

from .test_graph_core import bridge_gadget


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_validate_corpus(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("# a comment\nC~\n" + emit_graph6(bridge_gadget()) + "\n")
    code, out = run(capsys, "validate", str(corpus))
    payload = json.loads(out)
    assert code == 0 and payload["ok"]
    assert [r["three_connected"] for r in payload["records"]] == [True, False]


def test_validate_shipped_corpora(capsys):
    from .conftest import CORPORA

    for name in ("cubic_n04.g6", "cubic_n06.g6", "cubic_n08.g6", "cubic_n10.g6"):
        code, out = run(capsys, "validate", str(CORPORA / name))
        payload = json.loads(out)
        assert code == 0 and payload["ok"]
        assert all("three_connected" in r for r in payload["records"])


def test_validate_rejects_noncubic(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("A?\n")
    code, out = run(capsys, "validate", str(corpus))
    assert code == 1
    assert not json.loads(out)["ok"]


def test_validate_empty_file(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("# nothing but comments\n")
    code, out = run(capsys, "validate", str(corpus))
    assert code == 0
    assert json.loads(out)["records"] == []


def test_enumerate_k4(capsys):
    code, out = run(capsys, "enumerate", "C~")
    payload = json.loads(out)
    assert code == 0
    assert payload["schemes_scanned"] == 128
    assert len(payload["systems"]) == 1
    assert payload["genus_histogram"] == {"0": 1}


def test_enumerate_size_guard(capsys):
    line = emit_graph6(prism(9))  # 18 vertices
    code, out = run(capsys, "enumerate", line)
    assert code == 1
    assert "error" in json.loads(out)


def test_extend_and_reconstruct_pipeline(tmp_path, capsys):
    p = petersen_graph()
    (fs,) = enumerate_polyhedral(p).systems
    system = tmp_path / "system.json"
    system.write_text(json.dumps(fs.to_json_dict()))

    code, out = run(capsys, "extend", emit_graph6(p), str(system))
    assert code == 0
    ext_payload = json.loads(out)
    assert len(ext_payload["scaffold"]) == 30

    extfile = tmp_path / "ext.json"
    extfile.write_text(json.dumps(ext_payload))
    code, out = run(capsys, "reconstruct", str(extfile))
    payload = json.loads(out)
    assert code == 0
    assert payload["special"] == "petersen"
    assert len(payload["faces"]) == 6

    code, out = run(capsys, "detect", str(extfile))
    payload = json.loads(out)
    assert code == 0
    assert payload["special"] == "petersen"
    assert payload["forks"] and payload["butterflies"]


def test_reconstruct_reads_stdin(tmp_path, capsys, monkeypatch):
    import io

    q = prism(3)
    (fs,) = enumerate_polyhedral(q).systems
    payload = json.dumps(build_extended(q, fs).to_json_dict(include_witnesses=False))
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out = run(capsys, "reconstruct", "-")
    assert code == 0
    assert len(json.loads(out)["faces"]) == 5


def test_reconstruct_error_is_json(tmp_path, capsys):
    p = petersen_graph()
    (fs,) = enumerate_polyhedral(p).systems
    ext = build_extended(p, fs)
    payload = ext.to_json_dict()
    payload["scaffold"] = payload["scaffold"][:-1]  # drop one scaffold edge
    extfile = tmp_path / "ext.json"
    extfile.write_text(json.dumps(payload))
    code, out = run(capsys, "reconstruct", str(extfile))
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "NotExtendedGraphError"


def test_verify_bijection_small(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("C~\n" + emit_graph6(prism(3)) + "\n")
    outfile = tmp_path / "report.jsonl"
    code, _ = run(capsys, "verify-bijection", str(corpus), "--out", str(outfile))
    assert code == 0
    lines = [json.loads(line) for line in outfile.read_text().splitlines()]
    *records, summary = lines
    assert all(r["ok"] for r in records)
    assert summary["summary"]["graphs"] == 2
    assert summary["summary"]["failures"] == 0
    # aggregate counters are sums of per-record values
    assert summary["summary"]["census_total"] == sum(r["census_size"] for r in records)
    merged: dict[str, int] = {}
    for r in records:
        for k, v in r["branch_histogram"].items():
            merged[k] = merged.get(k, 0) + v
    assert summary["summary"]["branch_histogram"] == merged


def test_verify_bijection_seed_corpus_and_determinism(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("C~\n")
    seed = tmp_path / "extra.g6"
    seed.write_text(emit_graph6(prism(3)) + "\n")
    out1 = tmp_path / "r1.jsonl"
    out2 = tmp_path / "r2.jsonl"
    for out in (out1, out2):
        code, _ = run(
            capsys, "verify-bijection", str(corpus), "--seed-corpus", str(seed),
            "--out", str(out),
        )
        assert code == 0

    def strip(path):
        rows = []
        for line in path.read_text().splitlines():
            d = json.loads(line)
            d.pop("wall_time", None)
            rows.append(d)
        return rows

    assert strip(out1) == strip(out2)
    assert json.loads(out1.read_text().splitlines()[-1])["summary"]["graphs"] == 2


def test_verify_bijection_parallel_workers(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("C~\n" + emit_graph6(prism(3)) + "\n")
    out_serial = tmp_path / "s.jsonl"
    out_parallel = tmp_path / "p.jsonl"
    assert run(capsys, "verify-bijection", str(corpus), "--out", str(out_serial))[0] == 0
    assert (
        run(capsys, "verify-bijection", str(corpus), "--jobs", "2", "--out", str(out_parallel))[0]
        == 0
    )

    def strip(path):
        rows = []
        for line in path.read_text().splitlines():
            d = json.loads(line)
            d.pop("wall_time", None)
            rows.append(d)
        return rows

    assert strip(out_serial) == strip(out_parallel)


def test_verify_bijection_flags_corrupt_graph(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text("A?\n")
    code, out = run(capsys, "verify-bijection", str(corpus))
    assert code == 1
    first = json.loads(out.splitlines()[0])
    assert not first["ok"] and first["violations"]


def test_verify_bijection_oversized_graph_is_a_record_not_a_crash(tmp_path, capsys):
    from scaffoldkit.named_graphs import prism

    corpus = tmp_path / "c.g6"
    corpus.write_text("C~\n" + emit_graph6(prism(9)) + "\n")  # 18 vertices
    code, out = run(capsys, "verify-bijection", str(corpus))
    assert code == 1
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["ok"]
    assert not rows[1]["ok"] and "bound" in rows[1]["violations"][0]
    assert rows[-1]["summary"]["failures"] == 1
