"""Command-line interface: every subcommand, exit codes, determinism."""
import json

import pytest

from minor_universal.cli import main


def run(*argv) -> int:
    return main([str(a) for a in argv])


def test_universal(tmp_path, capsys):
    out = tmp_path / "u.json"
    assert run("universal", "--signature", "a1", "a2", "~a1", "~a2",
               "--m", "2", "--out", out) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["measured_size"] == [2, 28]
    data = json.loads(out.read_text())
    assert data["format"] == 1
    assert "coords" in data


def test_universal_exports(tmp_path):
    out, dot, svg = tmp_path / "u.json", tmp_path / "u.dot", tmp_path / "u.svg"
    assert run("universal", "--signature", "a0", "~a0", "--m", "2",
               "--out", out, "--dot", dot, "--svg", svg) == 0
    assert dot.read_text().startswith("graph")
    assert svg.read_text().startswith("<svg")


def test_gen_fixture_deterministic(tmp_path):
    a, b, c = (tmp_path / x for x in ("a.json", "b.json", "c.json"))
    args = ["gen-fixture", "--kind", "random-triangulated",
            "--signature", "a1", "a1", "--m", "2", "--n", "4"]
    assert run(*args, "--seed", 5, "--out", a) == 0
    assert run(*args, "--seed", 5, "--out", b) == 0
    assert run(*args, "--seed", 6, "--out", c) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() != c.read_bytes()


def test_gen_fixture_seed_env(tmp_path, monkeypatch, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen-fixture", "--kind", "random-triangulated",
            "--signature", "a1", "a1", "--m", "2", "--n", "4"]
    monkeypatch.setenv("MINOR_UNIVERSAL_SEED", "7")
    assert run(*args, "--out", a) == 0
    assert run(*args, "--seed", 7, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("kind", ["k6-torus", "sphere-outerplanar", "fig3-tree"])
def test_gen_fixture_kinds(tmp_path, kind):
    out = tmp_path / "f.json"
    assert run("gen-fixture", "--kind", kind, "--out", out) == 0
    assert json.loads(out.read_text())["format"] == 1


def _fixture(tmp_path, kind="fig3-tree"):
    path = tmp_path / "in.json"
    assert run("gen-fixture", "--kind", kind, "--out", path) == 0
    return path


def test_outerplanarize(tmp_path, capsys):
    src = _fixture(tmp_path)
    out, wit, tr = (tmp_path / x for x in ("p3.json", "w.json", "t.json"))
    assert run("outerplanarize", src, "--out", out, "--witness", wit,
               "--trace", tr) == 0
    report = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert report["verified"] is True
    assert report["size"][1] == 0
    trace = json.loads(tr.read_text())
    assert set(trace["stages"]) == {"guard", "triangulate", "blow_up", "split", "swap"}


def test_embed_and_verify(tmp_path, capsys):
    src = _fixture(tmp_path)
    uni, wit = tmp_path / "u.json", tmp_path / "w.json"
    assert run("embed", src, "--out-universal", uni, "--out-witness", wit) == 0
    assert run("verify-witness", src, uni, wit) == 0
    report = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert report["violations"] == []


def test_verify_witness_rejects_corruption(tmp_path, capsys):
    src = _fixture(tmp_path)
    uni, wit = tmp_path / "u.json", tmp_path / "w.json"
    assert run("embed", src, "--out-universal", uni, "--out-witness", wit) == 0
    data = json.loads(wit.read_text())
    k = sorted(data["witness"])[0]
    data["witness"][k] = data["witness"][k][:1] if len(data["witness"][k]) > 1 else []
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    capsys.readouterr()
    assert run("verify-witness", src, uni, bad) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["violations"]


def test_hamiltonian_major_cmd(tmp_path, capsys):
    import minor_universal.graphcore as gc
    from minor_universal.fixtures import stacked_circuit, stacked_triangulation

    g = stacked_triangulation(4, 1)
    src = tmp_path / "g.json"
    src.write_text(gc.dumps(g))
    out = tmp_path / "g2.json"
    circuit = stacked_circuit(g)
    assert run("hamiltonian-major", src, "--circuit", *circuit, "--out", out) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["hamiltonian"] is True
    assert report["vertices"] <= 2 * len(g.vertices) - 4


def test_export_with_witness(tmp_path):
    src = _fixture(tmp_path, "sphere-outerplanar")
    uni, wit = tmp_path / "u.json", tmp_path / "w.json"
    assert run("embed", src, "--out-universal", uni, "--out-witness", wit) == 0
    dot = tmp_path / "g.dot"
    assert run("export", uni, "--format", "dot", "--out", dot, "--witness", wit) == 0
    assert "fillcolor" in dot.read_text()
    svg = tmp_path / "g.svg"
    assert run("export", src, "--format", "svg", "--out", svg) == 0
    assert svg.read_text().startswith("<svg")


def test_pipeline(tmp_path, capsys):
    src = _fixture(tmp_path)
    outdir = tmp_path / "run"
    assert run("pipeline", src, "--out-dir", outdir) == 0
    manifest = json.loads((outdir / "manifest.json").read_text())
    assert all(manifest["verifications"].values())
    assert (outdir / "universal.json").exists()
    assert (outdir / "witness.json").exists()
