import os
from pathlib import Path

import pytest

from garside.cli import main

DINF = "name: D-infinity\ngenerators: s t\nmatrix:\n1 0\n0 1\n"
S3 = "name: I2(3)\ngenerators: s t\nmatrix:\n1 3\n3 1\n"
A2 = "name: affine-A2\ngenerators: s t u\nmatrix:\n1 3 3\n3 1 3\n3 3 1\n"
BAD = "generators: s t\nmatrix:\n1 3\n4 1\n"


@pytest.fixture
def workspace(tmp_path, monkeypatch):
    monkeypatch.setenv("GARSIDE_CACHE_DIR", str(tmp_path / "cache"))
    (tmp_path / "dinf.txt").write_text(DINF)
    (tmp_path / "s3.txt").write_text(S3)
    (tmp_path / "a2.txt").write_text(A2)
    (tmp_path / "bad.txt").write_text(BAD)
    return tmp_path


def run(*argv):
    return main([str(a) for a in argv])


def test_shadow_low(workspace):
    out = workspace / "L.txt"
    assert run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", out) == 0
    text = out.read_text()
    assert "provenance: low" in text
    assert "constant-m: 1" in text
    assert text.strip().splitlines()[-3:] == ["-", "s", "t"]


def test_shadow_kinds(workspace):
    for kind in ("gamma", "mlow=1", "closure"):
        out = workspace / f"{kind}.txt"
        assert run("shadow", "--group", workspace / "s3.txt", "--kind", kind, "--out", out) == 0
    assert "elements: 6" in (workspace / "gamma.txt").read_text()
    assert "elements: 6" in (workspace / "closure.txt").read_text()


def test_shadow_closure_with_seed(workspace):
    seed = workspace / "seed.txt"
    seed.write_text("st\n")
    out = workspace / "closed.txt"
    assert run(
        "shadow", "--group", workspace / "dinf.txt", "--kind", "closure",
        "--seed", seed, "--out", out,
    ) == 0
    body = out.read_text().strip().splitlines()
    assert body[-4:] == ["-", "s", "t", "st"]


def test_malformed_matrix_exits_1(workspace, capsys):
    code = run("shadow", "--group", workspace / "bad.txt", "--kind", "low",
               "--out", workspace / "x.txt")
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("error: group-parse:")
    assert "m[0,1]=3" in err


def test_automaton_export(workspace):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", shadow)
    dot = workspace / "aut.dot"
    assert run("automaton", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--format", "dot", "--out", dot) == 0
    content = dot.read_text()
    assert content.count("doublecircle") == 3
    assert content.count('" -> ') == 0  # sanity: labels quoted
    assert sum(1 for line in content.splitlines() if "->" in line and "__start" not in line) == 4
    text = workspace / "aut.txt"
    assert run("automaton", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--format", "text", "--out", text) == 0
    assert "states: 3" in text.read_text()


def test_automaton_rejects_mismatched_group(workspace):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", shadow)
    code = run("automaton", "--group", workspace / "s3.txt", "--shadow", shadow,
               "--format", "dot", "--out", workspace / "x.dot")
    assert code == 2


def test_corrupted_shadow_exits_2(workspace):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "s3.txt", "--kind", "low", "--out", shadow)
    text = shadow.read_text()
    corrupted = text.replace("elements: 6", "elements: 5").replace("\nsts", "")
    shadow.write_text(corrupted)
    code = run("language", "--group", workspace / "s3.txt", "--shadow", shadow,
               "--max-len", "3", "--out", workspace / "x.txt")
    assert code == 2


def test_language_slice(workspace):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", shadow)
    out = workspace / "lang.txt"
    assert run("language", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--max-len", "3", "--out", out) == 0
    assert out.read_text().splitlines() == ["-", "s", "t", "st", "ts", "sts", "tst"]
    zero = workspace / "lang0.txt"
    run("language", "--group", workspace / "dinf.txt", "--shadow", shadow,
        "--max-len", "0", "--out", zero)
    assert zero.read_text() == "-\n"


def test_full_group_language_line_count(workspace):
    shadow = workspace / "W.txt"
    run("shadow", "--group", workspace / "s3.txt", "--kind", "closure", "--out", shadow)
    out = workspace / "lang.txt"
    assert run("language", "--group", workspace / "s3.txt", "--shadow", shadow,
               "--max-len", "3", "--out", out) == 0
    lines = out.read_text().splitlines()
    # every element once, plus a second word for the longest element
    assert len(lines) == 7
    assert "sts" in lines and "tst" in lines


def test_verify_passes(workspace):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", shadow)
    report = workspace / "report.txt"
    assert run("verify", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--radius", "6", "--out", report) == 0
    assert report.read_text().rstrip().endswith("result: pass")


def test_verify_affine_gamma(workspace):
    shadow = workspace / "G.txt"
    run("shadow", "--group", workspace / "a2.txt", "--kind", "gamma", "--out", shadow)
    report = workspace / "report.txt"
    assert run("verify", "--group", workspace / "a2.txt", "--shadow", shadow,
               "--radius", "7", "--out", report) == 0


def test_project(workspace, capsys):
    shadow = workspace / "L.txt"
    run("shadow", "--group", workspace / "dinf.txt", "--kind", "low", "--out", shadow)
    assert run("project", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--word", "stst") == 0
    out = capsys.readouterr().out
    assert "pi: s" in out
    assert "nu: sts" in out
    assert "chain: stst sts st s -" in out
    # a word that normalizes to the identity
    run("project", "--group", workspace / "dinf.txt", "--shadow", shadow, "--word", "ss")
    out = capsys.readouterr().out
    assert "element: -" in out and "chain: -" in out
    # unknown letter
    assert run("project", "--group", workspace / "dinf.txt", "--shadow", shadow,
               "--word", "sxt") == 1


def test_determinism_and_cache_transparency(workspace):
    shadow = workspace / "L.txt"
    group = workspace / "dinf.txt"
    run("shadow", "--group", group, "--kind", "low", "--out", shadow)
    a, b, c = (workspace / n for n in ("a.txt", "b.txt", "c.txt"))
    run("automaton", "--group", group, "--shadow", shadow, "--format", "text", "--out", a)
    # second run hits the cache
    run("automaton", "--group", group, "--shadow", shadow, "--format", "text", "--out", b)
    # third run bypasses it
    run("automaton", "--group", group, "--shadow", shadow, "--format", "text",
        "--out", c, "--no-cache")
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()
    cache_files = list(Path(os.environ["GARSIDE_CACHE_DIR"]).glob("*.txt"))
    assert cache_files  # something was cached


def test_verify_failure_exit_code(workspace, monkeypatch):
    # an artificially assembled shadow file that validates as a shadow but
    # belongs to another group is the mismatch path (exit 2); a genuinely
    # failing check is hard to produce honestly, so exercise exit 3 via a
    # doctored report through the cache.
    shadow = workspace / "L.txt"
    group = workspace / "dinf.txt"
    run("shadow", "--group", group, "--kind", "low", "--out", shadow)
    report = workspace / "report.txt"
    assert run("verify", "--group", group, "--shadow", shadow,
               "--radius", "4", "--out", report) == 0
    # poison the cache entry for this exact query and re-run: the doctored
    # failing payload must surface exit code 3
    cache_dir = Path(os.environ["GARSIDE_CACHE_DIR"])
    entries = sorted(cache_dir.glob("*.txt"), key=lambda p: p.stat().st_mtime)
    target = entries[-1]
    target.write_text(report.read_text().replace("result: pass", "result: FAIL"))
    assert run("verify", "--group", group, "--shadow", shadow,
               "--radius", "4", "--out", report) == 3
