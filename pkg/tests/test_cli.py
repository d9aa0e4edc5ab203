"""End-to-end command line tests, run through subprocesses.

Each test pins the exact stdout contract: scripts consuming these commands
parse the lines, so the formats are part of the interface.  Input files
are produced with the library writers into per-test temp directories.
"""

import subprocess
import sys

import pytest

from conftest import dihedral, relabel, trivial
from homquandles import (
    AbelianGroup,
    Quandle,
    WeightedDigraph,
    build,
    read_qnd,
    read_wdg,
    weak_isomorphism,
    write_qnd,
    write_wdg,
)

TWO_ORBIT = WeightedDigraph(AbelianGroup([3]), [[0, 1], [1, 0]])


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "homquandles", *[str(a) for a in args]],
        capture_output=True,
        text=True,
    )


def test_check_extension(tmp_path):
    path = tmp_path / "two.qnd"
    write_qnd(build(TWO_ORBIT), str(path))
    r = run("check", path)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "order 6",
        "axioms ok",
        "inner abelian yes",
        "inner order 9",
        "orbits 2x3",
        "connected no",
        "homogeneous yes",
    ]


def test_check_rejects_nonabelian(tmp_path):
    path = tmp_path / "r3.qnd"
    write_qnd(dihedral(3), str(path))
    r = run("check", path)
    assert r.returncode == 2
    assert r.stdout.splitlines() == ["order 3", "axioms ok", "inner abelian no"]


def test_check_axiom_violation(tmp_path):
    path = tmp_path / "bad.qnd"
    path.write_text("quandle 2\n1 0\n1 0\n", encoding="ascii")
    r = run("check", path)
    assert r.returncode == 2
    assert any(line.startswith("axiom violated:") for line in r.stdout.splitlines())


def test_check_mixed_orbits_uses_generic_order(tmp_path):
    path = tmp_path / "lopsided.qnd"
    write_qnd(Quandle([[0, 1, 2], [0, 1, 2], [1, 0, 2]]), str(path))
    r = run("check", path)
    assert r.returncode == 0
    out = r.stdout.splitlines()
    assert "inner order 2" in out
    assert "orbits 1x1,1x2" in out
    assert "homogeneous no" in out


def test_build_then_present_round_trip(tmp_path):
    wdg = tmp_path / "w.wdg"
    write_wdg(TWO_ORBIT, str(wdg))

    r = run("build", wdg)
    assert r.returncode == 0
    qnd = tmp_path / "w.qnd"
    assert r.stdout.strip() == "wrote %s" % qnd
    assert read_qnd(str(qnd)) == build(TWO_ORBIT)

    r = run("present", qnd)
    assert r.returncode == 0
    assert r.stdout.startswith("witness ")
    out_wdg = tmp_path / "w.wdg"  # overwritten with the extracted digraph
    assert "wrote %s" % out_wdg in r.stdout.splitlines()
    assert weak_isomorphism(TWO_ORBIT, read_wdg(str(out_wdg))) is not None


def test_present_dot(tmp_path):
    qnd = tmp_path / "q.qnd"
    write_qnd(build(TWO_ORBIT), str(qnd))
    r = run("present", qnd, "--format", "dot")
    assert r.returncode == 0
    dot = (tmp_path / "q.dot").read_text(encoding="ascii")
    assert dot.startswith("digraph {")


def test_iso_quandle_files(tmp_path):
    q = build(TWO_ORBIT)
    f = [3, 5, 1, 0, 4, 2]
    a, b, c = tmp_path / "a.qnd", tmp_path / "b.qnd", tmp_path / "c.qnd"
    write_qnd(q, str(a))
    write_qnd(relabel(q, f), str(b))
    write_qnd(trivial(6), str(c))

    r = run("iso", a, b)
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "isomorphic"
    assert lines[1].startswith("map ")
    assert sorted(int(v) for v in lines[1].split()[1:]) == list(range(6))

    r = run("iso", a, c)
    assert r.returncode == 1
    assert r.stdout.strip() == "not isomorphic"


def test_iso_wdg_files(tmp_path):
    w1 = WeightedDigraph(AbelianGroup([3]), [[0, 1, 0], [0, 0, 1], [2, 0, 0]])
    w2 = WeightedDigraph(AbelianGroup([3]), [[0, 2, 0], [0, 0, 1], [1, 0, 0]])
    w3 = WeightedDigraph(AbelianGroup([3]), [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    a, b, c = tmp_path / "a.wdg", tmp_path / "b.wdg", tmp_path / "c.wdg"
    write_wdg(w1, str(a))
    write_wdg(w2, str(b))
    write_wdg(w3, str(c))

    r = run("iso", a, b)
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "weakly isomorphic"
    assert lines[1].startswith("map ")
    assert lines[2].startswith("flips ")
    assert len(lines[2].split()) == 4  # one flip per vertex

    r = run("iso", a, c)
    assert r.returncode == 1
    assert r.stdout.strip() == "not weakly isomorphic"


def test_iso_mixed_formats_error(tmp_path):
    qnd = tmp_path / "a.qnd"
    wdg = tmp_path / "b.wdg"
    write_qnd(trivial(2), str(qnd))
    write_wdg(TWO_ORBIT, str(wdg))
    r = run("iso", qnd, wdg)
    assert r.returncode == 2
    assert r.stderr.startswith("error:")


def test_classify_stdout_and_catalog(tmp_path):
    outdir = tmp_path / "cat6"
    r = run("classify", 6, "--jobs", 1, "--out", outdir)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "order 6",
        "x 2 a 3: 1",
        "x 3 a 2: 2",
        "x 6 a 1: 1",
        "total 4",
        "wrote 5 files to %s" % outdir,
    ]
    names = sorted(p.name for p in outdir.iterdir())
    assert names == [
        "index.tsv",
        "n6_x2_a3_1.wdg",
        "n6_x3_a2_1.wdg",
        "n6_x3_a2_2.wdg",
        "n6_x6_a1_1.wdg",
    ]


def test_classify_twelve_regression():
    r = run("classify", 12, "--jobs", 2)
    assert r.returncode == 0
    assert "total 37" in r.stdout.splitlines()


def test_classify_deterministic_across_workers(tmp_path):
    d1, d2 = tmp_path / "j1", tmp_path / "j2"
    r1 = run("classify", 8, "--jobs", 1, "--out", d1)
    r2 = run("classify", 8, "--jobs", 2, "--out", d2)
    assert r1.returncode == r2.returncode == 0
    assert r1.stdout.replace(str(d1), "") == r2.stdout.replace(str(d2), "")
    names = sorted(p.name for p in d1.iterdir())
    assert names == sorted(p.name for p in d2.iterdir())
    for name in names:
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()


def test_table_small():
    r = run("table", "--max", 8)
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "1 2 3 4 5 6 7 8",
        "1 1 1 2 1 4 1 7",
    ]


def test_count_two_p():
    r = run("count", "--two-p", 7)
    assert r.returncode == 0
    assert r.stdout.strip() == "15"


def test_count_burnside():
    r = run("count", "--burnside", 5, 2)
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["parts 16+2+2+4", "total 24", "orbits 6"]


def test_count_burnside_rejects_composite():
    r = run("count", "--burnside", 4, 2)
    assert r.returncode == 2
    assert r.stderr.startswith("error:")


def test_qid_summary():
    r = run("qid")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["order 150", "vertices 30", "group Z5"]


def test_qid_export(tmp_path):
    r = run("qid", "--export", tmp_path)
    assert r.returncode == 0
    q = read_qnd(str(tmp_path / "qid.qnd"))
    w = read_wdg(str(tmp_path / "qid.wdg"))
    assert q.n == 150
    assert w.m == 30
    assert build(w) == q


def test_qid_verify():
    r = run("qid", "--verify")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert "homogeneity:" in lines
    assert "no homogeneous weighting:" in lines
    rotations = [ln for ln in lines if ln.strip().startswith("rotation")]
    assert len(rotations) == 24
    assert all(ln.endswith("infeasible") for ln in rotations)


def test_missing_file_is_an_error():
    r = run("check", "no-such-file.qnd")
    assert r.returncode == 2
    assert r.stderr.startswith("error:")
