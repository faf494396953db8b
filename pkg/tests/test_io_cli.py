from __future__ import annotations

import json
import subprocess
import sys

import pytest

from babylon.cli import EXIT_CHECK, EXIT_GUARD, EXIT_OK, EXIT_USAGE, main
from babylon.graph import build
from babylon.io import (
    CACHE_ENV,
    CacheFormatError,
    csv_payload,
    fmt_real,
    read_edge_cache,
    sha256_file,
    write_edge_cache,
)


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cache_round_trip(tmp_path):
    g = build(3000)
    path = tmp_path / "edges.txt"
    write_edge_cache(g, path)
    h = read_edge_cache(path)
    assert h.digest() == g.digest()
    assert h.edges() == g.edges()
    assert path.read_text().splitlines()[:2] == ["babylon-edges v1 n=3000", "3 4 5"]


def test_cache_round_trip_empty(tmp_path):
    path = tmp_path / "e.txt"
    write_edge_cache(build(2), path)
    assert read_edge_cache(path).digest() == build(2).digest()


@pytest.mark.parametrize(
    "body",
    [
        "nonsense\n3 4 5\n",
        "babylon-edges v1 n=x\n",
        "babylon-edges v1 n=10\n3 4 6\n",
        "babylon-edges v1 n=10\n6 8 10\n3 4 5\n",
        "babylon-edges v1 n=4\n3 4 5\n6 8 10\n",
        "babylon-edges v1 n=10\n3 4\n",
    ],
)
def test_cache_rejects_bad_files(tmp_path, body):
    path = tmp_path / "bad.txt"
    path.write_text(body)
    with pytest.raises((CacheFormatError, ValueError)):
        read_edge_cache(path)


def test_payload_helpers():
    assert fmt_real(1 / 3) == "0.333333333333"
    assert csv_payload(("a", "b"), [(1, 0.5)]) == "a,b\n1,0.5\n"


def test_stats_main_betti(capsys):
    code, out = run(capsys, "stats", "--n", "1000", "--scope", "main", "--betti")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["f_vector"][:3] == [480, 952, 10]
    assert rep["chi"] == -462
    assert rep["betti"][:2] == [1, 463]


def test_stats_components_n5(capsys):
    code, out = run(capsys, "stats", "--n", "5", "--degrees")
    rep = json.loads(out)
    assert sorted(c["members"] for c in rep["components"]) == [[1], [2], [3, 4], [5]]
    assert rep["degree_histogram"] == {"0": 3, "1": 2}


def test_stats_diameter(capsys):
    code, out = run(capsys, "--threads", "2", "stats", "--n", "5000", "--diameter", "--no-members")
    assert json.loads(out)["diameter"] == 18


@pytest.mark.parametrize("m, rows", [(100, 0), (300, 2), (1000, 10)])
def test_bricks_rows(capsys, m, rows):
    code, out = run(capsys, "bricks", "--max", str(m))
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "x,y,z,dxy,dxz,dyz,primitive,perfect"
    assert len(lines) - 1 == rows


def test_planarity_command(capsys):
    assert run(capsys, "planarity", "--n", "96") == (EXIT_OK, "non-planar\n")
    assert run(capsys, "planarity", "--n", "95") == (EXIT_OK, "planar\n")


def test_growth_csv_is_reproducible(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["growth", "--max", "25000", "--step", "1000", "--out", str(a)]) == EXIT_OK
    assert main(["growth", "--max", "25000", "--step", "1000", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 26
    ma = json.loads((tmp_path / "a.csv.manifest.json").read_text())
    mb = json.loads((tmp_path / "b.csv.manifest.json").read_text())
    assert ma["result_digest"] == mb["result_digest"] == sha256_file(a)


def test_search_k4_command(capsys):
    code, out = run(capsys, "search", "k4", "--n", "1000", "--wmax", "100000")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["exact_hits"] == [] and rep["triangle_count"] == 10


def test_search_perfect_command(capsys):
    code, out = run(capsys, "search", "perfect", "--family", "composed_st", "--smax", "30", "--tmax", "30", "--keep", "3")
    rep = json.loads(out)
    assert rep["exact_hits"] == [] and len(rep["near_misses"]) == 3


def test_reruns_are_byte_identical(capsys):
    for argv in (
        ["stats", "--n", "2000", "--betti", "--degrees"],
        ["search", "k4", "--n", "2000", "--wmax", "20000", "--epsilon", "0.05"],
        ["bricks", "--max", "2000", "--primitive"],
    ):
        first = run(capsys, *argv)
        assert run(capsys, *argv) == first


def test_thread_count_does_not_change_output(capsys):
    argv = ["search", "k4", "--n", "2000", "--wmax", "20000", "--epsilon", "0.05"]
    assert run(capsys, "--threads", "1", *argv) == run(capsys, "--threads", "3", *argv)


def test_build_with_cache_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    code, out = run(capsys, "--manifest", str(tmp_path / "m.json"), "build", "--n", "1000")
    assert code == EXIT_OK
    cache = tmp_path / "edges-1000.txt"
    assert cache.exists()
    assert json.loads(out)["digest"] == build(1000).digest()
    manifest = json.loads((tmp_path / "m.json").read_text())
    assert manifest["input_digests"] == {str(cache): sha256_file(cache)}
    # second run reads the cache and reports the same graph
    code, again = run(capsys, "stats", "--n", "1000", "--no-members")
    assert json.loads(again)["f_vector"] == [1000, 1034, 10, 0]


def test_cache_size_mismatch(tmp_path, capsys):
    path = tmp_path / "c.txt"
    write_edge_cache(build(50), path)
    code, _ = run(capsys, "stats", "--n", "60", "--cache", str(path))
    assert code == EXIT_USAGE


def test_exit_codes(capsys):
    assert main(["stats", "--n", "2000000"]) == EXIT_GUARD
    assert "build-ceiling" in capsys.readouterr().err
    assert main(["--ceiling", "100", "bricks", "--max", "300"]) == EXIT_GUARD
    assert main(["stats"]) == EXIT_USAGE
    assert main(["bricks", "--max", "0"]) == EXIT_USAGE
    assert main(["search", "k4", "--n", "100", "--wmax", "10"]) == EXIT_USAGE
    assert main(["search", "k4", "--n", "1000", "--wmax", "10", "--epsilon", "2"]) == EXIT_USAGE
    assert main(["growth", "--max", "10", "--step", "100"]) == EXIT_USAGE


def test_verify_quick(capsys):
    code, out = run(capsys, "verify", "--quick")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["passed"]
    names = [c["name"] for c in rep["checks"]]
    assert any("planarity" in n for n in names)
    assert any("Diophantine" in n for n in names)
    assert any("count for sides <= 2000" in w for w in rep["warnings"])
    assert EXIT_CHECK == 1


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "babylon", "planarity", "--n", "96"], capture_output=True, text=True, check=True
    )
    assert out.stdout == "non-planar\n"
