"""The command line: pipelines, exit codes, deterministic output."""
import json
import os
import subprocess
import sys

from polyface.cli import main

PKG_ENV = dict(os.environ)


def run_cli(*args, threads=None):
    env = dict(PKG_ENV)
    if threads is not None:
        env["POLYFACE_THREADS"] = str(threads)
    return subprocess.run(
        [sys.executable, "-m", "polyface", *args],
        capture_output=True, text=True, env=env,
    )


class TestGenDescribe:
    def test_pipeline(self, tmp_path):
        path = tmp_path / "cube.json"
        assert main(["gen", "--family", "cube", "--dim", "3",
                     "--out", str(path)]) == 0
        out = tmp_path / "describe.json"
        assert main(["describe", "--in", str(path), "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["f_vector"] == [8, 12, 6]
        assert data["simple"] is True and data["simplicial"] is False

    def test_describe_inline_family(self, capsys):
        assert main(["describe", "--family", "cross", "--dim", "4"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["f_vector"] == [8, 24, 32, 16]

    def test_missing_input_fails(self):
        proc = run_cli("describe")
        assert proc.returncode == 1
        assert "error" in proc.stderr


class TestVerifyBounds:
    def test_octahedron_equalities(self, tmp_path):
        out = tmp_path / "report.json"
        assert main(["verify-bounds", "--family", "cross", "--dim", "3",
                     "--out", str(out)]) == 0
        report = json.loads(out.read_text())["bounds"]
        eq_facets = [r["k"] for r in report["rows"] if r["equality_facets"]]
        assert eq_facets == [1, 2]

    def test_cyclic_clean_exit(self):
        assert main(["verify-bounds", "--family", "cyclic", "--dim", "4",
                     "--n", "7", "--out", os.devnull]) == 0


class TestAngles:
    def test_small_run(self, tmp_path):
        out = tmp_path / "angles.json"
        assert main(["angles", "--family", "simplex", "--dim", "2",
                     "--samples", "40000", "--directions", "3",
                     "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert all(f["passed"] for f in data["floors"])
        assert all(c["ok"] for c in data["curvature"])


class TestProject:
    def test_cube_run(self, tmp_path):
        out = tmp_path / "project.json"
        assert main(["project", "--family", "cube", "--dim", "3",
                     "--directions", "3", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert len(data["diagrams"]) == 3
        for diagram in data["diagrams"]:
            assert diagram["interior_count"] >= 1
            assert diagram["boundary_homeomorphic"] is True
            assert all(g["ok"] for g in diagram["gaps"])


class TestCorpus:
    def test_default_grid_clean(self, tmp_path):
        out = tmp_path / "corpus.csv"
        assert main(["corpus", "--families", "simplex,cube,cross,cyclic",
                     "--dims", "2..4", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("family,dim,n,k,f_k")
        assert all("VIOLATED" not in line for line in lines)

    def test_byte_identical_across_thread_counts(self, tmp_path):
        texts = []
        for threads in (1, 4):
            out = tmp_path / f"corpus-{threads}.csv"
            proc = run_cli("corpus", "--families", "simplex,cube,cross,cyclic",
                           "--dims", "2..4", "--out", str(out),
                           threads=threads)
            assert proc.returncode == 0
            texts.append(out.read_bytes())
        assert texts[0] == texts[1]
