import csv
import json

import pytest

from graphmetrics.cli import main, parse_gen_spec
from graphmetrics.graph import GraphValidationError, load_dimacs

PATH_FIXTURE = (
    "p sp 4 6\n"
    "a 1 2 1\na 2 1 1\n"
    "a 2 3 1\na 3 2 1\n"
    "a 3 4 1\na 4 3 1\n"
)

DISCONNECTED_FIXTURE = "p sp 4 2\na 1 2 1\na 3 4 1\n"


@pytest.fixture
def path_file(tmp_path):
    p = tmp_path / "path.gr"
    p.write_text(PATH_FIXTURE)
    return str(p)


class TestGenSpecParsing:
    def test_complete(self):
        spec = parse_gen_spec("complete:1000:seed=1")
        assert (spec.kind, spec.n, spec.seed) == ("complete", 1000, 1)

    def test_sparse_with_target(self):
        spec = parse_gen_spec("sparse:100:150:seed=7")
        assert spec.target_edges == 150

    def test_sparse_connected_alias(self):
        assert parse_gen_spec("sparse-connected:10:seed=0").kind == "sparse"

    def test_weight_options(self):
        spec = parse_gen_spec("complete:8:seed=2:wlo=1:whi=5:int=1")
        assert spec.weight_range == (1.0, 5.0)
        assert spec.integer_weights

    def test_bad_specs(self):
        for text in ["complete", "complete:x", "complete:5:bogus=1"]:
            with pytest.raises(GraphValidationError):
                parse_gen_spec(text)


class TestMetricsCommand:
    def test_path_fixture_values(self, path_file, tmp_path, capsys):
        out = tmp_path / "rep.json"
        rc = main(["metrics", "--input", path_file, "--mode", "p1",
                   "--target", "both", "--json", str(out)])
        assert rc == 0
        reports = json.loads(out.read_text())
        by_algo = {r["algo"]: r for r in reports}
        assert by_algo["R1"]["radius"] == 2.0
        assert by_algo["R1"]["center"] == 2  # original 1-based id of vertex 1
        assert by_algo["D1"]["diameter"] == 3.0
        assert sorted(by_algo["D1"]["pair"]) == [1, 4]

    def test_p2_mode_matches_p1(self, path_file, tmp_path):
        out = tmp_path / "rep.json"
        assert main(["metrics", "--input", path_file, "--mode", "p2",
                     "--json", str(out)]) == 0
        by_algo = {r["algo"]: r for r in json.loads(out.read_text())}
        assert by_algo["R2"]["radius"] == 2.0
        assert by_algo["D2"]["diameter"] == 3.0
        assert by_algo["R2"]["sssp_count"] == 0
        assert "matrix_build_ms" in by_algo["R2"]

    def test_generated_input(self, tmp_path):
        out = tmp_path / "rep.json"
        rc = main(["metrics", "--gen", "complete:50:seed=1", "--target", "radius",
                   "--json", str(out)])
        assert rc == 0
        (report,) = json.loads(out.read_text())
        assert report["seed"] == 1
        assert 0.0 <= report["sssp_share"] <= 1.0

    def test_disconnected_exits_nonzero(self, tmp_path, capsys):
        p = tmp_path / "two.gr"
        p.write_text(DISCONNECTED_FIXTURE)
        assert main(["metrics", "--input", str(p)]) == 2
        assert "unreachable" in capsys.readouterr().err

    def test_parse_error_reports_line(self, tmp_path, capsys):
        p = tmp_path / "bad.gr"
        p.write_text("p sp 2 1\na 1 zebra 1\n")
        assert main(["metrics", "--input", str(p)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_memory_guard_on_p2(self, tmp_path, capsys):
        assert main(["metrics", "--gen", "sparse:30:seed=0", "--mode", "p2",
                     "--max-matrix-n", "10"]) == 2


class TestOracleCommand:
    def test_unit_complete(self, tmp_path, capsys):
        out = tmp_path / "rep.json"
        rc = main(["oracle", "--gen", "complete:4:seed=0:wlo=1:whi=1",
                   "--json", str(out)])
        assert rc == 0
        by_algo = {r["algo"]: r for r in json.loads(out.read_text())}
        assert by_algo["RC1"]["radius"] == 1.0
        assert by_algo["DC1"]["diameter"] == 1.0
        assert "centers: [1, 2, 3, 4]" in capsys.readouterr().out

    def test_path_centers(self, path_file, capsys):
        assert main(["oracle", "--input", path_file]) == 0
        assert "centers: [2, 3]" in capsys.readouterr().out


class TestBenchCommand:
    def test_single_fixture_csv(self, path_file, tmp_path):
        out = tmp_path / "bench.csv"
        rc = main(["bench", "--input", path_file, "--repeats", "1", "--csv", str(out)])
        assert rc == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert [r["algo"] for r in rows] == ["RC1", "R1", "DC1", "D1"]
        r1 = next(r for r in rows if r["algo"] == "R1")
        assert float(r1["value"]) == 2.0
        assert float(r1["sssp_share"]) <= 1.0
        assert r1["errors"] == ""

    def test_p2_suite(self, tmp_path):
        out = tmp_path / "bench.csv"
        rc = main(["bench", "--gen", "complete:40:seed=3", "--mode", "p2",
                   "--repeats", "2", "--csv", str(out)])
        assert rc == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert [r["algo"] for r in rows] == ["RC2", "R2", "DC2", "D2"]
        assert float(rows[1]["value"]) == float(rows[0]["value"])

    def test_failures_recorded_per_input(self, tmp_path):
        missing = str(tmp_path / "nope.gr")
        out = tmp_path / "bench.csv"
        rc = main(["bench", "--input", missing, "--gen", "complete:10:seed=0",
                   "--csv", str(out)])
        assert rc == 0  # suite continues past per-input failures
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert rows[0]["errors"] != ""
        assert [r["algo"] for r in rows[1:]] == ["RC1", "R1", "DC1", "D1"]

    def test_no_inputs_is_an_error(self, capsys):
        assert main(["bench"]) == 2


class TestGenCommand:
    def test_roundtrip(self, tmp_path):
        out = tmp_path / "gen.gr"
        rc = main(["gen", "--gen", "sparse:30:60:seed=9", "--output", str(out)])
        assert rc == 0
        g = load_dimacs(out)
        assert g.n == 30
        assert 29 <= g.m <= 60


def test_json_report_roundtrip(path_file, tmp_path):
    out = tmp_path / "rep.json"
    main(["metrics", "--input", path_file, "--json", str(out)])
    reports = json.loads(out.read_text())
    redumped = json.loads(json.dumps(reports))
    assert redumped == reports
    for r in reports:
        assert isinstance(r["radius" if r["algo"].startswith("R") else "diameter"], float)
