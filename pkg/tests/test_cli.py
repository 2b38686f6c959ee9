import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from tcplan import NoApplicableRule
from tcplan import cli
from tcplan.fixtures import rule1_only_planner
from tcplan.scenario import Scenario, ScenarioError, parse_scenario, parse_space_arg

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def read_csv(text):
    lines = text.splitlines()
    meta = dict(line[2:].split("=", 1) for line in lines if line.startswith("# "))
    rows = list(csv.reader(io.StringIO("\n".join(l for l in lines if not l.startswith("#")))))
    return meta, rows[0], np.array(rows[1:], float)


class TestPlan:
    def test_annulus_csv(self, capsys):
        code, out, _ = run(["plan", "--scenario", DATA / "annulus.json"], capsys)
        assert code == 0
        meta, header, rows = read_csv(out)
        assert meta == {"planner": "annulus(l_O=0.3, l_R=0.2, rho=1)", "rule_index": "1",
                        "rule_count": "2"}
        assert header == ["t", "x1", "x2"]
        assert rows.shape == (256, 3)
        # first third: straight radial move from (2, 0) to (1, 0)
        first = rows[rows[:, 0] <= 1 / 3]
        np.testing.assert_allclose(first[:, 1], 2 - 3 * first[:, 0], atol=1e-12)
        np.testing.assert_allclose(first[:, 2], 0.0, atol=1e-12)
        assert np.all(np.linalg.norm(rows[:, 1:], axis=1) > 0.5)

    @pytest.mark.parametrize("name", ["annulus.json", "annulus_opposite.json", "sphere_s3.json",
                                      "disk.json"])
    def test_round_trip_rows(self, name, capsys):
        doc = json.loads((DATA / name).read_text())
        code, out, _ = run(["plan", "--scenario", DATA / name], capsys)
        _, _, rows = read_csv(out)
        assert code == 0 and len(rows) == doc.get("samples", 256)
        assert np.linalg.norm(rows[0, 1:] - doc["start"]) <= 1e-9
        assert np.linalg.norm(rows[-1, 1:] - doc["goal"]) <= 1e-9

    def test_opposite_uses_second_rule(self, capsys):
        code, out, _ = run(["plan", "--scenario", DATA / "annulus_opposite.json"], capsys)
        meta, _, rows = read_csv(out)
        assert code == 0 and meta["rule_index"] == "2" and len(rows) == 64

    def test_json_round_trip(self, tmp_path, capsys):
        out = tmp_path / "s3.json"
        assert run(["plan", "--scenario", DATA / "sphere_s3.json", "--format", "json",
                    "--out", out], capsys)[0] == 0
        doc = json.loads(out.read_text())
        assert doc["rule_index"] == 2 and doc["rule_count"] == 2
        pts = np.array(doc["points"])
        assert pts.shape == (33, 4)
        np.testing.assert_allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-9)
        np.testing.assert_allclose(pts[24], [0, 1, 0, 0], atol=1e-15)  # t = 0.75

    def test_collision_start_is_invalid(self, capsys):
        code, _, err = run(["plan", "--scenario", DATA / "collision.json"], capsys)
        assert code == 2 and "membership" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["plan", "--scenario", tmp_path / "nope.json"], capsys)[0] == 2

    def test_no_rule_exit_code(self, monkeypatch, capsys):
        monkeypatch.setattr(Scenario, "planner", lambda self: rule1_only_planner())
        code, _, err = run(["plan", "--scenario", DATA / "sphere_antipodal_s1.json"], capsys)
        assert code == 3 and "rule" in err


class TestGoldens:
    @pytest.mark.parametrize("argv,golden", [
        (["plan", "--scenario", "annulus.json"], "annulus.csv"),
        (["plan", "--scenario", "sphere_s3.json", "--format", "json"], "sphere_s3.json"),
        (["render", "--scenario", "annulus.json"], "annulus.svg"),
        (["render", "--scenario", "disk.json"], "disk.svg"),
    ])
    def test_byte_identical(self, argv, golden, tmp_path, capsys):
        argv = [a if not a.endswith(".json") or a == "json" else DATA / a for a in argv]
        outs = []
        for i in range(2):
            target = tmp_path / f"{i}.out"
            assert run(argv + ["--out", target], capsys)[0] == 0
            outs.append(target.read_bytes())
        assert outs[0] == outs[1]
        assert outs[0] == (GOLDEN / golden).read_bytes()


class TestRender:
    def test_annulus_scene(self, capsys):
        code, svg, _ = run(["render", "--scenario", DATA / "annulus.json"], capsys)
        assert code == 0
        assert svg.count("<circle") == 4 and svg.count("<polyline") == 1
        for ident in ("obstacle", "clearance", "retraction", "start", "goal"):
            assert f'id="{ident}"' in svg
        assert 'r="0.300000"' in svg and 'r="0.500000"' in svg

    def test_non_planar_rejected(self, capsys):
        code, _, err = run(["render", "--scenario", DATA / "sphere_s3.json"], capsys)
        assert code == 2 and "planar" in err


class TestVerify:
    def test_sphere_passes(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        code, out, _ = run(["verify", "--space", "sphere:m=1", "--seed", "42", "--n", "300",
                            "--report", report], capsys)
        assert code == 0 and "FAIL" not in out
        doc = json.loads(report.read_text())
        assert doc["all_passed"] and doc["seed"] == 42
        names = {r["check_name"] for r in doc["reports"]}
        assert {"endpoints", "membership", "cover", "junctions", "geodesic",
                "discontinuity_witness"} <= names

    def test_scenario_space(self, capsys):
        code, out, _ = run(["verify", "--scenario", DATA / "annulus.json", "--n", "200"], capsys)
        assert code == 0 and "transfer_wiring" in out

    @pytest.mark.parametrize("name", ["broken-rule", "rule1-only", "broken-junction",
                                      "straight-line"])
    def test_fixtures_fail(self, name, capsys):
        code, out, _ = run(["verify", "--fixture", name, "--n", "200"], capsys)
        assert code == 1 and "FAIL" in out

    def test_unknown_fixture(self, capsys):
        assert run(["verify", "--fixture", "nope"], capsys)[0] == 2

    def test_needs_a_target(self, capsys):
        assert run(["verify"], capsys)[0] == 2


class TestScenarioParsing:
    def test_space_arg(self):
        assert parse_space_arg("sphere:m=2") == {"type": "sphere", "m": 2}
        assert parse_space_arg("annulus:l_O=0.3,l_R=0.2") == {"type": "annulus", "l_O": 0.3,
                                                              "l_R": 0.2}
        assert parse_space_arg("star:disk") == {"type": "star", "shape": "disk"}
        with pytest.raises(ScenarioError):
            parse_space_arg("annulus:l_O")

    @pytest.mark.parametrize("doc,needle", [
        ({"space": {"type": "torus"}, "start": [1, 0], "goal": [0, 1]}, "unknown space"),
        ({"space": {"type": "sphere", "m": 1}, "start": [1, 0, 0], "goal": [0, 1]}, "dimension"),
        ({"space": {"type": "sphere", "m": 1}, "start": [2, 0], "goal": [0, 1]}, "|x| = 1"),
        ({"space": {"type": "annulus", "l_O": 0.3, "l_R": 0.2, "rho": 0.4},
          "start": [2, 0], "goal": [0, 2]}, "rho"),
        ({"space": {"type": "annulus", "l_O": 0.3}, "start": [2, 0], "goal": [0, 2]}, "l_R"),
        ({"space": {"type": "sphere"}, "start": [1, 0]}, "goal"),
        ({"space": {"type": "sphere"}, "start": [1, 0], "goal": [0, 1], "samples": 1}, "samples"),
    ])
    def test_invalid(self, doc, needle):
        with pytest.raises(ScenarioError, match=None) as info:
            parse_scenario(doc)
        assert needle in str(info.value)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tcplan", "plan", "--scenario",
                           str(DATA / "disk.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("\n") == 3 + 1 + 21
