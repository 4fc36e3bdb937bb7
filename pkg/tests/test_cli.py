import json
from pathlib import Path

import pytest

from cliffordforms.cli import demo_text, main
from cliffordforms.errors import SchemaError, SlotParseError
from cliffordforms.scenario import SUITES, load_scenario, parse_scenario, sample_points
from cliffordforms.suites import run_suites

GOLDEN = Path(__file__).parent / "golden" / "minkowski_quick.json"
QUICK = ["--suite", "geometry", "--suite", "theorem2", "--suite", "lie", "--points", "2"]
LIGHT = ["--suite", "geometry", "--suite", "theorem2", "--points", "2"]

DIM3_BAD = """
n = 3
[metric]
g11 = "1"
g22 = "-1"
g33 = "-1"
g44 = "-1"
"""


def write(tmp_path, text, name="s.scn"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_bundled_scenarios_load():
    for name in ("minkowski", "frw-diag", "perturbed", "dim2", "dim3"):
        s = parse_scenario(demo_text(name), f"{name}.scn")
        assert s.name == name


def test_wrong_size_metric(tmp_path):
    with pytest.raises(SchemaError, match="g44"):
        load_scenario(write(tmp_path, DIM3_BAD))


def test_missing_diagonal():
    with pytest.raises(SchemaError, match="g44 is missing"):
        parse_scenario('[metric]\ng11 = "1"\ng22 = "-1"\ng33 = "-1"\n')


def test_bad_expression_names_slot():
    text = demo_text("minkowski").replace('g22 = "-1"', 'g22 = "-(1 + x2"')
    with pytest.raises(SlotParseError) as info:
        parse_scenario(text)
    assert info.value.slot == "metric.g22"
    assert str(info.value).startswith("metric.g22:")


def test_explicit_points_and_sobol():
    s = parse_scenario(demo_text("minkowski") + "explicit = [[0.1, 0.2, 0.3, 0.4]]\n")
    assert sample_points(s.points, 4).tolist() == [[0.1, 0.2, 0.3, 0.4]]
    pts = sample_points(s.points, 4, count=6, seed=2)
    assert pts.shape == (6, 4) and (abs(pts) <= 0.5).all()


def test_list_suites(capsys):
    assert main(["list-suites"]) == 0
    out = capsys.readouterr().out.split("\n")
    assert [line.split()[0] for line in out if line] == list(SUITES)


def test_exit_codes(tmp_path, capsys, monkeypatch):
    assert main(["demo", "minkowski", *QUICK]) == 0
    assert main(["verify", str(tmp_path / "nope.scn")]) == 2
    assert main(["verify", str(write(tmp_path, DIM3_BAD))]) == 2
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2
    monkeypatch.setenv("CLIFFORDFORMS_TOL_SCALE", "banana")
    assert main(["demo", "minkowski", "--suite", "lie", "--points", "1"]) == 2
    capsys.readouterr()


def test_negative_control_fails(capsys):
    code = main(["demo", "minkowski", "--suite", "theorem2", "--points", "1", "--debug-perturb-b", "1e-3"])
    assert code == 1
    assert "FAIL" in capsys.readouterr().out.upper()


def _structured(tmp_path, name):
    out = tmp_path / name
    main(["demo", "minkowski", *LIGHT, "--format", "structured", "--out", str(out)])
    doc = json.loads(out.read_text())
    doc.pop("generated")
    return doc


def test_reports_are_deterministic(tmp_path, capsys):
    assert _structured(tmp_path, "a.json") == _structured(tmp_path, "b.json")
    texts = []
    for _ in range(2):
        main(["demo", "minkowski", *LIGHT])
        lines = capsys.readouterr().out.splitlines()
        texts.append([ln for ln in lines if not ln.startswith("generated:")])
    assert texts[0] == texts[1]


def test_golden_outcomes():
    s = parse_scenario(demo_text("minkowski"), "minkowski.scn")
    run = run_suites(s, ["geometry", "theorem2", "lie"], points=2)
    got = [[r.suite, r.point, r.identity, r.status] for r in run.records]
    assert got == json.loads(GOLDEN.read_text())
