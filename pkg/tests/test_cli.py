import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from troploc.cli import main
from troploc.location import LocationInstance, objective

GOLDEN = Path(__file__).parent / "golden"
SVG = "{http://www.w3.org/2000/svg}"

SOLVE_CASES = [
    ("line.json", [], "line.report.json"),
    ("line_caps.json", ["--constrained"], "line_caps.report.json"),
    ("planar.json", [], "planar.report.json"),
]
EIG_CASES = [
    ("eig_two_cycle.json", "eig_two_cycle.report.json"),
    ("eig_scalar.json", "eig_scalar.report.json"),
]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("src,flags,golden", SOLVE_CASES)
def test_solve_golden(src, flags, golden, capsys):
    expected = (GOLDEN / golden).read_text(encoding="utf-8")
    for _ in range(2):
        code, out, _ = run(["solve", "--input", str(GOLDEN / src), *flags], capsys)
        assert code == 0
        assert out == expected


@pytest.mark.parametrize("src,golden", EIG_CASES)
def test_eig_golden(src, golden, capsys):
    expected = (GOLDEN / golden).read_text(encoding="utf-8")
    for _ in range(2):
        code, out, _ = run(["eig", "--matrix", str(GOLDEN / src)], capsys)
        assert code == 0 and out == expected


def test_solve_contents(capsys):
    _, out, _ = run(["solve", "--input", str(GOLDEN / "line.json")], capsys)
    rep = json.loads(out)
    assert rep["lambda"] == 5
    assert all(s["objective"] == 5 for s in rep["samples"])

    _, out, _ = run(["solve", "--input", str(GOLDEN / "line_caps.json"), "--constrained"], capsys)
    rep = json.loads(out)
    assert rep["lambda"] == 1 and rep["exact"] is False
    assert [s["x"] for s in rep["samples"]] == [[4]]


def test_eig_contents(capsys):
    _, out, _ = run(["eig", "--matrix", str(GOLDEN / "eig_two_cycle.json")], capsys)
    assert json.loads(out) == {"lambda": 3, "basis": [[0, -1]]}
    _, out, _ = run(["eig", "--matrix", str(GOLDEN / "eig_scalar.json")], capsys)
    assert json.loads(out)["lambda"] == 5


def test_eig_reducible(capsys):
    code, out, err = run(["eig", "--matrix", str(GOLDEN / "eig_reducible.json")], capsys)
    assert code == 2 and out == ""
    assert err.strip().endswith("reducible: no path 2→1")
    assert len(err.strip().splitlines()) == 1


def test_eig_oracle(capsys):
    code, out, _ = run(["eig", "--matrix", str(GOLDEN / "eig_two_cycle.json"), "--oracle"], capsys)
    assert code == 0
    assert json.loads(out)["oracle"] == {"value": 3, "gap": 0}


def test_round_trip(capsys, tmp_path):
    src = tmp_path / "inst.json"
    doc = {"points": [[0.1, -3.7], [9.3, 2.2], [4.4, 8.1]], "weights": [0.3, -1.1, 2.0]}
    src.write_text(json.dumps(doc))
    _, out, _ = run(["solve", "--input", str(src), "--samples", "7"], capsys)
    rep = json.loads(out)
    inst = LocationInstance(doc["points"], doc["weights"])
    for s in rep["samples"]:
        assert objective(inst, s["x"]) == pytest.approx(s["objective"], abs=1e-9)


def test_out_file_and_oracle(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run(
        ["solve", "--input", str(GOLDEN / "planar.json"), "--oracle", "--out", str(out_path)],
        capsys,
    )
    assert code == 0 and out == ""
    rep = json.loads(out_path.read_text())
    assert rep["oracle"]["value"] == 5 and rep["oracle"]["gap"] == 0


def test_constrained_oracle(capsys):
    code, out, _ = run(
        ["solve", "--input", str(GOLDEN / "line_caps.json"), "--constrained", "--oracle"], capsys
    )
    rep = json.loads(out)
    assert code == 0 and rep["oracle"]["value"] == 7


def test_svg(tmp_path, capsys):
    path = tmp_path / "plot.svg"
    code, _, _ = run(["solve", "--input", str(GOLDEN / "planar.json"), "--svg", str(path)], capsys)
    assert code == 0
    text = path.read_text()
    assert text == (GOLDEN / "planar.svg").read_text()
    root = ET.fromstring(text)
    assert root.tag == SVG + "svg"
    polylines = root.findall(f".//{SVG}polyline")
    assert len(polylines) == 1 and polylines[0].get("class") == "solution"
    assert polylines[0].get("points") == "5,-1 5,5"
    rect = root.find(f".//{SVG}rect[@class='bounding-box']")
    assert (rect.get("x"), rect.get("y"), rect.get("width"), rect.get("height")) == ("0", "0", "10", "4")
    lines = root.findall(f".//{SVG}line[@class='construction']")
    assert len(lines) == 2
    for ln in lines:
        dx = float(ln.get("x2")) - float(ln.get("x1"))
        dy = float(ln.get("y2")) - float(ln.get("y1"))
        assert abs(dx) == abs(dy) > 0
    # 10-unit padding around the drawn extent [0, 10] x [-1, 5]
    assert root.get("viewBox") == "-10 -15 30 26"


def test_svg_constrained(tmp_path, capsys):
    src = tmp_path / "caps.json"
    src.write_text(json.dumps({"points": [[0, 0], [10, 4]], "caps": [6, 6]}))
    path = tmp_path / "plot.svg"
    code, out, _ = run(["solve", "--input", str(src), "--constrained", "--svg", str(path)], capsys)
    assert code == 0 and json.loads(out)["exact"] is True
    root = ET.fromstring(path.read_text())
    assert len(root.findall(f".//{SVG}polyline")) == 1
    assert len(root.findall(f".//{SVG}rect[@class='cap']")) == 2
    feas = root.find(f".//{SVG}line[@class='feasible']")
    # S = [4, 6] x [-2, 6]; unconstrained segment x1 = 5, x2 in [-1, 5]
    assert [feas.get(k) for k in ("x1", "y1", "x2", "y2")] == ["5", "-1", "5", "5"]


def test_csv_input(tmp_path, capsys):
    src = tmp_path / "inst.csv"
    src.write_text("0,0\n10,0\n")
    _, out, _ = run(["solve", "--input", str(src), "--csv"], capsys)
    assert json.loads(out)["lambda"] == 5
    src.write_text("0,0,3\n10,0,9\n")
    _, out, _ = run(["solve", "--input", str(src), "--csv", "--constrained"], capsys)
    assert json.loads(out)["lambda"] == 1


@pytest.mark.parametrize(
    "content,flags,fragment",
    [
        ("{not json", [], "malformed JSON"),
        ('{"points": [[0, 1], [2]]}', [], "ragged rows"),
        ('{"points": [[0], [1]]}', ["--constrained"], "--constrained requires caps"),
        ('{"points": [[0], [1]]}', ["--svg", "x.svg"], "--svg needs a planar instance"),
        ('{"points": [[0], [1]], "weights": [1]}', [], "weights"),
        ('{"points": [[0], [NaN]]}', [], "malformed JSON"),
    ],
)
def test_validation_errors(tmp_path, capsys, content, flags, fragment):
    src = tmp_path / "bad.json"
    src.write_text(content)
    code, out, err = run(["solve", "--input", str(src), *flags], capsys)
    assert code == 2 and out == ""
    assert fragment in err and len(err.strip().splitlines()) == 1


def test_oracle_grid_too_large(tmp_path, capsys):
    src = tmp_path / "big.json"
    src.write_text(json.dumps({"points": [[0, 0, 0], [100, 100, 100]]}))
    code, _, err = run(["solve", "--input", str(src), "--oracle"], capsys)
    assert code == 3 and "grid" in err


def test_missing_subcommand(capsys):
    assert main([]) == 2
