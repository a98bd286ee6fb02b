import json
from pathlib import Path

import pytest

from contracta.cli import CEILING_ENV, REPORT_KEYS, main

GOLDEN = sorted((Path(__file__).parent / "golden").glob("*.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_width_laufer(capsys):
    assert run(capsys, "width", "--builtin", "laufer:1", "--kill", "R") == (0, "9", "")


def test_knit_e7(capsys):
    code, out, _ = run(capsys, "knit", "--type", "E7")
    assert code == 0
    assert out.endswith("1 + 2 + 3 + 4 + 4 + 4 + 3 + 2 + 1 = 24")


def test_free_algebra_is_unknown(capsys):
    code, out, _ = run(capsys, "width", "--builtin", "free2")
    assert code == 2 and out.startswith("infinite_or_unknown")


@pytest.mark.parametrize("argv", [
    ["width"],
    ["width", "--builtin", "nosuch:1"],
    ["width", "--builtin", "pagoda:2", "--kill", "Q"],
    ["knit"],
    ["knit", "--type", "E9"],
    ["checkhom", "--builtin", "quantum_cusp:1", "--assign", "x"],
    ["width", "/nonexistent/file.alg"],
])
def test_input_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_file_input(capsys, tmp_path):
    f = tmp_path / "cusp.alg"
    f.write_text("algebra c { vertices: v; arrows: x: v->v, y: v->v;"
                 " relations: x*y + y*x; x^2 - y^3; }\n")
    assert run(capsys, "width", str(f)) == (0, "9", "")
    assert run(capsys, "cwidth", str(f)) == (0, "5", "")
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra t { vertices: R, N; arrows: a: R->N; relations: a*a; }")
    assert run(capsys, "width", str(bad))[0] == 1


def test_order_option(capsys):
    code, out, _ = run(capsys, "gb", "--builtin", "quantum_cusp:1", "--order", "y,x", "--format", "json")
    basis = json.loads(out)["basis"]
    assert sorted(basis) == sorted(["1", "x", "x^2", "y", "x*y", "x^2*y", "y^2", "x*y^2", "x^2*y^2"])


def test_ceiling_environment_override(capsys, monkeypatch):
    monkeypatch.setenv(CEILING_ENV, "6")
    code, out, _ = run(capsys, "width", "--builtin", "quantum_cusp:5")
    assert code == 2 and "6" in out
    monkeypatch.setenv(CEILING_ENV, "zz")
    assert run(capsys, "width", "--builtin", "quantum_cusp:1")[0] == 1
    monkeypatch.delenv(CEILING_ENV)
    assert run(capsys, "width", "--builtin", "quantum_cusp:5") == (0, "33", "")


def test_checkhom_rejects(capsys, tmp_path):
    f = tmp_path / "y2.alg"
    f.write_text("algebra t { vertices: v; arrows: y: v->v; relations: y^2; }")
    assert run(capsys, "checkhom", str(f), "--gamma", "3", "--assign", "y=e") == (0, "rejected", "")
    assert run(capsys, "checkhom", str(f), "--gamma", "3", "--assign", "y=e^2") == (0, "accepted", "")


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden_json(capsys, path):
    golden = json.loads(path.read_text())
    code, out, _ = run(capsys, *golden["argv"], "--format", "json")
    report = json.loads(out)
    assert code == golden["exit"]
    assert list(report) == list(REPORT_KEYS)
    assert report == golden["report"]


def test_every_command_has_the_same_keys(capsys):
    for argv in (["builtin", "--builtin", "pagoda:2"], ["contract", "--builtin", "laufer:1"]):
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0 and list(json.loads(out)) == list(REPORT_KEYS)
