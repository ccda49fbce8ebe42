import json
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from lipfractal.cli import main
from lipfractal.fractal import E, F, FULL3
from lipfractal.render import RenderSpec, render_svg

GOLDEN = Path(__file__).parent / "golden"
SVG = "{http://www.w3.org/2000/svg}"


def _cells(svg: str, group="cells"):
    root = ET.fromstring(svg.split("?>", 1)[1])
    g = next(el for el in root.iter(f"{SVG}g") if el.get("id") == group)
    return [(int(r.get("x")), int(r.get("y")), int(r.get("width"))) for r in g]


def test_level_one_E():
    cells = _cells(render_svg(RenderSpec(E, 1)))
    # origins (0,0),(1/3,0),(2/3,0),(2/3,1/3),(1/3,2/3) with y flipped
    assert cells == [(0, 2, 1), (1, 2, 1), (2, 2, 1), (2, 1, 1), (1, 0, 1)]


def test_level_zero_is_unit_square():
    for sys in (E, F, FULL3):
        assert _cells(render_svg(RenderSpec(sys, 0))) == [(0, 0, 1)]


@pytest.mark.parametrize("level", [0, 1, 2, 4])
def test_cell_count(level):
    assert len(_cells(render_svg(RenderSpec(F, level)))) == 5**level


def test_highlight_overlay():
    svg = render_svg(RenderSpec(E, 4, (("3551", "red"), ("35", "#ff8800"))))
    # the cylinder 3551 has origin (66, 24)/81; rows are counted from the top
    assert _cells(svg, "cylinder-0") == [(66, 80 - 24, 1)]
    assert len(_cells(svg, "cylinder-1")) == 25
    deeper = render_svg(RenderSpec(E, 2, (("3551", "red"),)))
    assert _cells(deeper, "cylinder-0")[0][2] == 1 and _cells(deeper, "cells")[0][2] == 9


def test_render_deterministic_and_golden():
    spec = RenderSpec(E, 3, (("3551", "red"), ("4251", "red"), ("4551", "red")), 300)
    assert render_svg(spec) == render_svg(spec)
    assert render_svg(spec) == (GOLDEN / "E_level3_cycle.svg").read_text()


@pytest.mark.parametrize(
    "spec",
    [RenderSpec(E, 9), RenderSpec(E, -1), RenderSpec(E, 2, (("6", "red"),)), RenderSpec(E, 2, (("1", "r;d"),))],
)
def test_render_rejects(spec):
    with pytest.raises(ValueError):
        render_svg(spec)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_map(capsys):
    assert run(capsys, "map", "--code", "3551") == (0, "4251\n", "")
    assert run(capsys, "map", "--code", "4251", "--inverse")[1] == "3551\n"
    assert run(capsys, "map", "--code", "2355542225543", "--streaming")[1] == "2422542255543\n"


@pytest.mark.parametrize("code", ["", "3551", "2355542225543", "4242455"])
def test_cli_map_roundtrip(capsys, code):
    _, out, _ = run(capsys, "map", "--code", code)
    _, back, _ = run(capsys, "map", "--code", out.strip(), "--inverse")
    assert back.strip() == code


def test_cli_separation(capsys):
    code, out, _ = run(capsys, "separation", "--system", "E", "--x", "134", "--y", "214")
    assert code == 0
    assert out.splitlines() == ["2", "id,e1,e1,Exit"]
    _, out, _ = run(capsys, "separation", "--system", "E", "--x", "13@3", "--y", "21@1")
    assert out.splitlines()[0] == "inf"


def test_cli_custom_system(capsys):
    code, out, _ = run(capsys, "separation", "--digits", "0,0;1,1;2,2", "--x", "12@1", "--y", "21@1")
    assert code == 0 and out.splitlines()[1].startswith("id,(1,1)")
    code, _, err = run(capsys, "separation", "--digits", "0,0;1,1;2,2", "--x", "12", "--y", "2")
    assert code == 1 and "invalid letter" in err


def test_cli_decompose_point(capsys):
    assert run(capsys, "decompose", "--code", "2355542225543")[1] == "(2)(3555)(42225)(5)(4)(3)(4)^inf\n"
    assert run(capsys, "decompose", "--system", "F", "--code", "4251")[1] == "(425)(1)(4)^inf\n"
    assert run(capsys, "point", "--system", "E", "--code", "134")[1] == "1/3 1/18\n"
    assert run(capsys, "decompose", "--code", "35@5")[0] == 1


def test_cli_exports(capsys):
    _, out, _ = run(capsys, "automaton", "--system", "F")
    assert out == (GOLDEN / "F_automaton.dot").read_text()
    _, out, _ = run(capsys, "automaton", "--system", "E", "--format", "json")
    assert len(json.loads(out)["neighbors"]) == 4
    _, out, _ = run(capsys, "transducer", "--format", "dot")
    assert out.startswith("digraph transducer")


def test_cli_render(capsys, tmp_path):
    target = tmp_path / "f.svg"
    assert run(capsys, "render", "--system", "F", "--level", "3", "--out", str(target))[0] == 0
    assert len(_cells(target.read_text())) == 125
    assert run(capsys, "render", "--system", "F", "--level", "12", "--out", str(target))[0] == 1


def test_cli_verify(capsys, tmp_path):
    report = tmp_path / "r.json"
    argv = ["verify", "--suite", "theorem41", "--samples", "300", "--max-prefix", "12",
            "--exhaustive-len", "2", "--seed", "4", "--report", str(report), "--no-timing"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.startswith("PASS theorem41")
    first = report.read_text()
    run(capsys, *argv)
    assert report.read_text() == first
    doc = json.loads(first)[0]
    assert doc["seed"] == 4 and doc["violations"] == 0 and doc["max_lambda_gap"] <= 3


def test_cli_verify_failure_exit_code(capsys, monkeypatch):
    from lipfractal import harness

    def broken(cfg):
        return [harness.VerificationReport("theorem41", cfg.seed, samples=1, violations=1)]

    monkeypatch.setattr(harness, "run_suite", broken)
    assert run(capsys, "verify", "--suite", "theorem41")[0] == 2


@pytest.mark.parametrize("argv", [["bogus"], ["map"], ["map", "--code", "1", "--nope"], []])
def test_cli_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_cli_help_lists_commands(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for cmd in ("decompose", "map", "point", "separation", "automaton", "transducer", "verify", "render"):
        assert re.search(rf"\b{cmd}\b", out)
