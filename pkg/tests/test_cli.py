from __future__ import annotations

import io
import json

import pytest

from braidmon.braid import BraidWord
from braidmon.cli import EXIT_GENERICITY, EXIT_OK, EXIT_USAGE, run
from support import EXAMPLE_1, EXAMPLE_1_WORDS, EXAMPLE_2


def _run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_mode_both_on_example_1():
    code, text = _run("-i", EXAMPLE_1, "--mode", "both", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(text)
    assert report["comparison"] == {"per_entry": [True] * 4, "all_equal": True}
    assert len(report["entries"]) == len(report["oracle_entries"]) == 4


def test_squarefree_failure_exits_2(capsys):
    code, _ = _run("-i", "(y^2-x)*(y^2-x)")
    assert code == EXIT_GENERICITY
    assert "condition 1" in capsys.readouterr().err


def test_unbalanced_parenthesis_exits_1():
    code, _ = _run("-i", "x^2-(y+3/4)^2-1)*((x-1/2)^2-y^2-1)")
    assert code == EXIT_USAGE


def test_missing_input_and_bad_flag_exit_1():
    assert _run()[0] == EXIT_USAGE
    assert _run("-i", "y^2-x", "--mode", "sideways")[0] == EXIT_USAGE


def test_text_report(tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text(EXAMPLE_1 + "\n")
    code, text = _run("-i", str(path))
    assert code == EXIT_OK
    lines = [ln for ln in text.splitlines() if ln.startswith("phi(")]
    assert [ln.split(" = ")[1].split()[0] for ln in lines][:1] == ["s2"]
    assert len(lines) == 4


def test_json_round_trip_is_idempotent():
    code, text = _run("-i", EXAMPLE_1, "--format", "json", "--precision", "6")
    assert code == EXIT_OK
    report = json.loads(text)
    for e, expected in zip(report["entries"], EXAMPLE_1_WORDS, strict=True):
        word = BraidWord.from_json(3, e["word"])
        assert word.normal_form.to_text() == e["normal_form"]
        again = BraidWord.from_json(3, word.to_json())
        assert again.normal_form.to_text() == e["normal_form"]
        assert word.equals(BraidWord.parse(3, expected))
        assert len(e["x"].lstrip("-").replace(".", "")) <= 7


def test_exact_x_values_kept_as_rationals():
    _, text = _run("-i", EXAMPLE_2, "--format", "json")
    exact = [e["x_exact"] for e in json.loads(text)["entries"]]
    assert exact[1:5] == ["3/2", "1", "-1/2", "-1"]


def test_verify_section():
    code, text = _run("-i", EXAMPLE_2, "--mode", "both", "--verify", "--format", "json")
    assert code == EXIT_OK
    checks = json.loads(text)["checks"]
    assert checks["ok"] and checks["boundary_loop"] and checks["oracle_ok"]


def test_svg_dir(tmp_path):
    code, _ = _run("-i", EXAMPLE_1, "--svg-dir", str(tmp_path / "svg"))
    assert code == EXIT_OK
    names = sorted(p.name for p in (tmp_path / "svg").iterdir())
    assert names == [f"{kind}_{j}.svg" for kind in ("gamma", "skeleton") for j in range(1, 5)]
    assert (tmp_path / "svg" / "gamma_4.svg").read_text().startswith("<svg")


@pytest.mark.parametrize("mode", ["engine", "oracle"])
def test_smooth_curve(mode):
    code, text = _run("-i", "y-x^2", "--mode", mode, "--format", "json", "--verify")
    assert code == EXIT_OK
    assert json.loads(text)["entries"] == []
