import json
import os

import pytest
from click.testing import CliRunner

from arquiver.cli import cli

from conftest import DATA


def run(*args):
    runner = CliRunner()
    return runner.invoke(cli, [str(a) for a in args], catch_exceptions=False)


def path(name):
    return os.path.join(DATA, name + ".json")


def test_sigma_text_golden():
    r = run("sigma", path("qc"), "--side", "L", "--format", "text")
    assert r.output.strip() == "ε_5 ⇢ p_{4,3} ⇢ p_∞"


def test_translate_names_result():
    r = run("translate", path("qc"), "--rep", "M(p_inf)")
    body = json.loads(r.output)
    assert body["value"]["name"] == "M(p_{4,3})"
    assert body["finite_dimensional"]


def test_census_golden():
    r = run("census", path("dinf_noinf"))
    body = json.loads(r.output)
    assert body["regular"] == 1 and body["shape"] == "ZAinf"


def test_component_dot_qf_wing():
    r = run(
        "component", path("qf"), "--seed", "preinjective:3", "--format", "dot"
    )
    dot = r.output
    assert dot.count("->") == 4 + 1  # 4 solid + 1 dashed
    assert dot.count("style=dashed") == 1
    assert 'label="I(3)' in dot


def test_component_single_node():
    r = run("component", path("qf"), "--seed", "preinjective:0", "--format", "dot")
    assert r.output.count("label=") == 1
    assert "->" not in r.output


def test_export_roundtrip(tmp_path):
    r = run("component", path("qf"), "--seed", "preinjective:3")
    data = json.loads(r.output)
    f = tmp_path / "window.json"
    f.write_text(json.dumps(data))
    r2 = run("export", str(f))
    assert r2.output.count("->") == 5


def test_exit_codes(tmp_path):
    import subprocess
    import sys

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "core": {
                    "vertices": ["a", "b"],
                    "arrows": [
                        {"from": "a", "to": "b", "label": "x"},
                        {"from": "b", "to": "a", "label": "y"},
                    ],
                }
            }
        )
    )
    env = dict(os.environ, PYTHONPATH=os.pathsep.join(__import__("sys").path))
    out = subprocess.run(
        [sys.executable, "-m", "arquiver.cli", "validate", str(bad)],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 2
    assert "CoreCycle" in out.stderr
    out = subprocess.run(
        [sys.executable, "-m", "arquiver.cli", "nosuchcommand"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 1
    out = subprocess.run(
        [sys.executable, "-m", "arquiver.cli", "census", path("qc")],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0


def test_deterministic_output():
    a = run("census", path("qc")).output
    b = run("census", path("qc")).output
    assert a == b
    a = run("component", path("qc"), "--seed", "regular:M(p_inf)", "--format", "dot").output
    b = run("component", path("qc"), "--seed", "regular:M(p_inf)", "--format", "dot").output
    assert a == b


def test_caps_and_derived_cli():
    r = run("caps", path("qc"))
    body = json.loads(r.output)
    assert body["rep_plus"]["rep_plus_AR"] is False
    assert body["derived"]["AST"] is False
    r = run("derived", path("qc"), "--rep", "M(p_{4,3})", "--side", "ending_at")
    body = json.loads(r.output)
    assert body["family"] == "FromASS"
    assert body["start"]["name"] == "S(5)"
