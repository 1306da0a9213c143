import json
from pathlib import Path

import pytest
from hydra import compose, initialize_config_dir

from corrkit.commands import Command, register_command
from corrkit.io.serialize import dumps, to_json
from corrkit.pipeline import run
from corrkit.simplicial.standard import simplex

CONFIGS = Path(__file__).resolve().parents[1] / "configs"

# the triangle with its d1 and d2 swapped
SWAPPED_TRIANGLE = {
    "type": "sset",
    "cells": [
        {"id": "0", "dim": 0},
        {"id": "1", "dim": 0},
        {"id": "2", "dim": 0},
        {"id": "01", "dim": 1, "faces": ["1", "0"]},
        {"id": "02", "dim": 1, "faces": ["2", "0"]},
        {"id": "12", "dim": 1, "faces": ["2", "1"]},
        {"id": "012", "dim": 2, "faces": ["12", "01", "02"]},
    ],
}


def compose_config(*overrides):
    with initialize_config_dir(version_base="1.1", config_dir=str(CONFIGS)):
        return compose(config_name="config", overrides=list(overrides))


def stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


def stderr_json(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def test_validate_accepts_the_example(fixtures_dir, capsys):
    config = compose_config("command=validate", f"command.input='{fixtures_dir / 'triangle_over_edge.json'}'")
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["ok"] is True
    assert out["kind"] == "SimplicialMap"


def test_validate_reports_violations(tmp_path, capsys):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(SWAPPED_TRIANGLE))
    assert run(compose_config("command=validate", f"command.input='{path}'")) == 1
    out = stdout_json(capsys)
    assert out["ok"] is False
    assert {issue["kind"] for issue in out["issues"]} == {"simplicial-identity"}


def test_schema_errors_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"type": "sset", "cells": [{"id": "a"}]}')
    assert run(compose_config("command=validate", f"command.input='{path}'")) == 2
    err = stderr_json(capsys)
    assert err["error"] == "SchemaError"
    assert err["path"] == "$.cells[0].dim"


def test_fiber(fixtures_dir, capsys):
    config = compose_config(
        "command=fiber", f"command.input='{fixtures_dir / 'triangle_over_edge.json'}'", "command.simplex='01'"
    )
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["counts"] == [3, 3, 1]
    assert out["value"]["type"] == "correspondence"


def test_missing_input(capsys):
    assert run(compose_config("command=fiber", "command.simplex='01'")) == 2
    assert stderr_json(capsys)["path"] == "command.input"


def test_unknown_command_and_format(fixtures_dir):
    horn = f"command.input='{fixtures_dir / 'horn_2_1.json'}'"
    assert run(compose_config("command=validate", horn, "command._target_=nope")) == 2
    assert run(compose_config("command=validate", horn, "format=xml")) == 2


def test_quasi_category_check_fails_on_the_inner_horn(fixtures_dir, capsys):
    config = compose_config("command=is_quasicat", f"command.input='{fixtures_dir / 'horn_2_1.json'}'")
    assert run(config) == 1
    assert stdout_json(capsys)["verdict"] is False


def test_output_file(fixtures_dir, tmp_path, capsys):
    target = tmp_path / "nerve.json"
    config = compose_config(
        "command=nerve", f"command.input='{fixtures_dir / 'poset_2.json'}'", f"output='{target}'"
    )
    assert run(config) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["value"]["type"] == "sset"


def test_gen_is_deterministic(capsys):
    config = compose_config("command=gen", "command.kind=category", "seed=3")
    assert run(config) == 0
    first = capsys.readouterr().out
    assert run(config) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)["value"]["type"] == "category"


def test_proptest(capsys):
    config = compose_config("command=proptest", "command.suite=roundtrip-cat", "command.cases=2", "command.progress=false")
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["verdict"] is True
    assert out["cases"] == 2


@pytest.mark.parametrize("value, expected", [(None, 1000000), ("7", 7)])
def test_budget_from_environment(monkeypatch, value, expected):
    if value is None:
        monkeypatch.delenv("CORRKIT_BUDGET", raising=False)
    else:
        monkeypatch.setenv("CORRKIT_BUDGET", value)
    assert compose_config().budget == expected


@register_command("explode")
class Explode(Command):
    def __call__(self, config):
        raise RuntimeError("boom")


def write_value(tmp_path, name, value):
    path = tmp_path / name
    path.write_text(dumps(to_json(value)))
    return f"command.input='{path}'"


def test_validate_accepts_an_edge(tmp_path, capsys):
    assert run(compose_config("command=validate", write_value(tmp_path, "edge.json", simplex(1)))) == 0
    out = stdout_json(capsys)
    assert out["ok"] is True
    assert out["kind"] == "FiniteSimplicialSet"


def test_validate_accepts_the_poset(fixtures_dir, capsys):
    assert run(compose_config("command=validate", f"command.input='{fixtures_dir / 'poset_2.json'}'")) == 0
    assert stdout_json(capsys)["ok"] is True


def test_internal_errors_exit_2(fixtures_dir, capsys):
    horn = f"command.input='{fixtures_dir / 'horn_2_1.json'}'"
    assert run(compose_config("command=validate", horn, "command._target_=explode")) == 2
    err = stderr_json(capsys)
    assert err["error"] == "RuntimeError"
    assert err["message"] == "boom"
    assert err["internal"] is True


@pytest.mark.parametrize(
    "verb, i, counts, vertex_fibers",
    [
        ("face", 0, [2, 1], [2]),
        ("face", 1, [1], [1]),
        ("degeneracy", 0, [4, 6, 4, 1], [1, 1, 2]),
    ],
)
def test_faces_and_degeneracies_of_the_fiber(fixtures_dir, capsys, verb, i, counts, vertex_fibers):
    config = compose_config(
        f"command={verb}",
        f"command.input='{fixtures_dir / 'triangle_over_edge.json'}'",
        "command.simplex='01'",
        f"command.i={i}",
    )
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["i"] == i
    assert out["counts"] == counts
    assert out["vertex_fibers"] == vertex_fibers


def test_fiber_vertex_fibers(fixtures_dir, capsys):
    config = compose_config(
        "command=fiber", f"command.input='{fixtures_dir / 'triangle_over_edge.json'}'", "command.simplex='01'"
    )
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["n"] == 1
    assert out["vertex_fibers"] == [1, 2]


def test_roundtrip_of_the_example(fixtures_dir, capsys):
    config = compose_config("command=roundtrip", f"command.input='{fixtures_dir / 'triangle_over_edge.json'}'")
    assert run(config) == 0
    out = stdout_json(capsys)
    assert out["verdict"] is True
    assert out["over_base"] is True
    assert out["counts"] == [3, 3, 1]


def test_quasi_category_check_reports_the_open_horn(fixtures_dir, capsys):
    config = compose_config("command=is_quasicat", f"command.input='{fixtures_dir / 'horn_2_1.json'}'")
    assert run(config) == 1
    out = stdout_json(capsys)
    assert out["checked_dims"] == [2, 3]
    assert out["failure_count"] >= 1
    first = out["failures"][0]
    assert (first["n"], first["k"]) == (2, 1)
    assert first["horn"] == {"0": "0", "1": "1", "2": "2", "01": "01", "12": "12"}


def test_quasi_category_check_passes_on_a_simplex(tmp_path, capsys):
    assert run(compose_config("command=is_quasicat", write_value(tmp_path, "triangle.json", simplex(2)))) == 0
    out = stdout_json(capsys)
    assert out["verdict"] is True
    assert out["checked_dims"] == [2, 4]
