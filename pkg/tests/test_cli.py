import json
from pathlib import Path

import jsonschema
import pytest

from permrep.cli import SCHEMA_DIR, main

TABLE_SCHEMA = json.loads((SCHEMA_DIR / "table.json").read_text())
RESULT_SCHEMA = json.loads((SCHEMA_DIR / "result.json").read_text())

COCYCLE = {"vars": 2, "acting": [1, 2], "dim": 1, "generators": [{"transposition": [1, 2], "matrix": [["x2/x1"]]}]}
BAD_COCYCLE = {"vars": 2, "acting": [1, 2], "dim": 1, "generators": [{"transposition": [1, 2], "matrix": [["x1"]]}]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_length_table_text(capsys):
    code, out, _ = run(capsys, "length-table", "--model", "set", "--n-max", "8")
    assert code == 0
    assert "every cell equals min(s, n-s)+1: true" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["length-table", "--model", "vec", "--n-max", "3"],
        ["boundary-rank", "--n-max", "6"],
        ["growth", "--n", "8", "--level", "2", "--sub", "kernel"],
    ],
)
def test_table_json_schema(capsys, argv):
    code, doc = run_json(capsys, *argv)
    assert code == 0
    jsonschema.validate(doc, TABLE_SCHEMA)


def test_plot_written(capsys, tmp_path):
    for cmd, extra in (("length-table", ["--n-max", "5"]), ("boundary-rank", ["--n-max", "5"]), ("growth", ["--n", "6"])):
        path = tmp_path / f"{cmd}.png"
        code, _, _ = run(capsys, cmd, *extra, "--plot", str(path))
        assert code == 0
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_q2_text(capsys):
    code, out, _ = run(capsys, "q2-test", "--q", "X-Y")
    assert code == 0
    assert out.splitlines()[0] == "NotSurjective, witness S=1"


def test_h90_cli(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps(COCYCLE))
    code, out, _ = run(capsys, "h90", "--cocycle", str(path), "--seed", "7")
    assert code == 0 and "verified: true" in out
    code, doc = run_json(capsys, "h90", "--cocycle", str(path), "--seed", "7")
    jsonschema.validate(doc, RESULT_SCHEMA)
    assert doc["result"]["verified"] is True


def test_cocycle_check_exit_codes(capsys):
    assert run(capsys, "cocycle-check", "--cocycle", json.dumps(COCYCLE))[0] == 0
    code, out, _ = run(capsys, "cocycle-check", "--cocycle", json.dumps(BAD_COCYCLE))
    assert code == 1 and "s12 s12" in out
    # not a cocycle: h90 refuses with a usage-style error
    assert run(capsys, "h90", "--cocycle", json.dumps(BAD_COCYCLE))[0] == 2


ALL_COMMANDS = [
    ["length-table", "--n-max", "4"],
    ["boundary-rank", "--n-max", "4"],
    ["growth", "--n", "6", "--level", "2"],
    ["socle", "--n", "6", "--s", "3"],
    ["isotypic", "--n", "4", "--s", "2"],
    ["double-cosets", "--n", "6", "--U", "setwise:1,2", "--V", "setwise:1,2", "--check"],
    ["fixed-cosets", "--n", "5", "--U", "pointwise:1,2", "--V", "pointwise:1,2"],
    ["coinduction-check", "--n", "5", "--J", "1,2", "--T", "3"],
    ["restrict", "--model", "vec", "--n", "3", "--s", "1", "--J", "100"],
    ["cocycle-check", "--cocycle", json.dumps(COCYCLE)],
    ["h90", "--cocycle", json.dumps(COCYCLE)],
    ["cyclic", "--trivial", "3", "--vars", "3"],
    ["trivialize-findim", "--example", "unipotent", "--r", "2"],
    ["hom-apply", "--Q", '{"M":1,"N":2,"expr":"x1"}', "--element", '{"level":2,"terms":[{"coef":"1","subobject":[2,4]}]}'],
    ["hom-compose", "--Q", '{"M":0,"N":1,"expr":"x1"}', "--R", '{"M":1,"N":2,"expr":"x1"}', "--n", "4"],
    ["gen-test", "--element", '{"level":1,"terms":[{"coef":"x1","subobject":[1]},{"coef":"-x2","subobject":[2]}]}'],
    ["q2-test", "--q", "(X-Y)*Y"],
    ["selftest", "--only", "10"],
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: a[0])
def test_every_command_json_and_reruns(capsys, argv):
    code1, out1, _ = run(capsys, *argv, "--json")
    code2, out2, _ = run(capsys, *argv, "--json")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical reruns
    doc = json.loads(out1)
    schema = TABLE_SCHEMA if "rows" in doc else RESULT_SCHEMA
    jsonschema.validate(doc, schema)
    assert doc["command"] == argv[0] and doc["seed"] == 0


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("PERMREP_FORMAT", "json")
    code, out, _ = run(capsys, "q2-test", "--q", "1")
    assert code == 0 and json.loads(out)["result"]["surjective"] is True


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "q2-test", "--q", "X-Z")[0] == 2
    assert run(capsys, "q2-test", "--q", "X+")[0] == 2
    assert run(capsys, "double-cosets", "--n", "5", "--U", "bogus:1", "--V", "full")[0] == 2
    assert run(capsys, "hom-apply", "--Q", '{"M":1,"N":3,"expr":"x2"}', "--element", '{"level":3,"terms":[]}')[0] == 2
    assert run(capsys, "cyclic", "--cocycle", "{not json")[0] == 2


def test_stable_strict(capsys):
    code, _, err = run(capsys, "socle", "--n", "5", "--s", "3")
    assert code == 0 and "warning" in err
    code, _, err = run(capsys, "socle", "--n", "5", "--s", "3", "--stable-strict")
    assert code == 2 and "stable range" in err


def test_cyclic_failure_exit_code(capsys):
    code, out, _ = run(capsys, "cyclic", "--trivial", "3", "--vars", "2", "--budget", "5")
    assert code == 1 and out.startswith("Failure")
