import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import hodgekit

SOURCE = pathlib.Path(os.environ.get("HODGEKIT_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))
SCHEMA = json.loads((SOURCE / "schemas" / "result.schema.json").read_text())
GOLDEN = json.loads((SOURCE / "tests" / "oracle" / "golden.json").read_text())


@pytest.mark.parametrize("name", hodgekit.catalog_names())
def test_tables_match_oracle(name):
    result = hodgekit.compute(name, flavors=["all"])
    assert result["exit_code"] == 0
    jsonschema.validate({k: v for k, v in result.items() if k != "exit_code"}, SCHEMA)
    for flavor, table in result["tables"].items():
        assert table == GOLDEN[name][flavor], flavor


def test_verify_defaults_pass():
    for name in hodgekit.catalog_names():
        result = hodgekit.verify(name)
        assert result["exit_code"] == 0
        assert all(c["verdict"] != "FAIL" for c in result["checks"])


def test_action_verdicts():
    checks = hodgekit.verify("iwasawa", checks=["action:central", "action:phi1-dual"])["checks"]
    assert [c["verdict"] for c in checks] == ["TRIVIAL", "NONTRIVIAL"]
    assert "[phi3] -> -[phi2]" in checks[1]["detail"]


def test_vaisman_qualifier():
    result = hodgekit.compute("hopf2", flavors=["bc", "dolbeault"])
    assert result["qualifiers"] == {"bott_chern": "invariant-model"}
    assert result["tables"]["dolbeault"]["2,1"] == 1


def test_errors_raise():
    with pytest.raises(hodgekit.HodgekitError):
        hodgekit.compute("no-such-model")
    with pytest.raises(hodgekit.HodgekitError):
        hodgekit.verify("torus1", checks=["cone-les"])


def test_model_text_round_trip():
    for name in hodgekit.catalog_names():
        canonical = hodgekit.normalize_model(hodgekit.catalog_text(name))
        assert hodgekit.normalize_model(canonical) == canonical


def test_homotopy_coefficients():
    assert hodgekit.homotopy_coefficients("1", "1") == ("1/2", "1/2", "rational")
    with pytest.raises(hodgekit.HodgekitError):
        hodgekit.homotopy_coefficients("i", "1")


def test_cli_binary_matches_module():
    cli = os.environ.get("HODGEKIT_CLI")
    if not cli:
        pytest.skip("command-line tool not built")
    args = ["verify", "hopf2", "--flavors", "all", "--output", "json"]
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    code, out, _ = hodgekit.run_cli(args)
    assert proc.returncode == code == 0
    assert proc.stdout == out
    jsonschema.validate(json.loads(out), SCHEMA)
