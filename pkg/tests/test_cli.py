import json
from pathlib import Path

import pytest

from wreathrep.cli import build_parser, parse_label, parse_range, run

GOLDEN = Path(__file__).parent / "golden"
SUBCOMMANDS = ["classes", "irrchar", "indchar", "charpoly", "os", "decompose", "coinv", "gauss", "fr", "stability", "verify"]


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classes_json(capsys):
    code, out, _ = call(capsys, "classes", "--d", "2", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == 5
    assert sum(c["size"] for c in data["classes"]) == 8


def test_golden_files(capsys):
    _, out, _ = call(capsys, "classes", "--d", "2", "--n", "2")
    assert out == (GOLDEN / "classes_d2_n2.json").read_text()
    _, out, _ = call(capsys, "classes", "--d", "2", "--n", "2", "--format", "table")
    assert out == (GOLDEN / "classes_d2_n2.txt").read_text()


def test_deterministic_bytes(capsys):
    argv = ("coinv", "--d", "2", "--n", "2", "--r", "2", "--max-degree", "2")
    first = call(capsys, *argv)[1]
    assert first == call(capsys, *argv)[1]


def test_usage_errors(capsys):
    code, _, err = call(capsys, "classes", "--d", "0", "--n", "2")
    assert code == 2 and "usage" in err
    assert call(capsys, "classes", "--d", "2", "--n", "4..2")[0] == 2
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "irrchar", "--d", "2", "--n", "2", "--label", "1|1|1")[0] == 2
    assert call(capsys, "fr", "--n", "3", "--degree", "3")[0] == 2
    assert call(capsys, "coinv", "--d", "2", "--n", "3", "--J", "1", "--cap", "5")[0] == 2


@pytest.mark.parametrize("sub", SUBCOMMANDS)
def test_help(sub, capsys):
    code, out, _ = call(capsys, sub, "--help")
    assert code == 0 and "usage" in out


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "--d", "2", "--n", "2..4", "--degree", "1")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = call(capsys, "verify", "--d", "3", "--n", "2", "--degree", "1")
    assert code == 1 and json.loads(out)["checks"][0]["mismatches"]


def test_stability_and_gauss(capsys):
    code, out, _ = call(capsys, "stability", "--family", "os", "--d", "2", "--i", "1", "--n", "2..6")
    assert code == 0 and json.loads(out)["stabilized_at"] == 4
    code, out, _ = call(capsys, "stability", "--family", "os", "--d", "2", "--i", "1", "--n", "2..6", "--bound", "3")
    assert code == 1
    code, out, _ = call(capsys, "gauss", "--q", "3", "--i-max", "1")
    data = json.loads(out)
    assert code == 0 and data["series"][0]["coeff_str"] == "-1/2" and data["displayed_agreement"] is False


def test_other_subcommands(capsys, tmp_path):
    code, out, _ = call(capsys, "irrchar", "--d", "3", "--n", "1", "--format", "table")
    assert code == 0 and "z" in out
    code, out, _ = call(capsys, "indchar", "--d", "2", "--label", "|1", "--n", "2..3")
    assert code == 0 and [t["dimension"] for t in json.loads(out)["terms"]] == [2, 3]
    code, out, _ = call(capsys, "charpoly", "--d", "2", "--label", "1|")
    assert json.loads(out)["rendered"] == "X1^0 + X1^1"
    code, out, _ = call(capsys, "charpoly", "--d", "2", "--family", "coinv", "--degree", "1", "--n", "2..4",
                        "--max-degree", "1")
    assert json.loads(out)["rendered"] == "X1^0 - X1^1"
    code, out, _ = call(capsys, "os", "--d", "2", "--n", "3")
    assert json.loads(out)["arrangements"][0]["poincare"] == [1, 9, 23, 15]
    code, out, _ = call(capsys, "os", "--braid", "--n", "3", "--degree", "2", "--show-basis")
    assert json.loads(out)["arrangements"][0]["nbc_basis"] == [["e_{1,0,2}", "e_{1,0,3}"], ["e_{1,0,2}", "e_{2,0,3}"]]
    code, out, _ = call(capsys, "decompose", "--family", "kg", "--d", "3")
    assert code == 0 and len(json.loads(out)["table"][0]["decomposition"]) == 2
    code, out, _ = call(capsys, "fr", "--n", "3", "--degree", "2")
    assert json.loads(out)["model_dependent"] is True
    target = tmp_path / "out.json"
    code, out, _ = call(capsys, "fr", "--n", "2..3", "--output", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text())["model_dependent"] is False


def test_parsers():
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("3") == [3]
    lam = parse_label("2,1|-", 3)
    assert lam.parts == ((2, 1), (), ())
    assert build_parser().prog == "wreathrep"
