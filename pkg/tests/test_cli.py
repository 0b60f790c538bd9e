import json
import pytest
from src.exporters.pair_exporter import PairExporter
from src.main import EXIT_FAIL, EXIT_MALFORMED, EXIT_OK, main
from src.utils.catalog import type_I


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_dims(capsys):
    code, doc = run(capsys, "dims", "--kind", "alt", "--d0", "2", "--d1", "1", "--n", "2")
    assert code == EXIT_OK
    assert doc == {"dim": 4}


def test_enum(capsys):
    code, doc = run(capsys, "enum", "--kind", "sym", "--d0", "1", "--d1", "2", "--n", "2")
    assert code == EXIT_OK
    assert doc["indices"] == ["(1,1)", "(1,2)", "(1,3)", "(2,3)"]
    assert doc["parities"] == [0, 1, 1, 0]


def test_minor(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"rows": [2, 0], "cols": [2, 0], "entries": [["1", "2"], ["3", "4"]]}))
    code, doc = run(capsys, "minor", "--kind", "alt", "--file", str(path), "--rows", "(1,2)", "--cols", "(1,2)")
    assert code == EXIT_OK
    assert doc == {"value": "-2"}


def test_matpow(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"rows": [2, 0], "cols": [2, 0], "entries": [["1", "2"], ["3", "4"]]}))
    code, doc = run(capsys, "matpow", "--kind", "alt", "--file", str(path), "--n", "2")
    assert code == EXIT_OK
    assert doc["entries"] == [["-2"]]
    assert doc["rows"] == ["(1,2)"]


def test_build_writes_csv(capsys, tmp_path):
    csv = tmp_path / "products.csv"
    code, doc = run(capsys, "build", "--pair", "typeI:1,2", "--csv", str(csv))
    assert code == EXIT_OK
    assert doc["dplus"] == [2, 0]
    assert csv.read_text().startswith("side,x,y,z,out,coefficient")


def test_power(capsys):
    code, doc = run(capsys, "power", "--kind", "alt", "--pair", "typeI:1,2", "--n", "2")
    assert code == EXIT_OK
    assert doc["prodMinus"] == [[[["6"]]]]
    code, oracle = run(capsys, "power", "--kind", "alt", "--pair", "typeI:1,2", "--n", "2", "--oracle")
    assert oracle["prodMinus"] == doc["prodMinus"]


def test_shift(capsys):
    code, doc = run(capsys, "shift", "--pair", "unit", "--lam", "-4")
    assert code == EXIT_OK
    assert doc["prodMinus"] == [[[["-4"]]]]
    assert doc["prodPlus"] == [[[["-4"]]]]


def test_verify_file(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PairExporter.pair_to_json(type_I(1, 2))))
    code, doc = run(capsys, "verify", "--file", str(path))
    assert code == EXIT_OK
    assert doc["result"] == "PASS"


def test_verify_reports_failures(capsys, tmp_path):
    pair = type_I(1, 2)
    pair.prod_minus[0, 0, 0, 0] = 5
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PairExporter.pair_to_json(pair)))
    code, doc = run(capsys, "verify", "--file", str(path))
    assert code == EXIT_FAIL
    assert doc["result"] == "FAIL"
    assert doc["violations"]


def test_oracle_diff(capsys):
    code, doc = run(capsys, "oracle-diff", "--kind", "alt", "--pair", "typeI:1,2", "--n", "2")
    assert code == EXIT_OK
    assert doc == {"equal": True}


def test_examples(capsys):
    code, doc = run(capsys, "examples", "--which", "II", "--n", "3")
    assert code == EXIT_OK
    assert doc["result"] == "PASS"
    assert doc["multiplier"] == "-1"
    code, doc = run(capsys, "examples", "--which", "III", "--n", "2")
    assert doc["multiplier"] == "1/2"


@pytest.mark.parametrize("argv", [
    ("verify", "--pair", "typeIV:2"),
    ("verify", "--pair", "typeI:1"),
    ("verify",),
    ("verify", "--file", "/nonexistent/pair.json"),
    ("shift", "--pair", "unit", "--lam", "0.5"),
    ("power", "--kind", "alt", "--pair", "typeI:1,2", "--n", "0"),
])
def test_malformed_inputs(capsys, argv):
    code, doc = run(capsys, *argv)
    assert code == EXIT_MALFORMED
    assert "error" in doc


def test_gaussian_input_needs_the_gaussian_field(capsys, tmp_path):
    doc = PairExporter.pair_to_json(type_I(1, 1))
    doc["gram"] = [[{"re": "0", "im": "1"}]]
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    code, _ = run(capsys, "verify", "--file", str(path))
    assert code == EXIT_MALFORMED
    code, out = run(capsys, "--field", "gaussian", "verify", "--file", str(path))
    assert code == EXIT_OK
    assert out["result"] == "PASS"


def test_gaussian_field_shift_gives_q_i_output(capsys):
    lam = json.dumps({"re": "0", "im": "1"})
    code, doc = run(capsys, "--field", "gaussian", "shift", "--pair", "unit", "--lam", lam)
    assert code == EXIT_OK
    assert doc["prodMinus"] == [[[[{"re": "0", "im": "1"}]]]]
    assert doc["prodPlus"] == [[[[{"re": "0", "im": "1"}]]]]
    assert doc["gram"] == [["1"]]


def test_gaussian_scalar_needs_the_gaussian_field_on_the_command_line(capsys):
    lam = json.dumps({"re": "0", "im": "1"})
    code, doc = run(capsys, "shift", "--pair", "unit", "--lam", lam)
    assert code == EXIT_MALFORMED
    assert "--field gaussian" in doc["error"]


def test_gaussian_field_promotes_rational_input(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PairExporter.pair_to_json(type_I(1, 2))))
    code, doc = run(capsys, "--field", "gaussian", "verify", "--file", str(path))
    assert code == EXIT_OK
    assert doc["result"] == "PASS"
    code, rational = run(capsys, "build", "--file", str(path))
    code, gaussian = run(capsys, "--field", "gaussian", "build", "--file", str(path))
    assert gaussian == rational
