import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from weylkit.cli import main
from weylkit.schemas import validate_document

from cli_cases import ALL_CASES, SUBCOMMAND_CASES

GOLDEN = Path(__file__).parent / "golden"


def run_cli(argv, stdin_payload=None):
    buf = io.StringIO()
    old_stdin = sys.stdin
    try:
        if stdin_payload is not None:
            sys.stdin = io.StringIO(stdin_payload)
        with redirect_stdout(buf):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, buf.getvalue()


@pytest.mark.parametrize("name,argv,payload,expected_code", ALL_CASES,
                         ids=[c[0] for c in ALL_CASES])
def test_golden_byte_equality(name, argv, payload, expected_code):
    code, out = run_cli(argv, payload)
    assert code == expected_code
    assert out == (GOLDEN / f"{name}.golden").read_text(encoding="utf-8")


@pytest.mark.parametrize("name,argv,payload,expected_code", ALL_CASES,
                         ids=[c[0] for c in ALL_CASES])
def test_outputs_validate_against_schemas(name, argv, payload, expected_code):
    _, out = run_cli(argv, payload)
    validate_document(json.loads(out))


def test_runs_are_byte_stable():
    for name, argv, payload, _ in SUBCOMMAND_CASES:
        _, first = run_cli(argv, payload)
        _, second = run_cli(argv, payload)
        assert first == second, name


def test_parse_error_exit_code():
    code, out = run_cli(["classify"], "this is not json")
    assert code == 4
    doc = json.loads(out)
    assert doc["error"]["code"] == "ParseError"
    validate_document(doc)


def test_classify_transpose_adapter():
    # the transposed G2 matrix classifies identically through the adapter
    code, out = run_cli(["classify", "--transpose"], '{"matrix": [[2,-3],[-1,2]]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == [["G", 2]]
    assert doc["matrix"] == [[2, -1], [-3, 2]]


def test_classify_exit_zero_report_fields():
    code, out = run_cli(["classify"], '{"matrix": [[2,-1],[-3,2]]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["positive_roots"] == 6
    assert doc["weyl_order"] == 12
    assert doc["weyl_order_enumerated"] == 12
    assert doc["fundamental_group"] == []
    assert doc["poincare"] == [1, 2, 2, 2, 2, 2, 1]
    assert doc["dimension"] == 6


def test_classify_cap_skips_enumeration():
    code, out = run_cli(["classify", "--cap", "5"], '{"matrix": [[2,-1],[-3,2]]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["weyl_order"] == 12
    assert doc["weyl_order_enumerated"] == "skipped"
    assert doc["poincare"] == "skipped"
    validate_document(doc)


def test_weight_in_root_basis():
    # -alpha1 in root coordinates is (-1, 0); through C it is (-2, 1)
    code, out = run_cli(["bs-weights", "--type", "A2", "--word", "1,2",
                         "--weight", "-1,0", "--basis", "root"])
    assert code == 0
    doc = json.loads(out)
    assert doc["weight"] == [-2, 1]
    assert doc["entries"] == [{"degree": 1, "mult": 1, "weight": [0, 0]}]


def test_word_letters_are_one_based():
    code, out = run_cli(["bs-weights", "--type", "A2", "--word", "3",
                         "--weight", "0,0"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["code"] == "IndexOutOfRange"
    validate_document(doc)


def test_dim_rejects_negative_weight_with_error_doc():
    code, out = run_cli(["dim", "--type", "A2", "--weight", "-1,0"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["code"] == "NotDominant"


def test_invalid_type_label():
    code, out = run_cli(["roots", "--type", "Q7"])
    assert code == 1
    assert json.loads(out)["error"]["code"] == "InvalidType"


def test_isogeny_validate_round_trip(tmp_path):
    _, out = run_cli(["isogeny", "enumerate", "--type", "G2", "--p", "3"])
    phi_doc = json.loads(out)["isogenies"][0]
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(phi_doc), encoding="utf-8")
    code, out = run_cli(["isogeny", "validate", "--file", str(path)])
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] is True
    assert doc["primitive"] is True
    assert doc["constant"] is False
    assert doc["frobenius_exponent"] == 0
    validate_document(doc)


def test_isogeny_validate_rejects_broken_morphism(tmp_path):
    _, out = run_cli(["isogeny", "enumerate", "--type", "G2", "--p", "3"])
    phi_doc = json.loads(out)["isogenies"][0]
    phi_doc["q"] = [1, 1]
    path = tmp_path / "phi.json"
    path.write_text(json.dumps(phi_doc), encoding="utf-8")
    code, out = run_cli(["isogeny", "validate", "--file", str(path)])
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False
    assert doc["error"]["code"] == "RootEquationFails"
    validate_document(doc)


def test_selfcheck_deterministic_under_seed():
    _, first = run_cli(["selfcheck", "--type", "B2", "--seed", "11",
                        "--samples", "25"])
    _, second = run_cli(["selfcheck", "--type", "B2", "--seed", "11",
                         "--samples", "25"])
    assert first == second
    doc = json.loads(first)
    assert doc["antisymmetry"] and doc["equivariance"]
    validate_document(doc)


def test_text_format_renders_tables():
    code, out = run_cli(["roots", "--type", "A1", "--format", "text"])
    assert code == 0
    assert "length" in out and "short" in out
    code, out = run_cli(["weyl", "--type", "A2", "--format", "text"])
    assert code == 0
    assert "order: 6" in out


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "weylkit.cli", "dim", "--type", "G2",
         "--weight", "1,0"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["value"] == 7


def test_e8_weyl_enumeration_refused_by_default():
    code, out = run_cli(["weyl", "--type", "E8"])
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 696_729_600
    assert doc["enumerated"] == "skipped"
    validate_document(doc)
