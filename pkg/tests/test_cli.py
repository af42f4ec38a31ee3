import json

import pytest

from triplyeven.cli import EXIT_INPUT, EXIT_OK, construct, main


def test_construct_names():
    assert construct("e8").dim == 4
    assert construct("desd24:1").dim == 12
    assert construct("tildeD:e8").length == 16
    assert construct("ttgc:10").length == 48
    with pytest.raises(ValueError):
        construct("desd24:10")


def test_construct_and_invariants(tmp_path, capsys):
    assert main(["construct", "ttgc:10", "--out", str(tmp_path), "-q"]) == EXIT_OK
    hexfile = tmp_path / "ttgc_10.hex"
    assert hexfile.exists()
    capsys.readouterr()
    assert main(["invariants", str(hexfile), "-q"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["length"] == 48 and rep["dim"] == 9
    assert rep["triply_even"] and rep["maximal"]
    assert rep["aut_order"] == 21772800


def test_parse_and_emit(tmp_path, capsys):
    src = tmp_path / "c.hex"
    src.write_text("# length 16\n0xff, 0xff00\n")
    assert main(["parse", str(src)]) == EXIT_OK
    rec = json.loads(capsys.readouterr().out)
    assert rec["length"] == 16
    js = tmp_path / "c.json"
    js.write_text(json.dumps(rec))
    assert main(["emit", str(js)]) == EXIT_OK
    assert "0xff" in capsys.readouterr().out.lower()


def test_not_maximal(tmp_path, capsys):
    src = tmp_path / "c.hex"
    src.write_text("# length 16\n0xff, 0xff00\n")
    assert main(["invariants", str(src)]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["triply_even"] and not rep["maximal"]


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "nonsense"],
        ["invariants", "/nonexistent/file"],
        ["frobnicate"],
    ],
)
def test_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT


def test_bad_hex(tmp_path):
    src = tmp_path / "c.hex"
    src.write_text("# length 4\n0x1ff\n")
    assert main(["invariants", str(src)]) == EXIT_INPUT


def test_verify_small_suite(capsys):
    assert main(["verify", "proof-devices", "-q"]) == EXIT_OK
    assert "PASS" in capsys.readouterr().out
