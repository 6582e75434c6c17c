import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistforge.cli import RunConfig, UsageError, main, parse_algebra, render_report


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_jordanian_a2(capsys):
    code, out = run(["verify", "twist", "--algebra", "A2", "--twist", "jordanian", "--t-order", "3"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True


def test_heine_identity(capsys):
    code, out = run(["verify", "identity", "--name", "heine", "--t-order", "6"], capsys)
    assert code == 0 and json.loads(out)["pass"] is True


def test_unknown_twist_is_usage_error(capsys):
    code, _ = run(["verify", "twist", "--algebra", "A1", "--twist", "bad-example"], capsys)
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "twist", "--algebra", "E8", "--twist", "jordanian"],
        ["verify", "twist", "--algebra", "A2", "--twist", "jordanian", "--t-order", "9"],
        ["verify", "twist", "--algebra", "A2", "--twist", "jordanian", "--t-order", "0"],
        ["expand", "--algebra", "A1", "e1 ox"],
        ["expand", "--algebra", "A1", "e7"],
        ["verify", "suite", "--criteria", "13"],
        ["frobnicate"],
        [],
    ],
)
def test_malformed_invocations_exit_2(argv, capsys):
    assert main(argv) == 2


def test_failing_report_has_residuals(capsys):
    code, out = run(["verify", "suite", "--criteria", "6"], capsys)
    assert code == 1
    rep = json.loads(out)
    assert rep["pass"] is False
    det = rep["results"][0]["details"]
    assert any(v["residual_terms"][-1] > 0 for v in det.values() if not v["pass"])


def test_empty_suite_is_valid_json(capsys):
    code, out = run(["verify", "suite", "--criteria"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["results"] == []


def test_same_run_twice_is_byte_identical(tmp_path):
    # the output path is part of the recorded config, so reuse it
    path = tmp_path / "report.json"
    runs = []
    for _ in range(2):
        assert main(["verify", "twist", "--algebra", "A1", "--twist", "jordanian", "--t-order", "3", "--out", str(path)]) == 0
        runs.append(path.read_bytes())
    assert runs[0] == runs[1]
    assert runs[0].endswith(b"\n")


def test_config_file_mirrors_flags(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"algebra": "A1", "twist": "jordanian", "t_order": 2}))
    code, out = run(["verify", "twist", "--config", str(cfg)], capsys)
    assert code == 0
    flags_code, flags_out = run(["verify", "twist", "--algebra", "A1", "--twist", "jordanian", "--t-order", "2"], capsys)
    assert flags_code == 0
    assert json.loads(out) == json.loads(flags_out)


def test_expand_and_specialize(capsys):
    code, out = run(["expand", "--algebra", "A2", "--t-order", "2", "e1*e2 - q*e2*e1"], capsys)
    assert code == 0 and "e_11" in out
    code, out = run(["specialize", "--algebra", "sl3'", "(L1-1)/(q-1)"], capsys)
    assert code == 0 and "hw1" in out


def test_specialize_of_singular_element_fails(capsys):
    code, _ = run(["specialize", "--algebra", "A1", "e1/(q-1)"], capsys)
    assert code == 1


def test_zeta_option(capsys):
    code, _ = run(["verify", "twist", "--algebra", "sl3'", "--twist", "cg-hat", "--zeta", "2", "--t-order", "2"], capsys)
    assert code == 0


def test_parse_algebra_labels():
    assert parse_algebra("A3") is not None
    with pytest.raises(UsageError):
        parse_algebra("G2")


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(command="verify twist", algebra="A1", twist="jordanian", t_order=7).validate()


def test_render_report_is_canonical():
    a = render_report({"b": 1, "a": [1, 2]})
    assert a == render_report({"a": [1, 2], "b": 1})
    assert a.endswith("\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twistforge", "verify", "identity", "--name", "dilog", "--t-order", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True


TOKENS = [
    "verify", "twist", "identity", "expand", "specialize",
    "--algebra", "A1", "A2", "Z9", "sl3'", "--twist", "jordanian", "nope", "fq",
    "--t-order", "0", "2", "7", "x", "--zeta", "q^", "1/(q-1)", "--name", "heine",
    "e1 ox", "(", "e1*f1", "--config", "/nonexistent.json", "--criteria",
]


@settings(max_examples=40)
@given(st.lists(st.sampled_from(TOKENS), max_size=7))
def test_exit_codes_on_arbitrary_argv(argv):
    import contextlib
    import io

    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    assert code in (0, 1, 2)
