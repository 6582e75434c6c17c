"""The twelve acceptance criteria, run exactly as stated.

Each test prints one ``criterion NN [PASS|FAIL] title`` line (shown even under
output capture) and asserts the criterion; the JSON details go into the
assertion message when it fails.
"""

import json

import pytest

from twistforge import suite


def _check(number, capsys):
    result = suite.CRITERIA[number]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, json.dumps(suite._jsonable(result.details), indent=1, sort_keys=True)


def test_criterion_01_hopf_axioms(capsys):
    _check(1, capsys)


def test_criterion_02_highest_root_q_commutation(capsys):
    _check(2, capsys)


def test_criterion_03_tensor_q_commutation(capsys):
    _check(3, capsys)


def test_criterion_04_cocycle_and_counit(capsys):
    _check(4, capsys)


def test_criterion_05_regularity(capsys):
    _check(5, capsys)


def test_criterion_06_classical_closed_formula(capsys):
    _check(6, capsys)


def test_criterion_07_classical_recheck(capsys):
    _check(7, capsys)


def test_criterion_08_identity_suite(capsys):
    _check(8, capsys)


def test_criterion_09_basis_conjugation_chain(capsys):
    _check(9, capsys)


def test_criterion_10_connes_moscovici_chain(capsys):
    _check(10, capsys)


def test_criterion_11_semiclassical_r(capsys):
    _check(11, capsys)


def test_criterion_12_engine_hygiene(capsys):
    _check(12, capsys)


@pytest.mark.parametrize("number", sorted(suite.CRITERIA))
def test_criterion_report_is_json(number):
    # every criterion, passing or not, must serialize
    rep = suite.suite_report([suite.CRITERIA[number]()])
    assert json.loads(json.dumps(rep))["results"][0]["criterion"] == number
