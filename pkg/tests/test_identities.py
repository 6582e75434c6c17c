import pytest

from twistforge.twists.identities import (
    IDENTITY_NAMES,
    dilog_check,
    heine2_check,
    heine_check,
    identity_suite,
    run_identity,
)


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_heine_order6(alpha):
    assert heine_check(alpha, 6).passed


def test_heine_alpha1_first_order_is_x():
    rep = heine_check(1, 1)
    assert rep.passed and rep.to_json()["details"]["order1_is_x_ok"]


@pytest.mark.parametrize("base", [1, 2, -1])
def test_heine_other_bases(base):
    assert heine_check(2, 4, base).passed


def test_heine2_lattice_form():
    assert heine2_check(4).passed


@pytest.mark.parametrize("base", [1, 2])
def test_dilog_order6(base):
    rep = dilog_check(6, base)
    assert rep.passed and rep.to_json()["details"]["order2_split_ok"]


def test_five_term_entries():
    assert all(r.passed for r in run_identity("five_term", 3))


def test_unknown_identity():
    with pytest.raises(KeyError):
        run_identity("jacobi")


def test_suite_runs_everything():
    rep = identity_suite(3)
    assert rep.passed
    names = {r.to_json()["identity"].split("[")[0] for r in rep.results}
    assert {"heine", "heine2", "dilog"} <= names
    assert len(IDENTITY_NAMES) == 4
