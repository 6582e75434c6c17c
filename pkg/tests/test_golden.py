import pytest

from golden_twists import GOLDEN_DIR, NAMED, dump


@pytest.mark.parametrize("name", sorted(NAMED))
def test_golden_expansion(name):
    path = GOLDEN_DIR / f"{name}.json"
    assert path.exists(), "run tests/golden_twists.py to create the golden file"
    assert dump(name) == path.read_text()
