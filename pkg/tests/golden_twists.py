"""Named twists frozen as golden expansions.

Run ``python tests/golden_twists.py`` to regenerate the files in tests/golden/
after an intentional change; the test suite compares against them bit-exactly.
"""

import json
from pathlib import Path

from twistforge.twists import cg, cm, jordanian_twist

GOLDEN_DIR = Path(__file__).parent / "golden"

NAMED = {
    "jordanian_A1_t3": lambda: jordanian_twist("A", 1, 3).series,
    "jordanian_A2_t2": lambda: jordanian_twist("A", 2, 2).series,
    "jordanian_B2_t2": lambda: jordanian_twist("B", 2, 2).series,
    "jordanian_C2_t2": lambda: jordanian_twist("C", 2, 2).series,
    "cg_hat_t2": lambda: cg.cg_hat_twist(1, 2).series,
    "cg_regular_t2": lambda: cg.cg_regular_twist(2).series,
    "jordanian_l1_t2": lambda: cg.jordanian_l1_twist(2).series,
    "fq_t2": lambda: cg.fq_twist(2).series,
    "cm_f1_t3": lambda: cm.f1_closed_form(3),
    "cm_twist_t3": lambda: cm.cm_twist(3),
}


def dump(name) -> str:
    doc = {"twist": name, "expansion": NAMED[name]().serialize()}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name in NAMED:
        (GOLDEN_DIR / f"{name}.json").write_text(dump(name))
        print("wrote", name)
