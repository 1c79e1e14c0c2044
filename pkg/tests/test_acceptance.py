"""
Acceptance gate: every reproduction scenario must pass exactly (no
tolerances anywhere).  One line is printed per criterion.
"""

import os

import pytest

from geoq import lemmas
from geoq.reproduce import SCENARIOS

COUNT = int(os.environ.get("GEOQ_PROP_COUNT", "200"))

CRITERION_OF = {
    "hexagon": 1,
    "coseteg-z2": 2,
    "coseteg-z3": 2,
    "affine-3-2": 3,
    "notfirm-multipartite": 4,
    "grid-complement": 5,
    "eightcycle": 6,
    "lemma-suites": 7,
    "blowup": 8,
    "liftshadowable": 9,
    "tq1-vs-residual-surjectivity": 10,
    "goldens": None,
}


@pytest.mark.parametrize("name,func", SCENARIOS, ids=[n for n, _ in SCENARIOS])
def test_scenario(name, func, capsys):
    if name == "lemma-suites":
        rep = func(count=COUNT, seed=lemmas.seed_from_env())
    else:
        rep = func()
    crit = CRITERION_OF[name]
    label = "criterion %s" % crit if crit else "support"
    with capsys.disabled():
        print("ACCEPTANCE %-12s %-30s %s"
              % (label, name, "PASS" if rep.ok else "FAIL"))
    if not rep.ok:
        detail = "\n".join(rep.render())
        pytest.fail("scenario %s failed:\n%s" % (name, detail))


def test_every_criterion_is_covered():
    crits = {c for c in CRITERION_OF.values() if c}
    assert crits == set(range(1, 11))
    assert {n for n, _ in SCENARIOS} == set(CRITERION_OF)
