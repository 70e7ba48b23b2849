import json

import pytest

from potram.errors import InputError
from potram.verify import SUITES, verify_theorem

SMALL = {
    "clique-clique": {"points": ((3, 3),)},
    "clique-path": {},
    "clique-star": {"points": ((4, 4),)},
    "clique-tree": {"s": 3, "t": 5, "nmax": 6},
    "sauer-spencer": {"nmax": 5},
    "forest-packing": {"nmax": 6},
    "tree-packing": {"nmax": 6},
    "tightness": {},
    "join-witness": {"smax": 4, "tmax": 5},
    "clique-sufficient": {"nmax": 6, "kmax": 3},
    "tree-sufficient": {"nmax": 6, "tmax": 4},
    "star-exact": {"nmax": 6},
    "top-degree": {"nmax": 6},
    "degree-bounds": {"s": 3, "t": 5},
}


def test_every_suite_has_a_small_case():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes_small(suite):
    rep = verify_theorem(suite, **SMALL[suite])
    assert rep.points
    assert rep.passed and not rep.incomplete, rep.to_json()
    json.dumps(rep.to_json())


def test_clique_tree_small_values():
    # trees of order 5 against K_3: the star is covered by the leaf condition,
    # the other two are not covered by a formula but still compute exactly
    rep = verify_theorem("clique-tree", s=3, t=5, nmax=6)
    assert len(rep.points) == 3


def test_unknown_suite():
    with pytest.raises(InputError):
        verify_theorem("no-such-suite")


def test_tiny_budget_marks_incomplete():
    rep = verify_theorem("clique-clique", points=((4, 4),), budget=1)
    assert rep.incomplete and not rep.passed
    assert rep.to_json()["incomplete"] is True
