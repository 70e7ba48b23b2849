import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_labeled_graphs, brute_certificate
from potram.canon import are_isomorphic, canonical_form, canonical_graph, canonical_labeling
from potram.graph import Graph, complete_graph, cycle_graph, empty_graph, join, star_graph


@pytest.mark.parametrize("n", range(0, 6))
def test_canonical_form_separates_classes_exactly(n):
    by_brute = {}
    for g in all_labeled_graphs(n):
        by_brute.setdefault(brute_certificate(g), set()).add(canonical_form(g))
    assert all(len(c) == 1 for c in by_brute.values())
    assert len({next(iter(c)) for c in by_brute.values()}) == len(by_brute)


@st.composite
def relabeled_pair(draw):
    n = draw(st.integers(1, 11))
    p = draw(st.floats(0, 1))
    seed = draw(st.integers(0, 2**32))
    rng = random.Random(seed)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    perm = list(range(n))
    rng.shuffle(perm)
    return g, g.relabel(perm)


@settings(max_examples=200, deadline=None)
@given(relabeled_pair())
def test_certificate_invariant_under_relabeling(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.mark.parametrize(
    "g",
    [complete_graph(10), empty_graph(10), cycle_graph(10), petersen(), star_graph(10),
     join(empty_graph(5), empty_graph(5))],
    ids=["K10", "E10", "C10", "petersen", "star", "K55"],
)
def test_symmetric_graphs(g):
    perm = list(range(g.n))
    random.Random(7).shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_labeling_reproduces_certificate():
    g = petersen()
    cert, order = canonical_labeling(g.masks)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    assert g.relabel(perm) == canonical_graph(g)
    assert Graph.from_masks(cert) == canonical_graph(g)


def test_c10_and_two_c5_differ():
    two_c5 = Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert not are_isomorphic(cycle_graph(10), two_c5)
    assert are_isomorphic(cycle_graph(5), Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]))
