import pytest

from oracles import brute_potentially, brute_contains
from potram.degseq import DegreeSequence, complement_sequence, enumerate_graphic_sequences
from potram.errors import BudgetExceeded, DomainError, InputError
from potram.generate import enumerate_trees
from potram.graph import (
    Graph,
    complete_graph,
    copies,
    cycle_graph,
    induced_subgraph,
    path_graph,
    star_graph,
)
from potram.potential import (
    clique_sufficient,
    degree_bounds,
    dominates,
    fast_decision,
    is_potentially,
    potentially,
    star_potential,
    top_degree_embedding,
    tree_sufficient,
)

D = DegreeSequence
K3 = complete_graph(3)


def test_potentially_examples():
    w = potentially(D((2,) * 6), K3)
    assert w is not None and w.check(D((2,) * 6), K3)
    # the realization must be 2K_3 since C_6 has no triangle
    assert brute_contains(w.realization, K3)
    assert w.realization.m == 6
    w = potentially(D((2,) * 6), cycle_graph(6))
    assert w is not None and w.check(D((2,) * 6), cycle_graph(6))
    assert potentially(D((1, 1, 1, 1)), path_graph(3)) is None


def test_potentially_requires_graphic():
    with pytest.raises(DomainError):
        potentially(D((3, 3, 1, 1)), K3)


def test_potentially_budget_is_not_a_no():
    # the first realization of 3^8 is 2K_4, which has no Hamiltonian cycle;
    # with a budget of one class the search must give up rather than say no
    with pytest.raises(BudgetExceeded):
        potentially(D((3,) * 8), cycle_graph(8), fast=False, budget=1)
    assert potentially(D((3,) * 8), cycle_graph(8), fast=False) is not None


def test_target_larger_than_sequence_is_no():
    assert potentially(D((1, 1)), K3) is None


PATTERNS = {
    "K2": complete_graph(2),
    "K3": K3,
    "K4": complete_graph(4),
    "P3": path_graph(3),
    "P4": path_graph(4),
    "P5": path_graph(5),
    "K1,3": star_graph(4),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "2K2": copies(complete_graph(2), 2),
    "bull": Graph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]),
}


@pytest.mark.parametrize("name", sorted(PATTERNS))
@pytest.mark.parametrize("n", range(1, 7))
def test_potentially_matches_labeled_oracle(name, n):
    h = PATTERNS[name]
    for s in enumerate_graphic_sequences(n):
        expected = brute_potentially(s.terms, h)
        exact = potentially(s, h, fast=False)
        assert (exact is not None) == expected, (s, name)
        assert (potentially(s, h) is not None) == expected, (s, name)
        assert is_potentially(s, h) == expected
        if exact is not None:
            assert exact.check(s, h)


def test_clique_sufficient_examples():
    assert clique_sufficient(D((2,) * 6), 3)
    assert clique_sufficient(D((3, 3, 3, 1, 1, 1)), 3)
    assert not clique_sufficient(D((2, 2, 1, 1, 1, 1)), 3)


def test_clique_sufficient_condition_ii_only():
    # length 5 < 2k so only the second condition can apply
    s = D((4, 3, 2, 2, 1))
    assert clique_sufficient(s, 3)
    assert not clique_sufficient(D((2, 2, 2, 1, 1)), 3)


def test_tree_sufficient_examples():
    assert tree_sufficient(D((3,) * 6), 4)
    assert not tree_sufficient(D((2,) * 4), 4)
    assert tree_sufficient(D((1, 1)), 2)
    with pytest.raises(InputError):
        tree_sufficient(D((1, 1)), 3)


def test_star_potential_examples():
    assert star_potential(D((3, 1, 1, 1)), 4)
    assert not star_potential(D((2, 2, 2, 2)), 4)
    for t in range(2, 8):
        assert star_potential(D((t - 1,) + (1,) * (t - 1)), t)


def test_degree_bounds_examples():
    # first inequality fails: d_2 = 5 < 6
    assert not degree_bounds(D((6, 5, 4, 4, 4, 4, 4)), 3, 6)
    assert degree_bounds(D((6, 6, 6, 6, 4, 4, 4)), 3, 6)
    with pytest.raises(InputError):
        degree_bounds(D((6, 6, 6, 6, 4, 4, 4, 4)), 3, 6)
    with pytest.raises(InputError):
        degree_bounds(D((1, 1, 1, 1, 1, 1)), 4, 5)


def test_degree_bounds_deduction_is_nonvacuous():
    """The same deduction from degree conditions alone, where it has content.

    If d_{t-1} <= t-2 and the complement fails the clique condition, the two
    bounds follow.  At (k, t) = (4, 6) this covers many sequences, unlike the
    exact hypothesis which is never met at this order.
    """
    k, t = 4, 6
    hits = 0
    for s in enumerate_graphic_sequences(t + k - 2):
        if s.d(t - 1) <= t - 2 and not clique_sufficient(complement_sequence(s), k):
            hits += 1
            assert degree_bounds(s, k, t), s
    assert hits > 0


def test_dominates_is_necessary():
    for s in enumerate_graphic_sequences(6):
        for h in PATTERNS.values():
            if not dominates(s, h):
                assert not brute_potentially(s.terms, h)


@pytest.mark.parametrize("k", range(1, 5))
def test_clique_sufficient_sound(k):
    for n in range(k, 8):
        for s in enumerate_graphic_sequences(n):
            if clique_sufficient(s, k):
                assert potentially(s, complete_graph(k), fast=False) is not None, s


@pytest.mark.parametrize("t", range(2, 6))
def test_tree_sufficient_sound(t):
    trees = list(enumerate_trees(t))
    for n in range(t, 7):
        for s in enumerate_graphic_sequences(n):
            if tree_sufficient(s, t):
                for tree in trees:
                    assert potentially(s, tree, fast=False) is not None


def test_fast_decision_never_contradicts_exact():
    for s in enumerate_graphic_sequences(6):
        for h in PATTERNS.values():
            verdict = fast_decision(s, h)
            if verdict is not None:
                assert verdict == brute_potentially(s.terms, h)


def test_top_degree_examples():
    s = D((2,) * 6)
    w = top_degree_embedding(s, K3)
    assert w is not None and w.check(s, K3)

    s = D((3, 2, 2, 2, 1))
    w = top_degree_embedding(s, path_graph(3))
    assert w is not None and w.check(s, path_graph(3))
    used = sorted(w.realization.degrees[v] for v in w.embedding)
    assert used == [2, 2, 3]

    s = D((3, 3, 2, 2, 2, 2))
    w = top_degree_embedding(s, star_graph(4))
    assert w is not None and w.check(s, star_graph(4))
    assert all(v < 4 for v in w.embedding)


@pytest.mark.parametrize("name", ["K3", "P4", "K1,3", "C4"])
def test_top_degree_equivalence(name):
    h = PATTERNS[name]
    for n in range(h.n, 7):
        for s in enumerate_graphic_sequences(n):
            w = top_degree_embedding(s, h)
            assert (w is not None) == brute_potentially(s.terms, h)
            if w is not None:
                top = sorted(range(n), key=lambda v: -w.realization.degrees[v])[:h.n]
                cutoff = min(w.realization.degrees[v] for v in top)
                assert all(w.realization.degrees[v] >= cutoff for v in w.embedding)
                sub = induced_subgraph(w.realization, sorted(w.embedding))
                assert sub.m >= h.m
