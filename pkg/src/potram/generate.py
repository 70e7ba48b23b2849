"""Isomorphism-class enumeration of graphs and trees."""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterator

from .canon import canonical_form
from .errors import InputError, ResourceError
from .graph import Graph

GRAPH_BOUND = 8
TREE_BOUND = 9


def enumerate_graphs(n: int, bound: int = GRAPH_BOUND) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class on ``n`` vertices."""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise ResourceError(f"enumerate_graphs: n={n} exceeds bound {bound}")
    yield from (Graph.from_masks(c) for c in _graph_certs(n))


@lru_cache(maxsize=None)
def _graph_certs(n: int) -> tuple[tuple[int, ...], ...]:
    if n <= 1:
        return ((0,) * n,)
    found: set[tuple[int, ...]] = set()
    for base in _graph_certs(n - 1):
        k = n - 1
        degs = [m.bit_count() for m in base]
        for sub in range(1 << k):
            size = sub.bit_count()
            # the new vertex must be of minimum degree: every graph arises by
            # adding back one of its minimum-degree vertices
            if any(degs[w] + (sub >> w & 1) < size for w in range(k)):
                continue
            masks = [base[w] | ((sub >> w & 1) << k) for w in range(k)]
            masks.append(sub)
            found.add(canonical_form(Graph.from_masks(masks)))
    return tuple(sorted(found, key=lambda c: (sum(x.bit_count() for x in c), c)))


def prufer_decode(seq, t: int) -> Graph:
    """Labeled tree on ``t`` vertices with Prüfer sequence ``seq`` (length t-2)."""
    degree = [1] * t
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(t) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(t, edges)


def _partitions(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    """Nonincreasing lists of length ``parts`` with entries <= cap summing to total."""
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    length = sum(counts)
    out = [0] * length

    def rec(i):
        if i == length:
            yield tuple(out)
            return
        for v, c in enumerate(counts):
            if c:
                counts[v] -= 1
                out[i] = v
                yield from rec(i + 1)
                counts[v] += 1

    yield from rec(0)


def enumerate_trees(t: int, bound: int = TREE_BOUND) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class of trees of order ``t``.

    Labelings are restricted to those where vertex labels are sorted by
    nonincreasing degree; every tree admits one, so every Prüfer sequence
    whose label multiplicities are nonincreasing covers all classes.
    """
    if t < 1:
        raise InputError(f"tree order must be positive, got {t}")
    if t > bound:
        raise ResourceError(f"enumerate_trees: t={t} exceeds bound {bound}")
    yield from (Graph.from_masks(c) for c in _tree_certs(t))


@lru_cache(maxsize=None)
def _tree_certs(t: int) -> tuple[tuple[int, ...], ...]:
    if t == 1:
        return ((0,),)
    if t == 2:
        return ((2, 1),)
    found: set[tuple[int, ...]] = set()
    for counts in _partitions(t - 2, t, t - 2):
        for seq in _multiset_permutations(list(counts)):
            found.add(canonical_form(prufer_decode(seq, t)))
    # order by leaf count then certificate, so paths come first
    return tuple(sorted(found, key=lambda c: (sum(1 for x in c if x.bit_count() == 1), c)))
