"""Packing a forest (or any guest graph) into the complement of a host graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, InputError, InvariantViolation
from .graph import (
    Graph,
    complement_graph,
    complete_graph,
    contains_subgraph,
    copies,
    forest_metrics,
    is_forest,
    star_graph,
)


@dataclass(frozen=True)
class Packing:
    """Bijection ``map[guest_vertex] = host_vertex`` with no guest edge landing on a host edge."""

    map: tuple[int, ...]
    swaps: int = field(default=0, compare=False)

    def conflicts(self, host: Graph, guest: Graph) -> list[tuple[int, int]]:
        return [(x, y) for x, y in sorted(guest.edges) if host.has_edge(self.map[x], self.map[y])]

    def is_valid(self, host: Graph, guest: Graph) -> bool:
        n = host.n
        return (
            guest.n == n
            and sorted(self.map) == list(range(n))
            and not self.conflicts(host, guest)
        )


def _same_order(g: Graph, h: Graph):
    if g.n != h.n:
        raise InputError(f"graphs must have the same order, got {g.n} and {h.n}")


def sauer_spencer_condition(g: Graph, h: Graph) -> bool:
    """2 Δ(g) Δ(h) < n."""
    _same_order(g, h)
    return 2 * g.max_degree * h.max_degree < g.n


def forest_condition(g: Graph, f: Graph) -> bool:
    """3 Δ(g) + ℓ(f) - 2 comp(f) < n, where comp counts components with an edge."""
    _same_order(g, f)
    if not is_forest(f):
        raise InputError("forest_condition requires an acyclic guest")
    return 3 * g.max_degree + forest_metrics(f).potential < g.n


def exact_pack(g: Graph, h: Graph) -> Packing | None:
    """Complete backtracking search: ``h`` packs with ``g`` iff it embeds in g's complement."""
    _same_order(g, h)
    phi = contains_subgraph(complement_graph(g), h)
    return None if phi is None else Packing(phi)


@dataclass(frozen=True)
class LinkSwapState:
    """Snapshot taken when an inserted forest edge ``(u, x)`` conflicts.

    Positions are forest vertices; ``embedding[p]`` is the host vertex placed
    at forest vertex ``p``.  ``v1`` holds the ends of links that start with a
    forest edge at ``u``, ``v2`` those that start with a host edge at ``u``.
    """

    forest_edges: frozenset[tuple[int, int]]
    embedding: tuple[int, ...]
    conflict: tuple[int, int]
    v1: frozenset[int]
    v2: frozenset[int]
    swapped_with: int


def _insertion_order(f: Graph) -> list[tuple[int, int]]:
    """Forest edges as (new leaf, parent) pairs in DFS order from each component's smallest vertex."""
    seen = [False] * f.n
    order = []
    for root in range(f.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            p = stack.pop()
            for c in sorted(f.adj[p], reverse=True):
                if not seen[c]:
                    seen[c] = True
                    order.append((c, p))
                    stack.append(c)
    return order


def link_swap_pack(g: Graph, f: Graph, *, trace: list | None = None, check: bool = True) -> Packing:
    """Pack forest ``f`` with host ``g`` by inserting forest edges one at a time.

    Each edge is added at a vertex ``u`` that is a leaf of the partial forest.
    If the new edge ``ux`` lands on a host edge it is the only conflict; some
    vertex ``v`` outside ``V1 ∪ V2 ∪ {x}`` then exists by counting, and
    swapping the host vertices at ``u`` and ``v`` removes the conflict without
    creating another.  Requires :func:`forest_condition`.
    """
    if not forest_condition(g, f):
        raise DomainError("link_swap_pack requires 3Δ(g) + ℓ(f) - 2comp(f) < n")
    n = g.n
    delta = g.max_degree
    host_at = list(range(n))
    pos = list(range(n))
    fadj: list[set[int]] = [set() for _ in range(n)]
    inserted: list[tuple[int, int]] = []
    swaps = 0

    def host_nbrs(p: int) -> set[int]:
        return {pos[w] for w in g.adj[host_at[p]]}

    for u, x in _insertion_order(f):
        fadj[u].add(x)
        fadj[x].add(u)
        inserted.append((u, x))
        if not g.has_edge(host_at[u], host_at[x]):
            continue
        v1 = set().union(*(host_nbrs(w) for w in fadj[u]))
        v2 = set().union(*(fadj[w] for w in host_nbrs(u)))
        partial = Graph(n, inserted)
        if len(v1) > len(fadj[u]) * delta or len(v2) > 2 * delta + forest_metrics(partial).potential:
            raise InvariantViolation(f"link-set bound violated at edge {(u, x)}")
        free = [v for v in range(n) if v not in v1 and v not in v2 and v != x]
        if not free:
            raise InvariantViolation(f"no swap partner for conflicting edge {(u, x)}")
        v = free[0]
        if trace is not None:
            trace.append(
                LinkSwapState(
                    frozenset(partial.edges), tuple(host_at), (u, x), frozenset(v1), frozenset(v2), v
                )
            )
        host_at[u], host_at[v] = host_at[v], host_at[u]
        pos[host_at[u]], pos[host_at[v]] = u, v
        swaps += 1
        if check:
            bad = [(a, b) for a, b in Graph(n, inserted).edges if g.has_edge(host_at[a], host_at[b])]
            if bad:
                raise InvariantViolation(f"swap at {(u, x)} left conflicts {bad}")

    packing = Packing(tuple(host_at), swaps)
    if check and not packing.is_valid(g, f):
        raise InvariantViolation("link_swap_pack produced an invalid packing")
    return packing


def tightness_star_instance(n: int) -> tuple[Graph, Graph]:
    """(n/2)K_2 and K_{1,n-1}: condition fails by exactly one and they do not pack."""
    if n < 4 or n % 2:
        raise InputError(f"n must be even and >= 4, got {n}")
    return copies(complete_graph(2), n // 2), star_graph(n)


def spider(legs: list[int]) -> Graph:
    """Center 0 with one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def tightness_spider_instance(m: int, r: int) -> tuple[Graph, Graph]:
    """mK_r and a spider of order mr with (m-1)r+1 legs.

    The r-2 vertices beyond a plain star are spread one per leg, round-robin.
    """
    if m < 2 or r < 2:
        raise InputError(f"need m, r >= 2, got m={m}, r={r}")
    nlegs = (m - 1) * r + 1
    extra = m * r - (nlegs + 1)
    legs = [1 + extra // nlegs + (1 if i < extra % nlegs else 0) for i in range(nlegs)]
    return copies(complete_graph(r), m), spider(legs)


def spider_gap(m: int, r: int) -> tuple[int, int]:
    """Return ``(3Δ(G) + ℓ(T) - 2, (1 + 2/m) n - 4)`` for the spider instance, as integers."""
    g, t = tightness_spider_instance(m, r)
    n = m * r
    lhs = 3 * g.max_degree + forest_metrics(t).leaves - 2
    rhs = n + 2 * n // m - 4
    return lhs, rhs
