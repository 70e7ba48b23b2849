"""Simple undirected graphs on vertices ``0..n-1`` and structural primitives."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``.  The
    adjacency sets, adjacency bitmasks and the degree list are derived lazily
    and cached, so adjacency queries are O(1).
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            norm.add(_norm_edge(u, v))
        self.n = n
        self.edges = frozenset(norm)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
        return cls(n, edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


# --- constructors ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(t: int) -> Graph:
    """The star K_{1,t-1}: order ``t``, center 0."""
    if t < 1:
        raise InputError(f"star order must be positive, got {t}")
    return Graph(t, ((0, i) for i in range(1, t)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    u = disjoint_union(a, b)
    cross = [(i, a.n + j) for i in range(a.n) for j in range(b.n)]
    return Graph(u.n, list(u.edges) + cross)


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g`` (e.g. ``copies(complete_graph(2), 3)`` is 3K_2)."""
    return disjoint_union(*([g] * k))


# --- structural operations ------------------------------------------------


def complement_graph(g: Graph) -> Graph:
    n = g.n
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.edges))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled ``0..k-1`` in list order."""
    index = {}
    for i, v in enumerate(vertices):
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
        if v in index:
            raise InputError(f"duplicated vertex {v}")
        index[v] = i
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(vertices), edges)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class ForestMetrics:
    leaves: int
    edge_components: int
    max_degree: int

    @property
    def potential(self) -> int:
        """``leaves - 2 * edge_components``, the forest term of the packing condition."""
        return self.leaves - 2 * self.edge_components


def forest_metrics(f: Graph) -> ForestMetrics:
    if not is_forest(f):
        raise InputError("forest_metrics requires an acyclic graph")
    leaves = sum(1 for d in f.degrees if d == 1)
    comps = sum(1 for c in components(f) if len(c) > 1)
    return ForestMetrics(leaves, comps, f.max_degree)


def contains_subgraph(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Find an injection ``phi`` mapping every pattern edge onto a host edge.

    Returns ``phi`` as a tuple indexed by pattern vertex, or ``None``.  The
    match is not induced.  Pattern vertices are placed in decreasing-degree
    order, preferring ones adjacent to already placed vertices, and a host
    candidate must have degree at least that of the pattern vertex.
    """
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return ()
    pdeg = pattern.degrees
    hdeg = host.degrees
    if any(a > b for a, b in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None

    order: list[int] = []
    placed = set()
    remaining = set(range(k))
    while remaining:
        best = max(
            remaining,
            key=lambda p: (len(pattern.adj[p] & placed), pdeg[p], -p),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)

    pos = {p: i for i, p in enumerate(order)}
    back = [[pos[q] for q in pattern.adj[p] if pos[q] < i] for i, p in enumerate(order)]
    hmask = host.masks
    full = (1 << host.n) - 1
    at_least = [0] * (max(pdeg) + 1)
    for d in range(len(at_least)):
        at_least[d] = sum(1 << v for v in range(host.n) if hdeg[v] >= d)
    need = [at_least[pdeg[p]] for p in order]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = need[i] & ~used & full
        for j in back[i]:
            cand &= hmask[image[j]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            image[i] = v
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not extend(0, 0):
        return None
    phi = [0] * k
    for i, p in enumerate(order):
        phi[p] = image[i]
    return tuple(phi)
