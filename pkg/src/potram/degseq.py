"""Degree sequences: graphicality, Havel-Hakimi realization, complements,
enumeration, and traversal of the realization space by 2-switches."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import canonical_labeling
from .errors import BudgetExceeded, DomainError, InputError, ResourceError
from .graph import Graph

SEQUENCE_BOUND = 10
DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True, init=False)
class DegreeSequence:
    """Nonincreasing tuple of nonnegative integers, each at most ``len - 1``.

    Unsorted input is accepted and sorted.  ``d(i)`` is 1-indexed, so
    ``d(1)`` is the largest term.
    """

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int]):
        vals = tuple(sorted((int(x) for x in terms), reverse=True))
        if vals and vals[-1] < 0:
            raise InputError(f"negative term {vals[-1]} in degree sequence")
        if vals and vals[0] > len(vals) - 1:
            raise InputError(f"term {vals[0]} exceeds length-1 = {len(vals) - 1}")
        object.__setattr__(self, "terms", vals)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse ``"3,2,2,2,1"`` (any order)."""
        text = text.strip()
        if not text:
            return cls(())
        vals = []
        for tok in text.split(","):
            tok = tok.strip()
            try:
                vals.append(int(tok))
            except ValueError:
                raise InputError(f"not an integer: {tok!r}") from None
        return cls(vals)

    @classmethod
    def of_graph(cls, g: Graph) -> "DegreeSequence":
        return cls(g.degrees)

    def d(self, i: int) -> int:
        """The ``i``-th largest term (1-indexed)."""
        if not 1 <= i <= len(self.terms):
            raise IndexError(f"d({i}) out of range for length {len(self.terms)}")
        return self.terms[i - 1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return ",".join(map(str, self.terms))


def is_graphic(s: DegreeSequence) -> bool:
    d = s.terms
    n = len(d)
    if sum(d) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        if prefix > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def realize(s: DegreeSequence) -> Graph:
    """Havel-Hakimi realization; vertex ``i`` receives degree ``s.terms[i]``."""
    residual = list(s.terms)
    n = len(residual)
    edges = []
    while True:
        v = max(range(n), key=lambda i: (residual[i], -i), default=None)
        if v is None or residual[v] == 0:
            break
        need = residual[v]
        residual[v] = 0
        others = sorted((i for i in range(n) if residual[i] > 0), key=lambda i: (-residual[i], i))
        if len(others) < need:
            raise DomainError(f"sequence {s} is not graphic")
        for w in others[:need]:
            residual[w] -= 1
            edges.append((v, w))
    return Graph(n, edges)


def complement_sequence(s: DegreeSequence) -> DegreeSequence:
    n = len(s)
    return DegreeSequence(n - 1 - d for d in reversed(s.terms))


def join_witness_sequence(s: int, t: int) -> DegreeSequence:
    """Degree sequence of K_{s-2} joined with an independent set of size t-1."""
    if s < 2 or t < 2:
        raise InputError(f"need s >= 2 and t >= 2, got s={s}, t={t}")
    return DegreeSequence([t + s - 4] * (s - 2) + [s - 2] * (t - 1))


def enumerate_graphic_sequences(n: int, bound: int = SEQUENCE_BOUND) -> Iterator[DegreeSequence]:
    """Every graphic sequence of length ``n``, lexicographically decreasing."""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise ResourceError(f"enumerate_graphic_sequences: n={n} exceeds bound {bound}")
    return (DegreeSequence(t) for t in _graphic_terms(n))


@lru_cache(maxsize=None)
def _graphic_terms(n: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(total: int):
        k = len(prefix)
        if k == n:
            seq = tuple(prefix)
            if total % 2 == 0 and is_graphic(DegreeSequence(seq)):
                out.append(seq)
            return
        hi = prefix[-1] if prefix else n - 1
        for v in range(hi, -1, -1):
            kk = k + 1
            # later terms are <= v, which bounds the right-hand side
            if total + v > kk * (kk - 1) + (n - kk) * min(v, kk):
                continue
            prefix.append(v)
            rec(total + v)
            prefix.pop()

    rec(0)
    return tuple(out)


def two_switch_neighbors(masks: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All graphs one 2-switch away: edges ab, cd become ac, bd (or ad, bc)."""
    n = len(masks)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c == a or c == b or d == a or d == b:
                continue
            for x, y in ((c, d), (d, c)):
                # ab, xy -> ax, by
                if masks[a] >> x & 1 or masks[b] >> y & 1:
                    continue
                new = list(masks)
                new[a] ^= (1 << b) | (1 << x)
                new[b] ^= (1 << a) | (1 << y)
                new[x] ^= (1 << y) | (1 << a)
                new[y] ^= (1 << x) | (1 << b)
                yield tuple(new)


def iter_realizations(s: DegreeSequence, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of realizations of ``s``.

    Breadth-first over 2-switches from the Havel-Hakimi realization, deduplicated
    by canonical certificate.  The first graph yielded is the Havel-Hakimi
    realization itself (in original labels).  Raises :class:`BudgetExceeded`
    if more than ``budget`` classes would be visited.
    """
    if not is_graphic(s):
        raise DomainError(f"sequence {s} is not graphic")
    start = realize(s)
    cert = canonical_labeling(start.masks)[0]
    seen = {cert}
    queue = deque([cert])
    yield start
    while queue:
        cur = queue.popleft()
        if cur != cert:
            yield Graph.from_masks(cur)
        for nb in two_switch_neighbors(cur):
            c = canonical_labeling(nb)[0]
            if c not in seen:
                if len(seen) >= budget:
                    raise BudgetExceeded(
                        f"realization budget {budget} exceeded for {s}", sequence=s, visited=len(seen)
                    )
                seen.add(c)
                queue.append(c)


def count_realizations(s: DegreeSequence, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return sum(1 for _ in iter_realizations(s, budget))
