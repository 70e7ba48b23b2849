"""Potentially H-graphic sequences.

The exact decision walks the realization space (see
:func:`potram.degseq.iter_realizations`) and tests subgraph containment on
every class.  Cheap degree conditions short-circuit it where they apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_form
from .degseq import DEFAULT_NODE_BUDGET, DegreeSequence, is_graphic, iter_realizations
from .errors import DomainError, InputError
from .graph import Graph, contains_subgraph, induced_subgraph, is_tree


@dataclass(frozen=True)
class PotentialWitness:
    """A realization of the queried sequence and an embedding of H into it.

    ``realization`` is labeled so that vertex degrees are nonincreasing, i.e.
    vertex ``i`` has degree ``d(i + 1)``.  ``embedding[x]`` is the realization
    vertex that H's vertex ``x`` maps to.
    """

    realization: Graph
    embedding: tuple[int, ...]

    def check(self, s: DegreeSequence, h: Graph) -> bool:
        g = self.realization
        if g.sorted_degrees() != s.terms or len(set(self.embedding)) != h.n:
            return False
        return all(g.has_edge(self.embedding[x], self.embedding[y]) for x, y in h.edges)


def _degree_ordered(g: Graph, phi: tuple[int, ...]) -> PotentialWitness:
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return PotentialWitness(g.relabel(perm), tuple(perm[v] for v in phi))


# --- recognizers for the target families ---------------------------------


def is_complete(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


def is_star(h: Graph) -> bool:
    """True for K_{1,t-1} with t >= 2."""
    return h.n >= 2 and is_tree(h) and h.max_degree == h.n - 1


# --- degree conditions ------------------------------------------------------


def dominates(s: DegreeSequence, h: Graph) -> bool:
    """Necessary condition: the top ``h.n`` terms dominate H's sorted degrees."""
    if h.n > len(s):
        return False
    return all(a >= b for a, b in zip(s.terms, h.sorted_degrees()))


def clique_sufficient(s: DegreeSequence, k: int) -> bool:
    """Yin-Li sufficient condition for s to be potentially K_k-graphic.

    (i)  d_k >= k-1 and d_{2k} >= k-2 (needs length >= 2k), or
    (ii) d_k >= k-1 and d_i >= 2k-2-i for 1 <= i <= k-1.
    """
    if k < 1 or len(s) < k or s.d(k) < k - 1:
        return False
    if len(s) >= 2 * k and s.d(2 * k) >= k - 2:
        return True
    return all(s.d(i) >= 2 * k - 2 - i for i in range(1, k))


def tree_sufficient(s: DegreeSequence, t: int) -> bool:
    """d_{t-1} >= t-1 makes s potentially T-graphic for every tree T of order t."""
    if len(s) < t:
        raise InputError(f"sequence length {len(s)} is below tree order {t}")
    if t == 1:
        return True
    return s.d(t - 1) >= t - 1


def star_potential(s: DegreeSequence, t: int) -> bool:
    """Exact test for K_{1,t-1}: some vertex needs t-1 neighbors."""
    if len(s) < t:
        raise InputError(f"sequence length {len(s)} is below star order {t}")
    return t == 1 or s.d(1) >= t - 1


def degree_bounds(s: DegreeSequence, k: int, t: int) -> bool:
    """d_{t-k-1} >= t and d_t >= t-k+1, for sequences of length t+k-2 and k <= t-2.

    Holds for every sequence that is not potentially T-graphic (T a tree of
    order t) and whose complement is not potentially K_k-graphic.
    """
    if k > t - 2:
        raise InputError(f"need k <= t-2, got k={k}, t={t}")
    if len(s) != t + k - 2:
        raise InputError(f"sequence length {len(s)} != t+k-2 = {t + k - 2}")
    return s.d(t - k - 1) >= t and s.d(t) >= t - k + 1


def fast_decision(s: DegreeSequence, h: Graph) -> bool | None:
    """Answer from degree conditions alone, or ``None`` if they are silent."""
    if h.n > len(s) or not dominates(s, h):
        return False
    if h.m == 0:
        return True
    if is_star(h):
        return star_potential(s, h.n)
    if is_complete(h):
        return True if clique_sufficient(s, h.n) else None
    if is_tree(h) and tree_sufficient(s, h.n):
        return True
    return None


# --- exact decision ---------------------------------------------------------

_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}


def _key(s: DegreeSequence, h: Graph):
    return (s.terms, (h.n,) + canonical_form(h))


def cached_answer(s: DegreeSequence, h: Graph) -> bool | None:
    return _memo.get(_key(s, h))


def record_answer(s: DegreeSequence, h: Graph, value: bool) -> None:
    _memo[_key(s, h)] = value


def clear_cache() -> None:
    _memo.clear()


def _check_args(s: DegreeSequence, h: Graph):
    if not is_graphic(s):
        raise DomainError(f"sequence {s} is not graphic")


def potentially(
    s: DegreeSequence, h: Graph, *, fast: bool = True, budget: int = DEFAULT_NODE_BUDGET
) -> PotentialWitness | None:
    """Return a witness realization containing ``h``, or ``None`` if none exists.

    With ``fast=False`` no degree condition is consulted and the realization
    space is searched outright; this is the reference oracle for the
    sufficient conditions.
    """
    _check_args(s, h)
    if h.n > len(s):
        return None
    if fast:
        if fast_decision(s, h) is False or cached_answer(s, h) is False:
            return None
    for g in iter_realizations(s, budget):
        phi = contains_subgraph(g, h)
        if phi is not None:
            record_answer(s, h, True)
            return _degree_ordered(g, phi)
    record_answer(s, h, False)
    return None


def is_potentially(s: DegreeSequence, h: Graph, *, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Boolean decision with fast paths and memoization (no witness built)."""
    _check_args(s, h)
    verdict = fast_decision(s, h)
    if verdict is not None:
        return verdict
    verdict = cached_answer(s, h)
    if verdict is not None:
        return verdict
    return potentially(s, h, fast=False, budget=budget) is not None


def top_degree_embedding(
    s: DegreeSequence, h: Graph, *, budget: int = DEFAULT_NODE_BUDGET
) -> PotentialWitness | None:
    """Find a realization with ``h`` embedded on its ``h.n`` highest-degree vertices.

    Among vertices tied at the cutoff degree any subset of the right size is
    accepted.  Returns ``None`` if no realization admits such an embedding.
    """
    _check_args(s, h)
    k = h.n
    if k > len(s):
        return None
    if k == 0:
        return _degree_ordered(next(iter_realizations(s, budget)), ())
    cutoff = s.d(k)
    for g in iter_realizations(s, budget):
        w = _degree_ordered(g, ())
        g = w.realization
        forced = [v for v in range(g.n) if g.degrees[v] > cutoff]
        ties = [v for v in range(g.n) if g.degrees[v] == cutoff]
        for extra in combinations(ties, k - len(forced)):
            top = forced + list(extra)
            phi = contains_subgraph(induced_subgraph(g, top), h)
            if phi is not None:
                return PotentialWitness(g, tuple(top[x] for x in phi))
    return None
