"""Potential-Ramsey numbers: exact computation by enumeration and closed-form predictors."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .degseq import (
    DEFAULT_NODE_BUDGET,
    SEQUENCE_BOUND,
    DegreeSequence,
    complement_sequence,
    enumerate_graphic_sequences,
    iter_realizations,
    join_witness_sequence,
)
from .errors import InputError, InvariantViolation, ResourceError
from .generate import enumerate_trees
from .graph import Graph, complete_graph, complement_graph, contains_subgraph, forest_metrics, is_tree
from .potential import cached_answer, fast_decision, is_potentially, record_answer


@dataclass(frozen=True)
class RpotInstance:
    h1: Graph
    h2: Graph
    n_max: int = SEQUENCE_BOUND

    def __post_init__(self):
        if self.h1.n == 0 or self.h2.n == 0:
            raise InputError("targets must have at least one vertex")


@dataclass(frozen=True)
class NVerdict:
    n: int
    holds: bool
    counterexample: DegreeSequence | None = None

    def to_json(self) -> dict:
        out: dict = {"n": self.n, "holds": self.holds}
        if self.counterexample is not None:
            out["counterexample"] = list(self.counterexample.terms)
        return out


@dataclass(frozen=True)
class RpotReport:
    per_n: tuple[NVerdict, ...]
    minimal_n: int | None
    monotone: bool
    n_max: int = field(default=0, compare=False)

    def to_json(self) -> dict:
        return {
            "per_n": [v.to_json() for v in self.per_n],
            "minimal_n": self.minimal_n,
            "monotone": self.monotone,
        }


def sequence_covered(s: DegreeSequence, h1: Graph, h2: Graph, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff ``s`` is potentially h1-graphic or its complement is potentially h2-graphic.

    Degree conditions and memoized answers are consulted for both sides
    first.  Otherwise one walk over the realizations of ``s`` tests h1 in each
    realization and h2 in its complement, stopping at the first hit.
    """
    sbar = complement_sequence(s)
    f1 = fast_decision(s, h1)
    f2 = fast_decision(sbar, h2)
    if f1 or f2:
        return True
    c1 = cached_answer(s, h1) if f1 is None else False
    c2 = cached_answer(sbar, h2) if f2 is None else False
    if c1 or c2:
        return True
    want1, want2 = c1 is None, c2 is None
    if not (want1 or want2):
        return False
    for g in iter_realizations(s, budget):
        if want1 and contains_subgraph(g, h1) is not None:
            record_answer(s, h1, True)
            return True
        if want2 and contains_subgraph(complement_graph(g), h2) is not None:
            record_answer(sbar, h2, True)
            return True
    if want1:
        record_answer(s, h1, False)
    if want2:
        record_answer(sbar, h2, False)
    return False


def _first_uncovered(args) -> int | None:
    seqs, h1, h2, budget = args
    for i, s in enumerate(seqs):
        if not sequence_covered(s, h1, h2, budget):
            return i
    return None


def rpot_property_holds(
    h1: Graph, h2: Graph, n: int, *, budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1
) -> tuple[bool, DegreeSequence | None]:
    """Check every graphic sequence of length ``n``.

    Returns ``(True, None)`` or ``(False, counterexample)``; the counterexample
    is the lexicographically smallest failing sequence regardless of ``jobs``.
    """
    if n < max(h1.n, h2.n):
        raise InputError(f"n={n} is below the target orders {h1.n}, {h2.n}")
    seqs = list(enumerate_graphic_sequences(n))[::-1]
    if jobs <= 1:
        i = _first_uncovered((seqs, h1, h2, budget))
        return (True, None) if i is None else (False, seqs[i])
    size = max(1, -(-len(seqs) // (4 * jobs)))
    chunks = [seqs[k:k + size] for k in range(0, len(seqs), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_first_uncovered, [(c, h1, h2, budget) for c in chunks]))
    for chunk, i in zip(chunks, results):
        if i is not None:
            return False, chunk[i]
    return True, None


def rpot_exact(inst: RpotInstance, *, budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1) -> RpotReport:
    """Scan N from max(|H1|, |H2|) to ``n_max`` without assuming monotonicity."""
    start = max(inst.h1.n, inst.h2.n)
    if inst.n_max > SEQUENCE_BOUND:
        raise ResourceError(f"n_max={inst.n_max} exceeds sequence bound {SEQUENCE_BOUND}")
    verdicts = []
    for n in range(start, inst.n_max + 1):
        holds, cex = rpot_property_holds(inst.h1, inst.h2, n, budget=budget, jobs=jobs)
        verdicts.append(NVerdict(n, holds, cex))
    minimal = next((v.n for v in verdicts if v.holds), None)
    monotone = minimal is not None and all(v.holds for v in verdicts if v.n >= minimal)
    return RpotReport(tuple(verdicts), minimal, monotone, inst.n_max)


# --- closed forms -----------------------------------------------------------


def predict_clique_clique(n: int, t: int) -> int:
    if not n >= t >= 3:
        raise InputError(f"need n >= t >= 3, got n={n}, t={t}")
    return 6 if n == t == 3 else 2 * n + t - 4


def predict_clique_path(s: int, t: int) -> int:
    if t < 6 or s < 3:
        raise InputError(f"need t >= 6 and s >= 3, got s={s}, t={t}")
    return 2 * s - 2 + t // 3 if s > (2 * t) // 3 else t + s - 2


def predict_clique_star(s: int, t: int) -> int:
    """Clique K_s against the star K_{1,t-1}."""
    if s < 4 or t < 4:
        raise InputError(f"need s, t >= 4, got s={s}, t={t}")
    return 2 * s if t < s + 2 else t + s - 2


def predict_clique_tree(s: int, tree: Graph) -> int | None:
    """t+s-2 when the tree has at least s+1 leaves or t > 7(s-2); otherwise ``None``."""
    if s < 2:
        raise InputError(f"need s >= 2, got {s}")
    if not is_tree(tree):
        raise InputError("predict_clique_tree needs a tree")
    t = tree.n
    leaves = forest_metrics(tree).leaves
    if leaves >= s + 1 or t > 7 * (s - 2):
        return t + s - 2
    return None


def lower_bound_witness(
    s: int, t: int, patterns: list[Graph] | None = None, *, budget: int = DEFAULT_NODE_BUDGET
) -> DegreeSequence:
    """Sequence of K_{s-2} joined with t-1 independent vertices, checked as a counterexample.

    The sequence is not potentially K_s-graphic, and its complement is not
    potentially H-graphic for each H in ``patterns`` (default: every tree of
    order t).  Raises :class:`InvariantViolation` if either check fails.
    """
    seq = join_witness_sequence(s, t)
    if patterns is None:
        patterns = list(enumerate_trees(t))
    for h in patterns:
        if h.n != t or 0 in h.degrees:
            raise InputError("patterns must have order t and no isolated vertices")
    if s <= len(seq) and is_potentially(seq, complete_graph(s), budget=budget):
        raise InvariantViolation(f"{seq} is potentially K_{s}-graphic")
    sbar = complement_sequence(seq)
    for h in patterns:
        if h.n <= len(sbar) and is_potentially(sbar, h, budget=budget):
            raise InvariantViolation(f"complement of {seq} is potentially H-graphic")
    return seq
