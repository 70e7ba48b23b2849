"""Named exhaustive checks binding predictors to exact computation.

Each suite returns a :class:`SuiteReport` with one :class:`PointResult` per
parameter point.  A point that runs out of search budget is marked
incomplete rather than failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .degseq import (
    DEFAULT_NODE_BUDGET,
    complement_sequence,
    count_realizations,
    enumerate_graphic_sequences,
    join_witness_sequence,
)
from .errors import BudgetExceeded, InputError
from .generate import enumerate_graphs, enumerate_trees
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    forest_metrics,
    is_forest,
    path_graph,
    star_graph,
)
from .packing import (
    exact_pack,
    forest_condition,
    link_swap_pack,
    sauer_spencer_condition,
    spider_gap,
    tightness_spider_instance,
    tightness_star_instance,
)
from .potential import (
    clique_sufficient,
    degree_bounds,
    potentially,
    star_potential,
    top_degree_embedding,
    tree_sufficient,
)
from .ramsey import (
    RpotInstance,
    lower_bound_witness,
    predict_clique_clique,
    predict_clique_path,
    predict_clique_star,
    predict_clique_tree,
    rpot_exact,
)


@dataclass
class PointResult:
    label: str
    passed: bool
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    incomplete: bool = False

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "incomplete": self.incomplete,
        }


@dataclass
class SuiteReport:
    suite: str
    points: list[PointResult]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    @property
    def incomplete(self) -> bool:
        return any(p.incomplete for p in self.points)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "incomplete": self.incomplete,
            "points": [p.to_json() for p in self.points],
        }


_MAX_LISTED = 20


def _point(label: str, run: Callable[[list[str]], int]) -> PointResult:
    failures: list[str] = []
    try:
        checked = run(failures)
    except BudgetExceeded as exc:
        return PointResult(label, False, 0, [str(exc)], incomplete=True)
    return PointResult(label, not failures, checked, failures[:_MAX_LISTED])


def _rpot_point(label, h1, h2, expected, nmax, budget, jobs):
    def run(fail):
        rep = rpot_exact(RpotInstance(h1, h2, nmax or expected + 1), budget=budget, jobs=jobs)
        if rep.minimal_n != expected or not rep.monotone:
            fail.append(f"expected {expected}, got minimal_n={rep.minimal_n} monotone={rep.monotone}")
        return 1

    return _point(label, run)


def clique_clique(points=((3, 3), (4, 3), (4, 4)), nmax=None, budget=DEFAULT_NODE_BUDGET, jobs=1, **_):
    return [
        _rpot_point(f"K{a} vs K{b}", complete_graph(a), complete_graph(b), predict_clique_clique(a, b),
                    nmax, budget, jobs)
        for a, b in points
    ]


def clique_path(points=((3, 6),), nmax=None, budget=DEFAULT_NODE_BUDGET, jobs=1, **_):
    return [
        _rpot_point(f"K{s} vs P{t}", complete_graph(s), path_graph(t), predict_clique_path(s, t),
                    nmax, budget, jobs)
        for s, t in points
    ]


def clique_star(points=((4, 4), (4, 7)), nmax=None, budget=DEFAULT_NODE_BUDGET, jobs=1, **_):
    return [
        _rpot_point(f"K{s} vs K1,{t - 1}", complete_graph(s), star_graph(t), predict_clique_star(s, t),
                    nmax, budget, jobs)
        for s, t in points
    ]


def clique_tree(s=3, t=8, nmax=None, budget=DEFAULT_NODE_BUDGET, jobs=1, **_):
    out = []
    for i, tree in enumerate(enumerate_trees(t)):
        expected = predict_clique_tree(s, tree)
        if expected is None:
            out.append(PointResult(f"K{s} vs T{t}:{i}", True, 0, ["not covered by predictor"]))
            continue
        out.append(_rpot_point(f"K{s} vs T{t}:{i}", complete_graph(s), tree, expected, nmax, budget, jobs))
    return out


def sauer_spencer(nmax=6, **_):
    out = []
    for n in range(1, nmax + 1):
        graphs = list(enumerate_graphs(n))

        def run(fail, graphs=graphs):
            checked = 0
            for g in graphs:
                for h in graphs:
                    if sauer_spencer_condition(g, h):
                        checked += 1
                        if exact_pack(g, h) is None:
                            fail.append(f"no packing: host {sorted(g.edges)}, guest {sorted(h.edges)}")
            return checked

        out.append(_point(f"n={n}", run))
    return out


def forest_packing(nmax=7, **_):
    out = []
    for n in range(1, nmax + 1):
        graphs = list(enumerate_graphs(n))
        forests = [f for f in graphs if is_forest(f)]

        def run(fail, graphs=graphs, forests=forests):
            checked = 0
            for f in forests:
                for g in graphs:
                    if not forest_condition(g, f):
                        continue
                    checked += 1
                    p = exact_pack(g, f)
                    if p is None or not p.is_valid(g, f):
                        fail.append(f"exact_pack failed: host {sorted(g.edges)}, forest {sorted(f.edges)}")
                    q = link_swap_pack(g, f)
                    if not q.is_valid(g, f):
                        fail.append(f"link_swap_pack invalid: host {sorted(g.edges)}, forest {sorted(f.edges)}")
            return checked

        out.append(_point(f"n={n}", run))
    return out


def tree_packing(nmax=7, **_):
    out = []
    for n in range(2, nmax + 1):
        graphs = list(enumerate_graphs(n))
        trees = list(enumerate_trees(n))

        def run(fail, graphs=graphs, trees=trees, n=n):
            checked = 0
            for t in trees:
                leaves = forest_metrics(t).leaves
                for g in graphs:
                    checked += 1
                    tree_form = 3 * g.max_degree + leaves - 2 < n
                    if forest_condition(g, t) != tree_form:
                        fail.append(f"condition mismatch: host {sorted(g.edges)}, tree {sorted(t.edges)}")
                    if tree_form and exact_pack(g, t) is None:
                        fail.append(f"no packing: host {sorted(g.edges)}, tree {sorted(t.edges)}")
            return checked

        out.append(_point(f"n={n}", run))
    return out


def tightness(star_orders=(4, 6, 8), spiders=((2, 2), (2, 3), (3, 2)), **_):
    out = []
    for n in star_orders:
        def run(fail, n=n):
            g, t = tightness_star_instance(n)
            if forest_condition(g, t):
                fail.append("forest condition unexpectedly holds")
            if 3 * g.max_degree + forest_metrics(t).leaves - 2 != n:
                fail.append("3Δ+ℓ-2 differs from n")
            if exact_pack(g, t) is not None:
                fail.append("instance packs")
            return 1

        out.append(_point(f"star n={n}", run))
    for m, r in spiders:
        def run(fail, m=m, r=r):
            g, t = tightness_spider_instance(m, r)
            lhs, rhs = spider_gap(m, r)
            if lhs != rhs:
                fail.append(f"3Δ+ℓ-2 = {lhs} but (1+2/m)n-4 = {rhs}")
            if exact_pack(g, t) is not None:
                fail.append("instance packs")
            return 1

        out.append(_point(f"spider m={m} r={r}", run))
    return out


def join_witness(smax=5, tmax=6, budget=DEFAULT_NODE_BUDGET, **_):
    out = []
    for s in range(2, smax + 1):
        for t in range(2, tmax + 1):
            def run(fail, s=s, t=t):
                seq = join_witness_sequence(s, t)
                if count_realizations(seq, budget) != 1:
                    fail.append(f"{seq} has more than one realization")
                lower_bound_witness(s, t, budget=budget)
                return 1

            out.append(_point(f"s={s} t={t}", run))
    return out


def _sequences(nmax, nmin=1):
    for n in range(nmin, nmax + 1):
        for s in enumerate_graphic_sequences(n):
            yield n, s


def clique_sufficiency(nmax=8, kmax=4, budget=DEFAULT_NODE_BUDGET, **_):
    out = []
    for k in range(1, kmax + 1):
        def run(fail, k=k):
            checked = 0
            for _, s in _sequences(nmax, k):
                if clique_sufficient(s, k):
                    checked += 1
                    if potentially(s, complete_graph(k), fast=False, budget=budget) is None:
                        fail.append(f"{s} not potentially K{k}")
            return checked

        out.append(_point(f"k={k}", run))
    return out


def tree_sufficiency(nmax=7, tmax=6, budget=DEFAULT_NODE_BUDGET, **_):
    out = []
    for t in range(1, tmax + 1):
        trees = list(enumerate_trees(t))

        def run(fail, t=t, trees=trees):
            checked = 0
            for _, s in _sequences(nmax, t):
                if tree_sufficient(s, t):
                    for tree in trees:
                        checked += 1
                        if potentially(s, tree, fast=False, budget=budget) is None:
                            fail.append(f"{s} not potentially {sorted(tree.edges)}")
            return checked

        out.append(_point(f"t={t}", run))
    return out


def star_exactness(nmax=7, budget=DEFAULT_NODE_BUDGET, **_):
    out = []
    for n in range(1, nmax + 1):
        def run(fail, n=n):
            checked = 0
            for s in enumerate_graphic_sequences(n):
                for t in range(1, n + 1):
                    checked += 1
                    exact = potentially(s, star_graph(t), fast=False, budget=budget) is not None
                    if exact != star_potential(s, t):
                        fail.append(f"{s}, star order {t}: exact={exact}")
            return checked

        out.append(_point(f"length={n}", run))
    return out


def top_degree_patterns() -> dict[str, Graph]:
    return {"K3": complete_graph(3), "P4": path_graph(4), "K1,3": star_graph(4), "C4": cycle_graph(4)}


def top_degree(nmax=7, budget=DEFAULT_NODE_BUDGET, **_):
    out = []
    for name, h in top_degree_patterns().items():
        def run(fail, h=h, name=name):
            checked = 0
            for _, s in _sequences(nmax, h.n):
                checked += 1
                exact = potentially(s, h, fast=False, budget=budget) is not None
                w = top_degree_embedding(s, h, budget=budget)
                if exact != (w is not None):
                    fail.append(f"{s}, {name}: exact={exact}, top-degree={w is not None}")
                elif w is not None and not w.check(s, h):
                    fail.append(f"{s}, {name}: malformed witness")
            return checked

        out.append(_point(name, run))
    return out


def forced_degree_bounds(s=4, t=6, budget=DEFAULT_NODE_BUDGET, **_):
    n = t + s - 2
    out = []
    clique = complete_graph(s)
    for i, tree in enumerate(enumerate_trees(t)):
        def run(fail, tree=tree):
            checked = 0
            for seq in enumerate_graphic_sequences(n):
                if potentially(seq, tree, fast=False, budget=budget) is not None:
                    continue
                if potentially(complement_sequence(seq), clique, fast=False, budget=budget) is not None:
                    continue
                checked += 1
                if not degree_bounds(seq, s, t):
                    fail.append(str(seq))
            return checked

        out.append(_point(f"T{t}:{i}", run))
    return out


SUITES: dict[str, Callable[..., list[PointResult]]] = {
    "clique-clique": clique_clique,
    "clique-path": clique_path,
    "clique-star": clique_star,
    "clique-tree": clique_tree,
    "sauer-spencer": sauer_spencer,
    "forest-packing": forest_packing,
    "tree-packing": tree_packing,
    "tightness": tightness,
    "join-witness": join_witness,
    "clique-sufficient": clique_sufficiency,
    "tree-sufficient": tree_sufficiency,
    "star-exact": star_exactness,
    "top-degree": top_degree,
    "degree-bounds": forced_degree_bounds,
}


def verify_theorem(suite: str, **params) -> SuiteReport:
    """Run a named suite; unknown keyword parameters are ignored by suites that do not use them."""
    try:
        fn = SUITES[suite]
    except KeyError:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    return SuiteReport(suite, fn(**params))
