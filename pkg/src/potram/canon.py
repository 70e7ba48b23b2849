"""Canonical labeling of small graphs.

Equitable refinement of an ordered vertex partition, then individualization
of vertices in the first smallest non-singleton cell, keeping the largest
relabeled adjacency tuple over all leaves.  Twins (vertices whose
neighborhoods agree apart from each other) are interchangeable by an
automorphism, so only one per twin class is individualized.  Automorphisms
discovered at the leaves prune the root branch.  Meant for n <= ~12.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph


def _refine(cells: list[list[int]], masks: Sequence[int]) -> list[list[int]]:
    while True:
        cellmasks = []
        for cell in cells:
            cm = 0
            for v in cell:
                cm |= 1 << v
            cellmasks.append(cm)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                mv = masks[v]
                sig = tuple((mv & cm).bit_count() for cm in cellmasks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _certificate(order: Sequence[int], masks: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        mv = masks[v]
        c = 0
        while mv:
            low = mv & -mv
            c |= 1 << pos[low.bit_length() - 1]
            mv ^= low
        cert.append(c)
    return tuple(cert)


def _twin_reps(cell: list[int], masks: Sequence[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if masks[v] & ~(1 << r) == masks[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(masks: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(certificate, order)``.

    ``order[i]`` is the original vertex placed at canonical position ``i`` and
    ``certificate[i]`` is that vertex's adjacency bitmask in canonical labels.
    Two graphs are isomorphic iff their certificates are equal.
    """
    n = len(masks)
    if n == 0:
        return (), ()
    degrees = [m.bit_count() for m in masks]
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degrees[v], []).append(v)
    root = _refine([by_deg[d] for d in sorted(by_deg)], masks)

    best_cert: tuple[int, ...] | None = None
    best_order: tuple[int, ...] = ()
    # automorphisms found, as vertex permutations
    autos: list[list[int]] = []

    def leaf(order: tuple[int, ...]):
        nonlocal best_cert, best_order
        cert = _certificate(order, masks)
        if best_cert is None or cert > best_cert:
            best_cert, best_order = cert, order
        elif cert == best_cert:
            perm = [0] * n
            for a, b in zip(order, best_order):
                perm[a] = b
            autos.append(perm)

    def search(cells: list[list[int]]):
        cells = _refine(cells, masks)
        target = -1
        size = n + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = i, len(cell)
        if target < 0:
            leaf(tuple(c[0] for c in cells))
            return
        cell = cells[target]
        for v in _twin_reps(cell, masks):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    target = -1
    size = n + 1
    for i, cell in enumerate(root):
        if 1 < len(cell) < size:
            target, size = i, len(cell)
    if target < 0:
        leaf(tuple(c[0] for c in root))
    else:
        cell = root[target]
        tried: list[int] = []
        for v in _twin_reps(cell, masks):
            if tried and _in_orbit(v, tried, autos, n):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(root[:target] + [[v], rest] + root[target + 1:])
    assert best_cert is not None
    return best_cert, best_order


def _in_orbit(v: int, tried: list[int], autos: list[list[int]], n: int) -> bool:
    if not autos:
        return False
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for p in autos:
            w = p[u]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return any(t in seen for t in tried)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Certificate of ``g``; equal for isomorphic graphs and only for them."""
    return canonical_labeling(g.masks)[0]


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_masks(canonical_form(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a) == canonical_form(b)
