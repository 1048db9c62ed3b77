"""Canonical labeling by partition refinement plus individualization.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualize each vertex of the first smallest non-trivial
cell, recurse. Among the leaves the largest adjacency code wins. Twin
transpositions seed the automorphism group up front and every pair of
equal leaves contributes another automorphism; both prune sibling
branches lying in an explored orbit.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, _bits, _unchecked
from .graph6 import emit_graph6

CanonicalKey = bytes


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: Sequence[int], cells: list[list[int]], queue: list[int], n: int) -> list[list[int]]:
    while queue and len(cells) < n:
        splitter = queue.pop(0)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(buckets) == 1:
                new.append(cell)
                continue
            for k in sorted(buckets):
                frag = buckets[k]
                new.append(frag)
                queue.append(_mask(frag))
        cells = new
    return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for j in range(1, len(order)):
        row = 0
        for u in _bits(adj[order[j]]):
            p = pos[u]
            if p < j:
                row |= 1 << (j - 1 - p)
        code = (code << j) | row
    return code


def _twin_generators(adj: Sequence[int], colors: Sequence[int]) -> list[list[int]]:
    n = len(adj)
    gens = []
    groups: dict[tuple[int, int, int], list[int]] = {}
    for v in range(n):
        groups.setdefault((colors[v], 0, adj[v]), []).append(v)
        groups.setdefault((colors[v], 1, adj[v] | (1 << v)), []).append(v)
    for members in groups.values():
        first = members[0]
        for w in members[1:]:
            perm = list(range(n))
            perm[first], perm[w] = w, first
            gens.append(perm)
    return gens


class _Search:
    __slots__ = ("adj", "n", "gens", "best_code", "best_order", "first_code", "first_order")

    def __init__(self, adj: Sequence[int], n: int, gens: list[list[int]]):
        self.adj = adj
        self.n = n
        self.gens = gens
        self.best_code: Optional[int] = None
        self.best_order: list[int] = []
        self.first_code: Optional[int] = None
        self.first_order: list[int] = []

    def _automorphism(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        if any(perm[i] != i for i in range(self.n)):
            self.gens.append(perm)

    def leaf(self, order: list[int]) -> None:
        code = _code(self.adj, order)
        if self.first_code is None:
            self.first_code, self.first_order = code, order
            self.best_code, self.best_order = code, order
            return
        if code == self.first_code:
            self._automorphism(self.first_order, order)
        if code == self.best_code:
            if self.best_order is not self.first_order:
                self._automorphism(self.best_order, order)
        elif code > self.best_code:
            self.best_code, self.best_order = code, order

    def run(self, cells: list[list[int]], queue: list[int], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells, queue, self.n)
        if len(cells) == self.n:
            self.leaf([c[0] for c in cells])
            return
        ti, size = -1, self.n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                ti, size = i, len(c)
        target = cells[ti]
        explored: list[int] = []
        for v in target:
            if explored and self._equivalent(v, explored, target, prefix):
                continue
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            self.run(child, [1 << v], prefix + [v])
            explored.append(v)

    def _equivalent(self, v: int, explored: list[int], target: list[int], prefix: list[int]) -> bool:
        parent = {w: w for w in target}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.gens:
            if any(perm[p] != p for p in prefix):
                continue
            for w in target:
                a, b = find(w), find(perm[w])
                if a != b:
                    parent[a] = b
        root = find(v)
        return any(find(u) == root for u in explored)


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> tuple[list[int], list[list[int]]]:
    """Return ``(order, generators)``.

    ``order[i]`` is the vertex placed at canonical position ``i``;
    ``generators`` are automorphisms (``perm[v]`` is the image of ``v``)
    found during the search. They generate a subgroup of the automorphism
    group that is usually, but not provably, all of it.
    ``colors`` restricts to color-preserving relabelings; colors are
    compared by value, so equal color lists give comparable results.
    """
    n = g.n
    if n == 0:
        return [], []
    if colors is None:
        colors = [0] * n
    adj = g.adj
    cls: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        cls.setdefault((colors[v], adj[v].bit_count()), []).append(v)
    cells = [cls[k] for k in sorted(cls)]
    gens = _twin_generators(adj, colors)
    search = _Search(adj, n, gens)
    search.run(cells, [_mask(c) for c in cells], [])
    return search.best_order, search.gens


def canonical_form(g: Graph, colors: Optional[Sequence[int]] = None) -> tuple[Graph, CanonicalKey]:
    """The canonically relabeled graph and its key."""
    order, _ = canonical_labeling(g, colors)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    h = _unchecked(g.n, adj)
    key = emit_graph6(h).encode("ascii")
    if colors is not None:
        key += b"|" + ",".join(str(colors[v]) for v in order).encode("ascii")
    return h, key


def canonical_key(g: Graph, colors: Optional[Sequence[int]] = None) -> CanonicalKey:
    """Byte string equal for two graphs iff they are isomorphic."""
    return canonical_form(g, colors)[1]


def rooted_key(g: Graph, root: int) -> CanonicalKey:
    """Key of ``g`` with ``root`` distinguished from every other vertex."""
    colors = [1] * g.n
    colors[root] = 0
    return canonical_key(g, colors)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and canonical_key(g1) == canonical_key(g2)


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) of each vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]
