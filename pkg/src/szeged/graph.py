"""Compact simple graphs with bitset adjacency, plus the structural
primitives (distances, girth, blocks, bipartiteness, coalescence) the
rest of the package is built on.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff
``uv`` is an edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

MAX_N = 64


class NotConnectedError(ValueError):
    """Raised when an operation that needs a connected graph gets a disconnected one."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _build_bit_table(size: int) -> list[tuple[int, ...]]:
    table: list[tuple[int, ...]] = [()] * size
    for m in range(1, size):
        table[m] = table[m & (m - 1)] + ((m & -m).bit_length() - 1,)
    return table


_BIT_TABLE = _build_bit_table(1 << 16)


def _bits(mask: int) -> Sequence[int]:
    """Set bit positions of ``mask`` in increasing order."""
    if mask < 65536:
        return _BIT_TABLE[mask]
    return tuple(_iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"n={self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges.

    Duplicate pairs collapse; self-loops and out-of-range endpoints raise
    ``ValueError``.
    """
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n={n} outside 0..{MAX_N}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _unchecked(n: int, adj: Sequence[int]) -> Graph:
    # Skips symmetry validation; callers build adj symmetrically by construction.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or g.has_edge(u, v):
        raise ValueError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return _unchecked(g.n, adj)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return _unchecked(g.n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return _unchecked(g.n, adj)


def delete_vertex(g: Graph, u: int) -> Graph:
    """Remove ``u``; vertices above ``u`` shift down by one."""
    low = (1 << u) - 1
    adj = []
    for v in range(g.n):
        if v == u:
            continue
        row = g.adj[v]
        adj.append((row & low) | ((row >> (u + 1)) << u))
    return _unchecked(g.n - 1, adj)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        row = 0
        for u in _bits(g.adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        adj.append(row)
    return _unchecked(len(vertices), adj)


def component_mask(g: Graph, start: int = 0, within: Optional[int] = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``within``."""
    if within is None:
        within = (1 << g.n) - 1
    seen = frontier = 1 << start
    adj = g.adj
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return component_mask(g) == (1 << g.n) - 1


def is_cut_vertex(g: Graph, u: int) -> bool:
    rest = ((1 << g.n) - 1) & ~(1 << u)
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    return component_mask(g, start, rest) != rest


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs shortest-path distances of a connected graph (uint8)."""

    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self.d[ij])


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises ``NotConnectedError`` on disconnected input."""
    n, adj = g.n, g.adj
    full = (1 << n) - 1
    rows = []
    for s in range(n):
        row = [0] * n
        seen = frontier = 1 << s
        k = 0
        while frontier:
            k += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                row[v] = k
        if seen != full:
            raise NotConnectedError("graph is not connected")
        rows.append(row)
    d = np.array(rows, dtype=np.uint8).reshape(n, n)
    d.flags.writeable = False
    return DistanceMatrix(n, d)


def transmission(dm: DistanceMatrix, v: int) -> int:
    """Sum of distances from ``v`` to every vertex."""
    return int(dm.d[v].sum(dtype=np.int64))


def eta_profile(dm: DistanceMatrix, v: int) -> list[int]:
    """Entry ``i`` counts the vertices at distance exactly ``i`` from ``v``."""
    return np.bincount(dm.d[v]).tolist()


def diameter(dm: DistanceMatrix) -> int:
    return int(dm.d.max()) if dm.n else 0


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            for w in _bits(adj[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        for u in queue:
            for w in _bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def cyclomatic_number(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnectedError("cyclomatic number is defined here for connected graphs")
    return g.m - g.n + 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative DFS low-points."""
    if not is_connected(g):
        raise NotConnectedError("block decomposition needs a connected graph")
    n = g.n
    if n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset())
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    disc[0] = low[0] = timer
    stack = [(0, -1, iter(g.neighbors(0)))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                timer += 1
                disc[w] = low[w] = timer
                edge_stack.append((v, w))
                stack.append((w, v, iter(g.neighbors(w))))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != 0:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
    if root_children > 1:
        cuts.add(0)
    ordered = tuple(sorted(found, key=lambda s: sorted(s)))
    return BlockDecomposition(ordered, frozenset(cuts))


def all_blocks_complete(g: Graph) -> bool:
    """True iff every block induces a clique."""
    for block in blocks(g).blocks:
        mask = 0
        for v in block:
            mask |= 1 << v
        for v in block:
            if (g.adj[v] & mask) != mask & ~(1 << v):
                return False
    return True


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying ``v2`` with ``v1``.

    Vertices of ``g1`` keep their labels; the other vertices of ``g2``
    follow in increasing order of their old labels.
    """
    n1 = g1.n
    new = {}
    nxt = n1
    for u in range(g2.n):
        if u == v2:
            new[u] = v1
        else:
            new[u] = nxt
            nxt += 1
    if nxt > MAX_N:
        raise ValueError("coalescence exceeds the vertex cap")
    adj = list(g1.adj) + [0] * (g2.n - 1)
    for u in range(g2.n):
        row = 0
        for w in _bits(g2.adj[u]):
            row |= 1 << new[w]
        adj[new[u]] |= row
    return _unchecked(nxt, adj)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return _unchecked(g1.n + g2.n, list(g1.adj) + [row << shift for row in g2.adj])
