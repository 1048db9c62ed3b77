"""Isomorphism-free generation of small graph classes.

* free trees: level-sequence generation (Wright, Richmond, Odlyzko, McKay);
* unicyclic / bicyclic: add one non-edge to every tree / unicyclic graph,
  keep one graph per canonical key;
* connected: vertex-by-vertex canonical augmentation.

Every generator returns a tuple of graphs in canonical labeling, sorted by
canonical key, so output is deterministic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .canon import canonical_form, canonical_key, canonical_labeling
from .graph import (
    Graph,
    _bits,
    _unchecked,
    all_blocks_complete,
    delete_vertex,
    girth,
    is_bipartite,
)
from .graph6 import emit_graph6, read_graph6, write_graph6

CLASSES = ("trees", "unicyclic", "bicyclic", "connected", "cyclic")
DEFAULT_MAX_CONNECTED_N = 9
GUARD_ENV = "SZEGED_MAX_CONNECTED_N"


class GuardError(RuntimeError):
    """Requested enumeration is above the configured resource guard."""


def connected_guard() -> int:
    return int(os.environ.get(GUARD_ENV, DEFAULT_MAX_CONNECTED_N))


# ---------------------------------------------------------------- free trees

def _next_rooted_tree(pred: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    if p is None:
        p = len(pred) - 1
        while pred[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while pred[q] != pred[p] - 1:
        q -= 1
    result = list(pred)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split_tree(layout: list[int]) -> tuple[list[int], list[int]]:
    one_found = False
    m = None
    for i, depth in enumerate(layout):
        if depth == 1:
            if one_found:
                m = i
                break
            one_found = True
    if m is None:
        m = len(layout)
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return left, rest


def _next_tree(candidate: list[int]) -> Optional[list[int]]:
    left, rest = _split_tree(candidate)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    new = _next_rooted_tree(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_tree(new)
        suffix = list(range(1, max(new_left) + 2))
        new[-len(suffix):] = suffix
    return new


def level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences, one per free tree on ``n >= 3`` vertices."""
    layout: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        if layout is not None:
            yield layout
            layout = _next_rooted_tree(layout)


def tree_from_levels(levels: Sequence[int]) -> Graph:
    n = len(levels)
    adj = [0] * n
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth:
            p = last_at_depth[depth - 1]
            adj[i] |= 1 << p
            adj[p] |= 1 << i
        last_at_depth[depth] = i
    return _unchecked(n, adj)


def _sorted_canonical(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    found: dict[bytes, Graph] = {}
    for g in graphs:
        h, key = canonical_form(g)
        found.setdefault(key, h)
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def gen_trees(n: int) -> tuple[Graph, ...]:
    """One tree per isomorphism class on ``n`` vertices (1 <= n <= 16)."""
    if not 1 <= n <= 16:
        raise ValueError("tree generation supports 1 <= n <= 16")
    if n <= 2:
        return (_unchecked(n, [0] if n == 1 else [2, 1]),)
    return _sorted_canonical(tree_from_levels(seq) for seq in level_sequences(n))


# ------------------------------------------------- one-more-edge extensions

def _pair_representatives(g: Graph, gens: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """One non-edge per orbit of the group generated by ``gens``."""
    n = g.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
    index = {p: k for k, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            other = index[(a, b) if a < b else (b, a)]
            ra, rb = find(k), find(other)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [p for k, p in enumerate(pairs) if find(k) == k]


def _add_one_edge(parents: Iterable[Graph]) -> tuple[Graph, ...]:
    def candidates() -> Iterator[Graph]:
        for g in parents:
            _, gens = canonical_labeling(g)
            for i, j in _pair_representatives(g, gens):
                adj = list(g.adj)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                yield _unchecked(g.n, adj)

    return _sorted_canonical(candidates())


@lru_cache(maxsize=None)
def gen_unicyclic(n: int) -> tuple[Graph, ...]:
    """Connected graphs with ``m = n`` (n >= 3)."""
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    return _add_one_edge(gen_trees(n))


@lru_cache(maxsize=None)
def gen_bicyclic(n: int) -> tuple[Graph, ...]:
    """Connected graphs with ``m = n + 1`` (n >= 4)."""
    if n < 4:
        raise ValueError("bicyclic graphs need n >= 4")
    return _add_one_edge(gen_unicyclic(n))


# ------------------------------------------------ canonical augmentation

def _subset_representatives(k: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Smallest member of each orbit of non-empty subsets of ``range(k)``."""
    if not gens:
        return list(range(1, 1 << k))
    subsets = np.arange(1 << k, dtype=np.int64)
    images = []
    for perm in gens:
        img = np.zeros_like(subsets)
        for i in range(k):
            img |= ((subsets >> i) & 1) << perm[i]
        images.append(img)
    rep = subsets.copy()
    while True:
        new = rep
        for img in images:
            new = np.minimum(new, new[img])
        if np.array_equal(new, rep):
            break
        rep = new
    return np.nonzero(rep == subsets)[0][1:].tolist()


def _non_cut(adj: Sequence[int], full: int, u: int) -> bool:
    rest = full & ~(1 << u)
    start = rest & -rest
    seen = frontier = start
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            nxt |= adj[w]
        frontier = nxt & rest & ~seen
        seen |= frontier
    return seen == rest


def _augment(parent: Graph, parent_key: bytes) -> dict[bytes, Graph]:
    """Children of ``parent`` (one new vertex) whose canonical deletion gives back ``parent``.

    The canonical deletion vertex of a graph is, among its non-cut vertices
    of minimum degree, those with the largest neighbour-degree sum, and of
    those the one placed last by the canonical labeling.
    """
    k = parent.n
    v = k
    full = (1 << (k + 1)) - 1
    _, gens = canonical_labeling(parent)
    pdeg = [row.bit_count() for row in parent.adj]
    out: dict[bytes, Graph] = {}
    for s in _subset_representatives(k, [g for g in gens]):
        d = s.bit_count()
        adj = list(parent.adj)
        for u in _bits(s):
            adj[u] |= 1 << v
        adj.append(s)
        deg = [pdeg[u] + ((s >> u) & 1) for u in range(k)]
        deg.append(d)
        reject = False
        for u in range(k):
            if deg[u] < d and (deg[u] == 1 or _non_cut(adj, full, u)):
                reject = True
                break
        if reject:
            continue
        fv = sum(deg[u] for u in _bits(s))
        ties = [v]
        for u in range(k):
            if deg[u] != d:
                continue
            fu = sum(deg[w] for w in _bits(adj[u]))
            if fu < fv:
                continue
            if not (d == 1 or _non_cut(adj, full, u)):
                continue
            if fu > fv:
                reject = True
                break
            ties.append(u)
        if reject:
            continue
        g = _unchecked(k + 1, adj)
        if len(ties) > 1:
            order, ggens = canonical_labeling(g)
            tie_set = set(ties)
            c = next(u for u in reversed(order) if u in tie_set)
            if c != v and not _same_orbit(k + 1, ggens, c, v):
                if canonical_key(delete_vertex(g, c)) != parent_key:
                    continue
        h, key = canonical_form(g)
        out.setdefault(key, h)
    return out


def _same_orbit(n: int, gens: Sequence[Sequence[int]], a: int, b: int) -> bool:
    from .canon import orbits

    rep = orbits(n, gens)
    return rep[a] == rep[b]


def _augment_batch(batch: list[tuple[Graph, bytes]]) -> dict[bytes, Graph]:
    merged: dict[bytes, Graph] = {}
    for parent, key in batch:
        merged.update(_augment(parent, key))
    return merged


def _next_level(level: Sequence[Graph], threads: int) -> tuple[Graph, ...]:
    work = [(g, emit_graph6(g).encode("ascii")) for g in level]
    merged: dict[bytes, Graph] = {}
    if threads > 1 and len(work) > 64:
        from multiprocessing import Pool

        size = max(1, len(work) // (threads * 8))
        batches = [work[i:i + size] for i in range(0, len(work), size)]
        with Pool(threads) as pool:
            for part in pool.imap(_augment_batch, batches):
                merged.update(part)
    else:
        merged = _augment_batch(work)
    return tuple(merged[k] for k in sorted(merged))


@lru_cache(maxsize=None)
def _connected_cached(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (_unchecked(1, [0]),)
    return _next_level(_connected_cached(n - 1), 1)


def gen_connected(n: int, override_guard: bool = False, threads: int = 1) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices, one per isomorphism class.

    Levels are cached in-process. ``n`` above the guard (default 9, env
    ``SZEGED_MAX_CONNECTED_N``) needs ``override_guard``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > connected_guard() and not override_guard:
        raise GuardError(f"connected enumeration at n={n} exceeds the guard {connected_guard()}")
    if threads > 1 and n >= 2 and _connected_cached.cache_info().currsize < n:
        return _next_level(gen_connected(n - 1, True, threads), threads)
    return _connected_cached(n)


# ---------------------------------------------------------------- filters

@dataclass(frozen=True)
class ClassSpec:
    """A graph class plus conjunctive filters.

    ``cls`` is one of ``trees``, ``unicyclic``, ``bicyclic``, ``connected``
    or ``cyclic`` (connected with at least one cycle).
    """

    cls: str
    n: int
    min_girth: Optional[int] = None
    max_girth: Optional[int] = None
    girth_parity: Optional[int] = None
    bipartite: Optional[bool] = None
    non_complete_block: Optional[bool] = None
    min_edges_minus_n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {CLASSES}")

    def accepts(self, g: Graph) -> bool:
        if self.min_edges_minus_n is not None and g.m - g.n < self.min_edges_minus_n:
            return False
        if self.cls == "cyclic" and g.m < g.n:
            return False
        if self.bipartite is not None and is_bipartite(g) != self.bipartite:
            return False
        if self.min_girth is not None or self.max_girth is not None or self.girth_parity is not None:
            r = girth(g)
            if r is None:
                return False
            if self.min_girth is not None and r < self.min_girth:
                return False
            if self.max_girth is not None and r > self.max_girth:
                return False
            if self.girth_parity is not None and r % 2 != self.girth_parity:
                return False
        if self.non_complete_block is not None and all_blocks_complete(g) == self.non_complete_block:
            return False
        return True


def filter_class(spec: ClassSpec, stream: Iterable[Graph]) -> Iterator[Graph]:
    """Lazily keep the graphs of ``stream`` that satisfy every filter of ``spec``."""
    return (g for g in stream if spec.accepts(g))


def generate(cls: str, n: int, override_guard: bool = False, threads: int = 1) -> tuple[Graph, ...]:
    if cls == "trees":
        return gen_trees(n)
    if cls == "unicyclic":
        return gen_unicyclic(n)
    if cls == "bicyclic":
        return gen_bicyclic(n)
    if cls in ("connected", "cyclic"):
        graphs = gen_connected(n, override_guard, threads)
        if cls == "cyclic":
            return tuple(g for g in graphs if g.m >= g.n)
        return graphs
    raise ValueError(f"unknown class {cls!r}")


def enumerate_class(spec: ClassSpec, override_guard: bool = False, threads: int = 1,
                    cache_dir: Optional[os.PathLike] = None) -> list[Graph]:
    base: Sequence[Graph]
    if cache_dir is not None:
        base = load_or_generate(spec.cls, spec.n, cache_dir, override_guard, threads)
    else:
        base = generate(spec.cls, spec.n, override_guard, threads)
    return list(filter_class(spec, base))


# ---------------------------------------------------------------- corpora

def corpus_path(cache_dir: os.PathLike, cls: str, n: int) -> Path:
    return Path(cache_dir) / f"{cls}_{n}.g6"


def save_corpus(path: os.PathLike, graphs: Iterable[Graph]) -> int:
    return write_graph6(path, graphs)


def load_corpus(path: os.PathLike) -> tuple[Graph, ...]:
    with open(path, encoding="ascii") as fh:
        return tuple(read_graph6(fh))


def load_or_generate(cls: str, n: int, cache_dir: os.PathLike, override_guard: bool = False,
                     threads: int = 1) -> tuple[Graph, ...]:
    path = corpus_path(cache_dir, cls, n)
    if path.exists():
        return load_corpus(path)
    graphs = generate(cls, n, override_guard, threads)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    save_corpus(path, graphs)
    return graphs
