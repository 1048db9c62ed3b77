"""Exact Wiener, Szeged and revised Szeged indices.

The revised Szeged index is a quarter-integer, so it is carried as the
integer ``4 * Sz*`` and only turned into a ``Fraction`` at the edges of the
API. Ratios are ``fractions.Fraction`` (exact, always in lowest terms).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    girth,
    is_connected,
    transmission,
)

Rational = Fraction


class EdgeSplit(NamedTuple):
    n_u: int
    n_v: int
    n_0: int


def edge_split(dm: DistanceMatrix, u: int, v: int) -> EdgeSplit:
    """Counts of vertices strictly closer to ``u``, strictly closer to ``v``, and equidistant."""
    if dm.d[u, v] != 1:
        raise ValueError(f"({u}, {v}) is not an edge")
    du = dm.d[u].astype(np.int16)
    dv = dm.d[v].astype(np.int16)
    n_u = int((du < dv).sum())
    n_v = int((dv < du).sum())
    return EdgeSplit(n_u, n_v, dm.n - n_u - n_v)


def edge_split_arrays(g: Graph, dm: DistanceMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised ``(n_u, n_v, n_0)`` over ``g.edges()`` in order."""
    edges = g.edges()
    if not edges:
        z = np.zeros(0, dtype=np.int64)
        return z, z, z
    us, vs = np.array(edges, dtype=np.intp).T
    du = dm.d[us].astype(np.int16)
    dv = dm.d[vs].astype(np.int16)
    n_u = (du < dv).sum(axis=1, dtype=np.int64)
    n_v = (dv < du).sum(axis=1, dtype=np.int64)
    return n_u, n_v, dm.n - n_u - n_v


def wiener(dm: DistanceMatrix) -> int:
    """Sum of distances over unordered vertex pairs."""
    return int(dm.d.sum(dtype=np.int64)) // 2


def wiener_from_transmissions(dm: DistanceMatrix) -> int:
    total = sum(transmission(dm, v) for v in range(dm.n))
    assert total % 2 == 0
    return total // 2


def wiener_tree_edge_form(g: Graph) -> int:
    """Wiener index of a tree as the sum over edges of ``n_u * n_v``.

    Computed from subtree sizes alone, without a distance matrix.
    """
    if g.n == 0 or g.m != g.n - 1 or not is_connected(g):
        raise ValueError("edge-product form of the Wiener index requires a tree")
    parent = [-1] * g.n
    order = [0]
    seen = 1
    for v in order:
        for w in g.neighbors(v):
            if not (seen >> w) & 1:
                seen |= 1 << w
                parent[w] = v
                order.append(w)
    size = [1] * g.n
    total = 0
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
        total += size[v] * (g.n - size[v])
    return total


def szeged(g: Graph, dm: DistanceMatrix) -> int:
    n_u, n_v, _ = edge_split_arrays(g, dm)
    return int((n_u * n_v).sum())


def revised_szeged_x4(g: Graph, dm: DistanceMatrix) -> int:
    """``4 * Sz*``, i.e. the sum over edges of ``(2 n_u + n_0)(2 n_v + n_0)``."""
    n_u, n_v, n_0 = edge_split_arrays(g, dm)
    return int(((2 * n_u + n_0) * (2 * n_v + n_0)).sum())


def revised_szeged(g: Graph, dm: DistanceMatrix) -> Fraction:
    return Fraction(revised_szeged_x4(g, dm), 4)


def sz_minus_w(g: Graph, dm: DistanceMatrix) -> int:
    return szeged(g, dm) - wiener(dm)


def _check_ratio_domain(dm: DistanceMatrix) -> int:
    if dm.n < 2:
        raise ValueError("index ratios need at least two vertices")
    return wiener(dm)


def sz_over_w(g: Graph, dm: DistanceMatrix) -> Fraction:
    w = _check_ratio_domain(dm)
    return Fraction(szeged(g, dm), w)


def szstar_over_w(g: Graph, dm: DistanceMatrix) -> Fraction:
    w = _check_ratio_domain(dm)
    return Fraction(revised_szeged_x4(g, dm), 4 * w)


@dataclass(frozen=True)
class IndexProfile:
    """All indices of one connected graph, computed from a single distance matrix."""

    n: int
    m: int
    girth: Optional[int]
    wiener: int
    szeged: int
    szstar_x4: int

    @property
    def szstar(self) -> Fraction:
        return Fraction(self.szstar_x4, 4)

    @property
    def sz_minus_w(self) -> int:
        return self.szeged - self.wiener

    @property
    def szstar_minus_w(self) -> Fraction:
        return Fraction(self.szstar_x4 - 4 * self.wiener, 4)

    @property
    def sz_over_w(self) -> Fraction:
        if self.n < 2:
            raise ValueError("index ratios need at least two vertices")
        return Fraction(self.szeged, self.wiener)

    @property
    def szstar_over_w(self) -> Fraction:
        if self.n < 2:
            raise ValueError("index ratios need at least two vertices")
        return Fraction(self.szstar_x4, 4 * self.wiener)


def index_profile(g: Graph, dm: Optional[DistanceMatrix] = None) -> IndexProfile:
    if dm is None:
        dm = all_pairs_distances(g)
    n_u, n_v, n_0 = edge_split_arrays(g, dm)
    return IndexProfile(
        n=g.n,
        m=g.m,
        girth=girth(g),
        wiener=wiener(dm),
        szeged=int((n_u * n_v).sum()),
        szstar_x4=int(((2 * n_u + n_0) * (2 * n_v + n_0)).sum()),
    )
