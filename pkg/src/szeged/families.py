"""Named graph families, their closed-form Wiener/Szeged values, and the
extremal bounds they are compared against.

Two ways of hanging a path on an anchor vertex are kept apart:
``coalesce`` identifies an end-vertex of the path with the anchor, while
``attach_path`` adds ``k`` new vertices and joins the first to the anchor
by a new edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, coalesce, from_edges, is_connected

# ------------------------------------------------------------ basic shapes


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def attach_path(g: Graph, anchor: int, k: int) -> Graph:
    """Add ``k`` new vertices in a chain, the first joined to ``anchor``."""
    if k == 0:
        return g
    n = g.n
    edges = g.edges() + [(anchor, n)] + [(n + i, n + i + 1) for i in range(k - 1)]
    return from_edges(n + k, edges)


def lollipop(n: int, r: int) -> Graph:
    """``C_r`` (vertices ``0..r-1``) with ``P_{n-r+1}`` identified at vertex 0."""
    if not 3 <= r <= n:
        raise ValueError(f"lollipop needs 3 <= r <= n, got n={n}, r={r}")
    return coalesce(cycle(r), 0, path(n - r + 1), 0)


# ------------------------------------------------------------ rooted trees


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int

    def __post_init__(self) -> None:
        t = self.tree
        if t.n < 1 or t.m != t.n - 1 or not is_connected(t):
            raise ValueError("rooted tree must be a tree")
        if not 0 <= self.root < t.n:
            raise ValueError("root out of range")

    @property
    def size(self) -> int:
        """Number of non-root vertices."""
        return self.tree.n - 1


def rooted_path(k: int) -> RootedTree:
    """``P_{k+1}`` rooted at an end-vertex."""
    return RootedTree(path(k + 1), 0)


def rooted_star(k: int) -> RootedTree:
    """``S_{k+1}`` rooted at its centre."""
    return RootedTree(star(k + 1), 0)


def cycle_with_rooted_trees(r: int, trees: Sequence[RootedTree]) -> Graph:
    """``C_r(T_1, ..., T_r)``: the root of ``T_i`` identified with cycle vertex ``i-1``."""
    if r < 3:
        raise ValueError("cycle needs r >= 3")
    if len(trees) != r:
        raise ValueError(f"expected {r} rooted trees, got {len(trees)}")
    g = cycle(r)
    for i, t in enumerate(trees):
        g = coalesce(g, i, t.tree, t.root)
    return g


def cr_paths(r: int, sizes: Sequence[int]) -> Graph:
    """``C_r(P_{n_1+1}, ..., P_{n_r+1})`` for ``sizes = [n_1, ..., n_r]``."""
    return cycle_with_rooted_trees(r, [rooted_path(k) for k in sizes])


def cr_stars(r: int, sizes: Sequence[int]) -> Graph:
    return cycle_with_rooted_trees(r, [rooted_star(k) for k in sizes])


def spider(n: int, legs: Sequence[int], root: str = "tip") -> RootedTree:
    """Tree with one centre (vertex 0) and legs of the given lengths.

    Legs are laid out longest first. ``root="tip"`` roots at the end of the
    first longest leg (the non-unit leaf used throughout the extremal
    arguments); ``root="center"`` roots at vertex 0.
    """
    if any(k < 1 for k in legs):
        raise ValueError("spider legs must be positive")
    if sum(legs) != n - 1:
        raise ValueError(f"spider legs sum to {sum(legs)}, expected n-1={n - 1}")
    edges = []
    nxt = 1
    tip = 0
    for i, k in enumerate(sorted(legs, reverse=True)):
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        if i == 0:
            tip = prev
    g = from_edges(n, edges)
    if root == "tip":
        return RootedTree(g, tip)
    if root == "center":
        return RootedTree(g, 0)
    raise ValueError("root must be 'tip' or 'center'")


# ---------------------------------------------------- unicyclic named graphs


def h_graph(n: int, k: int) -> Graph:
    """The unicyclic graphs ``H_n^0 .. H_n^3`` (n >= 8).

    * ``k=0``: ``C_3`` with ``T_{n-2}(n-5, 1^2)`` hung at its tip;
    * ``k=1``: ``C_3`` with ``T_{n-2}(n-6, 2, 1)`` hung at its tip;
    * ``k=2``: ``C_4`` with ``T_{n-3}(n-6, 1^2)`` hung at its tip;
    * ``k=3``: ``C_3`` with a pendant edge at one vertex and
      ``T_{n-3}(n-6, 1^2)`` hung at its tip on another.
    """
    if n < 8:
        raise ValueError("H_n^k is defined here for n >= 8")
    if k == 0:
        t = spider(n - 2, [n - 5, 1, 1])
        return coalesce(cycle(3), 0, t.tree, t.root)
    if k == 1:
        t = spider(n - 2, [n - 6, 2, 1])
        return coalesce(cycle(3), 0, t.tree, t.root)
    if k == 2:
        t = spider(n - 3, [n - 6, 1, 1])
        return coalesce(cycle(4), 0, t.tree, t.root)
    if k == 3:
        t = spider(n - 3, [n - 6, 1, 1])
        return coalesce(lollipop(4, 3), 1, t.tree, t.root)
    raise ValueError("k must be 0, 1, 2 or 3")


# ----------------------------------------------------- bicyclic named graphs


def k4_minus() -> Graph:
    """``K_4`` minus the edge 2-3; vertices 0, 1 have degree 3."""
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def b1(n: int) -> Graph:
    """``B_n^{(1)}``: end-vertex of ``P_{n-3}`` identified with a degree-3 vertex of ``K_4^-``."""
    if n < 5:
        raise ValueError("B_n^(1) needs n >= 5")
    return coalesce(k4_minus(), 0, path(n - 3), 0)


def b_ns(n: int, s: int) -> Graph:
    """``B(n, s)``: paths of ``n-s-4`` and ``s`` new vertices attached to the two degree-2 vertices of ``K_4^-``."""
    if n < 4 or not 0 <= s <= (n - 4) // 2:
        raise ValueError(f"B(n, s) needs 0 <= s <= floor((n-4)/2), got n={n}, s={s}")
    g = attach_path(k4_minus(), 2, n - s - 4)
    return attach_path(g, 3, s)


def dumbbell(n: int, p: int, q: int) -> Graph:
    """``B_n^{p,q}``: ``C_p`` and ``C_q`` joined by a path of length ``n-p-q+1``."""
    if p < 3 or q < 3 or p + q > n:
        raise ValueError(f"dumbbell needs p, q >= 3 and p + q <= n, got n={n}, p={p}, q={q}")
    g = coalesce(cycle(p), 0, path(n - p - q + 2), 0)
    return coalesce(g, g.n - 1, cycle(q), 0)


def theta(k: int, l: int, t: int) -> Graph:
    """``B_{k,l,t}``: hubs 0 and 1 joined by internally disjoint paths of lengths k, l, t."""
    if not (1 <= k <= l <= t) or l < 2:
        raise ValueError(f"theta needs 1 <= k <= l <= t and l >= 2, got {k}, {l}, {t}")
    n = k + l + t - 1
    edges = []
    nxt = 2
    for length in (k, l, t):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edges(n, edges)


def a_nk(n: int, k: int, i: int) -> Graph:
    """``A_{n,k}^i``: the spider ``T_n(n-k-1, 1^k)`` plus ``i`` edges among its unit leaves.

    Vertex 0 is the centre, ``1..n-k-1`` the long leg (its tip,
    vertex ``n-k-1``, is the non-unit leaf), and the unit leaves follow.
    Added edges are the lexicographically first pairs of unit leaves.
    """
    long_leg = n - k - 1
    if k < 0 or long_leg < 1:
        raise ValueError(f"A_(n,k) needs n - k - 1 >= 1, got n={n}, k={k}")
    if not 0 <= i <= k * (k - 1) // 2:
        raise ValueError(f"i must lie in 0..C(k,2), got {i}")
    edges = [(j, j + 1) for j in range(long_leg)]
    leaves = list(range(long_leg + 1, n))
    edges += [(0, v) for v in leaves]
    edges += list(combinations(leaves, 2))[:i]
    return from_edges(n, edges)


def a_nk_tip(n: int, k: int) -> int:
    """The non-unit leaf of ``a_nk(n, k, i)``."""
    return n - k - 1


# ------------------------------------------------------------ closed forms


def closed_form_w_path(n: int) -> int:
    return (n - 1) * n * (n + 1) // 6


def closed_form_w_lollipop_even(n: int, r: int) -> int:
    """Wiener index of ``L_{n,r}`` for even ``r < n``."""
    if r % 2 or not 4 <= r < n:
        raise ValueError("closed form needs even r with 4 <= r < n")
    scaled = 4 * n**3 + (-6 * r * r + 12 * r - 4) * n + (5 * r**3 - 12 * r * r + 4 * r)
    assert scaled % 24 == 0
    return scaled // 24


def _check_bns(n: int, s: int) -> None:
    if n < 4 or not 0 <= s <= (n - 4) // 2:
        raise ValueError(f"B(n, s) needs 0 <= s <= floor((n-4)/2), got n={n}, s={s}")


def closed_form_w_bns(n: int, s: int) -> int:
    _check_bns(n, s)
    scaled = 4 * (n - 2) * (n - 1) * n + 12 * (s + 1) * (s + 2) + 12 * (n - s - 3) * (n - s - 2) + 24
    assert scaled % 24 == 0
    return scaled // 24


def closed_form_sz_bns(n: int, s: int) -> int:
    _check_bns(n, s)
    scaled = 4 * (n - 1) * n * (n + 1) + 24 * (n * s - s * s - 4 * s - 1)
    assert scaled % 24 == 0
    return scaled // 24


def closed_form_w_b1(n: int) -> int:
    """Shared value of ``W(B_n^{(1)})``, ``W(H_n^2)`` and ``W(H_n^3)``."""
    scaled = 4 * (n**3 - 19 * n + 54)
    assert scaled % 24 == 0
    return scaled // 24


closed_form_w_h23 = closed_form_w_b1


def max_w_odd_girth5(n: int) -> int:
    """Largest W over unicyclic graphs of odd girth >= 5 (attained by ``L_{n,5}``)."""
    return (n**3 - 25 * n + 90) // 6


def max_w_even_girth6(n: int) -> int:
    """Largest W over unicyclic graphs of even girth >= 6 (attained by ``L_{n,6}``)."""
    return (n**3 - 37 * n + 168) // 6


def transmission_bound(n: int) -> Fraction:
    """Upper bound on a vertex transmission when the diameter is at most ``n-3``."""
    return Fraction(n * n - n - 6, 2)


def theorem_bounds(n: int) -> dict[str, Fraction]:
    """Every extremal bound at order ``n`` as an exact rational, keyed by theorem id.

    Piecewise bounds (``thm1.5``, ``thm1.6``) take the branch for the parity of ``n``.
    """
    if n < 4:
        raise ValueError("bounds are stated for n >= 4")
    F = Fraction
    odd = n % 2 == 1
    return {
        "thm1.1": F(4 * n - 8),
        "thm1.2": F(2 * n - 5),
        "thm1.3": F(n * n + 4 * n - 6, 4),
        "thm1.4i": 1 + F(24 * (n - 2), n**3 - 13 * n + 36),
        "thm1.4ii": 1 + F(3 * (n * n + 4 * n - 6), 2 * (n**3 - 7 * n + 12)),
        "thm1.5": 2 - F(8, n * n + 7) if odd else F(2),
        "thm1.6": 2 + F(2, n * n - 1) if odd else F(2),
        "thm1.7i": 1 + F(24 * (n - 2), n**3 - 13 * n + 36),
        "thm1.7ii": 1 + F(6 * (2 * n - 5), n**3 - 25 * n + 90),
        "thm2.3": 1 + F(12, n**3 - 19 * n + 54),
        "thm2.4": 1 + F(24 * (n - 2), n**3 - 19 * n + 54),
    }


# --------------------------------------------------------------- FamilyId


@dataclass(frozen=True)
class FamilyId:
    """A named family member, e.g. ``FamilyId("lollipop", (10, 4))``.

    Text form is ``tag:param:param``; list-valued parameters are
    comma-separated, e.g. ``crpaths:3:4,2,1`` (the list gives the number
    of non-root vertices on each rooted path).
    """

    tag: str
    params: tuple

    def __str__(self) -> str:
        parts = [self.tag]
        for p in self.params:
            parts.append(",".join(map(str, p)) if isinstance(p, tuple) else str(p))
        return ":".join(parts)

    def build(self) -> Graph:
        spec = _FAMILIES.get(self.tag)
        if spec is None:
            raise ValueError(f"unknown family {self.tag!r}")
        return spec.build(*self.params)

    @property
    def n(self) -> int:
        return self.build().n


@dataclass(frozen=True)
class _Family:
    shape: str  # one char per parameter: 'i' int, 'l' int list
    build: Callable[..., Graph]


_FAMILIES: dict[str, _Family] = {
    "path": _Family("i", path),
    "cycle": _Family("i", cycle),
    "star": _Family("i", star),
    "complete": _Family("i", complete),
    "k4m": _Family("", k4_minus),
    "lollipop": _Family("ii", lollipop),
    "b1": _Family("i", b1),
    "bns": _Family("ii", b_ns),
    "h": _Family("ii", h_graph),
    "dumbbell": _Family("iii", dumbbell),
    "theta": _Family("iii", theta),
    "crpaths": _Family("il", cr_paths),
    "crstars": _Family("il", cr_stars),
    "spider": _Family("il", lambda n, legs: spider(n, legs).tree),
    "ank": _Family("iii", a_nk),
}


def parse_family(text: str) -> FamilyId:
    """Parse ``tag:p1:p2`` text into a validated ``FamilyId``."""
    tag, *raw = text.strip().split(":")
    spec = _FAMILIES.get(tag)
    if spec is None:
        raise ValueError(f"unknown family {tag!r}; known: {', '.join(sorted(_FAMILIES))}")
    if len(raw) != len(spec.shape):
        raise ValueError(f"{tag} takes {len(spec.shape)} parameter(s), got {len(raw)}")
    params: list = []
    try:
        for kind, value in zip(spec.shape, raw):
            if kind == "i":
                params.append(int(value))
            else:
                params.append(tuple(int(x) for x in value.split(",") if x != ""))
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    fid = FamilyId(tag, tuple(params))
    fid.build()
    return fid


def family_candidates(n: int, crpaths_max_r: int = 4) -> Iterator[FamilyId]:
    """Named family members on ``n`` vertices, in identification priority order.

    Specific families come before generic ones. ``crpaths`` only covers
    ``r <= crpaths_max_r`` and at least two non-trivial paths (one path is a
    lollipop); ``spider`` needs at least three legs; ``ank`` needs ``i >= 1``.
    """
    F = FamilyId
    if n >= 1:
        yield F("complete", (n,))
        yield F("path", (n,))
        if n >= 3:
            yield F("star", (n,))
            yield F("cycle", (n,))
    if n == 4:
        yield F("k4m", ())
    if n >= 8:
        for k in (3, 2, 1, 0):
            yield F("h", (n, k))
    if n >= 5:
        yield F("b1", (n,))
    for s in range(0, max(n - 3, 0) // 2 + 1):
        if n >= 4 and s <= (n - 4) // 2:
            yield F("bns", (n, s))
    for p in range(3, n + 1):
        for q in range(p, n + 1 - p):
            yield F("dumbbell", (n, p, q))
    for k in range(1, n + 2):
        for l in range(max(k, 2), n + 2):
            t = n + 1 - k - l
            if t >= l:
                yield F("theta", (k, l, t))
    for r in range(3, min(crpaths_max_r, n) + 1):
        for sizes in _compositions(n - r, r):
            if sum(1 for x in sizes if x) >= 2:
                yield F("crpaths", (r, tuple(sizes)))
    for r in range(3, n + 1):
        yield F("lollipop", (n, r))
    for legs in _partitions(n - 1):
        if len(legs) >= 3:
            yield F("spider", (n, tuple(legs)))
    for k in range(2, n - 1):
        for i in range(1, k * (k - 1) // 2 + 1):
            yield F("ank", (n, k, i))


def _compositions(total: int, parts: int) -> Iterator[list[int]]:
    if parts == 1:
        yield [total]
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield [first] + rest


def _partitions(total: int, largest: Optional[int] = None) -> Iterator[list[int]]:
    if largest is None:
        largest = total
    if total == 0:
        yield []
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield [first] + rest
