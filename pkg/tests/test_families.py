from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from _oracles import nx_indices, nx_ratio, to_nx
from szeged import families as fam
from szeged.canon import canonical_key, is_isomorphic
from szeged.graph import (
    all_pairs_distances,
    cyclomatic_number,
    diameter,
    girth,
    is_connected,
    transmission,
)


def W(g) -> int:
    return nx.wiener_index(to_nx(g))


# ------------------------------------------------------------ basic shapes


def test_basic_shapes():
    assert W(fam.path(5)) == 20
    assert all(W(fam.path(n)) == fam.closed_form_w_path(n) for n in range(1, 21))
    assert W(fam.cycle(4)) == 8
    assert all(W(fam.cycle(r)) == r ** 3 // 8 for r in range(4, 21, 2))
    assert all(W(fam.star(n)) == (n - 1) ** 2 for n in range(1, 15))
    for bad in (lambda: fam.path(0), lambda: fam.cycle(2), lambda: fam.star(0), lambda: fam.complete(0)):
        with pytest.raises(ValueError):
            bad()


def test_lollipop():
    assert W(fam.lollipop(6, 3)) == 31
    assert W(fam.lollipop(8, 6)) == 64 == W(fam.lollipop(8, 8)) == W(fam.cycle(8))
    assert fam.lollipop(7, 7) == fam.cycle(7)
    for n in range(3, 12):
        for r in range(3, n + 1):
            g = fam.lollipop(n, r)
            assert g.n == n and cyclomatic_number(g) == 1 and girth(g) == r
    with pytest.raises(ValueError):
        fam.lollipop(5, 6)


def test_cycle_with_rooted_trees():
    g = fam.cr_paths(3, [3, 1, 0])
    assert g.n == 7
    assert W(g) == 48  # by networkx on the 7-vertex graph
    assert W(fam.cr_paths(3, [5, 2, 1])) == 184
    assert W(fam.cr_paths(3, [4, 2, 1])) == 135
    assert W(fam.cr_paths(4, [5, 0, 1, 0])) == 146
    with pytest.raises(ValueError):
        fam.cr_paths(3, [1, 1])
    with pytest.raises(ValueError):
        fam.cycle_with_rooted_trees(3, [fam.rooted_path(1)] * 2)


def test_cr_stars_and_paths_agree_on_small_trees():
    # one non-root vertex is both a path and a star
    assert fam.cr_stars(4, [1, 0, 1, 1]) == fam.cr_paths(4, [1, 0, 1, 1])
    assert not is_isomorphic(fam.cr_stars(3, [3, 0, 0]), fam.cr_paths(3, [3, 0, 0]))


def test_spider():
    t = fam.spider(8, [3, 3, 1])
    assert W(t.tree) == 75
    assert W(fam.spider(5, [2, 1, 1]).tree) == 18
    assert t.tree.degree(0) == 3 and t.tree.degree(t.root) == 1
    assert fam.spider(8, [3, 3, 1], root="center").root == 0
    with pytest.raises(ValueError):
        fam.spider(8, [3, 3])
    with pytest.raises(ValueError):
        fam.spider(8, [4, 3, 0])


def test_rooted_tree_validation():
    with pytest.raises(ValueError):
        fam.RootedTree(fam.cycle(3), 0)


# ------------------------------------------------------------ H graphs


@pytest.mark.parametrize("n", range(8, 21))
def test_h_graphs(n):
    for k in range(4):
        g = fam.h_graph(n, k)
        assert g.n == n and cyclomatic_number(g) == 1 and is_connected(g)
    assert W(fam.h_graph(n, 2)) == W(fam.h_graph(n, 3)) == (n ** 3 - 19 * n + 54) // 6
    assert girth(fam.h_graph(n, 2)) == 4 and girth(fam.h_graph(n, 0)) == 3


def test_h_graph_values():
    assert W(fam.h_graph(10, 2)) == 144
    assert W(fam.h_graph(11, 2)) == W(fam.cr_paths(3, [5, 3, 0])) == 196
    with pytest.raises(ValueError):
        fam.h_graph(7, 0)
    with pytest.raises(ValueError):
        fam.h_graph(10, 4)


def test_h_attachment_vertex_immaterial():
    # hanging the spider at any triangle vertex gives the same graph
    for n in (9, 12):
        t = fam.spider(n - 2, [n - 5, 1, 1])
        keys = {canonical_key(fam.coalesce(fam.cycle(3), v, t.tree, t.root)) for v in range(3)}
        assert keys == {canonical_key(fam.h_graph(n, 0))}


# ------------------------------------------------------------ bicyclic


def test_bicyclic_constructors():
    assert W(fam.b1(5)) == 14 and W(fam.b1(6)) == 26
    assert W(fam.b_ns(6, 1)) == 27 == W(fam.dumbbell(6, 3, 3))
    assert W(fam.b_ns(8, 2)) == 69 == W(fam.b1(8))
    assert W(fam.b_ns(6, 0)) == 28
    assert nx_indices(fam.b_ns(5, 0))[1] == 19
    for n in range(5, 15):
        assert cyclomatic_number(fam.b1(n)) == 2
        for s in range((n - 4) // 2 + 1):
            assert fam.b_ns(n, s).n == n and cyclomatic_number(fam.b_ns(n, s)) == 2
    g = fam.theta(1, 2, 4)
    assert g.n == 6 and cyclomatic_number(g) == 2


@pytest.mark.parametrize("call", [
    lambda: fam.b1(4), lambda: fam.b_ns(8, 3), lambda: fam.b_ns(8, -1), lambda: fam.dumbbell(5, 3, 3),
    lambda: fam.dumbbell(8, 2, 3), lambda: fam.theta(1, 1, 3), lambda: fam.theta(3, 2, 2),
])
def test_bicyclic_errors(call):
    with pytest.raises(ValueError):
        call()


def test_theta_hubs_and_paths():
    g = fam.theta(2, 3, 4)
    h = to_nx(g)
    lengths = sorted(len(p) - 1 for p in nx.all_simple_paths(h, 0, 1))
    assert lengths == [2, 3, 4]


# ------------------------------------------------------------ A_{n,k}^i


def test_a_nk():
    for n in range(5, 12):
        for k in range(1, n - 1):
            g = fam.a_nk(n, k, 0)
            legs = [n - k - 1] + [1] * k
            assert is_isomorphic(g, fam.spider(n, legs).tree if k >= 2 else fam.path(n))
    for n in range(5, 12):
        for i in range(4):
            g = fam.a_nk(n, 3, i)
            dm = all_pairs_distances(g)
            assert diameter(dm) == n - 3
            assert transmission(dm, fam.a_nk_tip(n, 3)) == fam.transmission_bound(n)
    with pytest.raises(ValueError):
        fam.a_nk(8, 4, 7)
    with pytest.raises(ValueError):
        fam.a_nk(5, 4, 0)


def test_a_n4_literal_reading():
    # A_{n,4} = T_n(n-5, 1^4) has diameter n-4 and its tip falls short of the bound
    g = fam.a_nk(8, 4, 0)
    dm = all_pairs_distances(g)
    assert diameter(dm) == 8 - 4
    assert transmission(dm, fam.a_nk_tip(8, 4)) == 22 < fam.transmission_bound(8) == 25


# ------------------------------------------------------------ closed forms


def test_closed_form_examples():
    assert fam.closed_form_w_lollipop_even(8, 6) == 64
    for n in range(5, 21):
        assert fam.closed_form_w_lollipop_even(n, 4) == (n ** 3 - 13 * n + 36) // 6
        assert fam.closed_form_w_bns(n, 0) == (n ** 3 - 13 * n + 30) // 6
        assert fam.closed_form_sz_bns(n, 0) == (n ** 3 - n - 6) // 6
    assert fam.closed_form_w_bns(6, 0) == 28 and fam.closed_form_sz_bns(5, 0) == 19
    assert fam.closed_form_w_b1(5) == 14 and fam.closed_form_w_b1(6) == 26
    with pytest.raises(ValueError):
        fam.closed_form_w_lollipop_even(9, 5)
    with pytest.raises(ValueError):
        fam.closed_form_w_bns(8, 3)


def test_closed_forms_against_networkx():
    for n in range(4, 21):
        for r in range(4, n, 2):
            assert fam.closed_form_w_lollipop_even(n, r) == W(fam.lollipop(n, r))
        for s in range((n - 4) // 2 + 1):
            w, sz, _ = nx_indices(fam.b_ns(n, s))
            assert (fam.closed_form_w_bns(n, s), fam.closed_form_sz_bns(n, s)) == (w, sz)
        if n >= 5:
            assert fam.closed_form_w_b1(n) == W(fam.b1(n))
        if n >= 8:
            assert fam.closed_form_w_h23(n) == W(fam.h_graph(n, 2)) == W(fam.h_graph(n, 3))
        if n >= 5:
            assert fam.max_w_odd_girth5(n) == W(fam.lollipop(n, 5))
        if n >= 6:
            assert fam.max_w_even_girth6(n) == W(fam.lollipop(n, 6))


def test_theorem_bounds_examples():
    assert fam.theorem_bounds(5)["thm2.3"] == Fraction(8, 7)
    b10 = fam.theorem_bounds(10)
    assert b10["thm2.4"] == 1 + Fraction(24 * 8, 864) == Fraction(11, 9)
    assert b10["thm2.4"] == nx_ratio(fam.h_graph(10, 2))[1]
    assert b10["thm1.4i"] == 1 + Fraction(24 * 8, 1000 - 130 + 36) == nx_ratio(fam.lollipop(10, 4))[1]
    c4 = fam.cr_paths(4, [5, 0, 1, 0])
    assert nx_ratio(c4)[1] == 1 + Fraction(36 * 7, 1000 - 190 + 66) > b10["thm2.4"]
    assert fam.theorem_bounds(4)["thm1.3"] == Fraction(13, 2)
    assert fam.theorem_bounds(7)["thm1.5"] == 2 - Fraction(8, 56)
    with pytest.raises(ValueError):
        fam.theorem_bounds(3)


# ------------------------------------------------------------ FamilyId


@pytest.mark.parametrize("text, n", [
    ("lollipop:10:4", 10), ("bns:8:2", 8), ("h:12:2", 12), ("theta:1:2:4", 6), ("crpaths:3:5,3,2", 13),
    ("dumbbell:9:3:4", 9), ("k4m", 4), ("spider:9:4,3,1", 9), ("ank:8:3:2", 8), ("crstars:4:2,0,1,0", 7),
])
def test_family_round_trip(text, n):
    fid = fam.parse_family(text)
    assert str(fid) == text
    assert fid.n == n
    assert fam.parse_family(str(fid)) == fid


@pytest.mark.parametrize("text, words", [
    ("donut:5", "known"), ("lollipop:10", "2 parameter"), ("lollipop:a:3", "non-integer"),
    ("lollipop:5:6", "3 <= r <= n"), ("bns:8:3", "floor"), ("theta:2:1:4", "k <= l <= t"),
])
def test_family_errors_name_the_constraint(text, words):
    with pytest.raises(ValueError, match=words):
        fam.parse_family(text)


def test_family_spot_values():
    assert W(fam.parse_family("lollipop:8:6").build()) == 64
    assert W(fam.parse_family("bns:8:2").build()) == 69
    assert W(fam.parse_family("h:10:2").build()) == 144


def test_candidates_are_valid_and_sized():
    for n in (5, 8, 10):
        for fid in fam.family_candidates(n):
            g = fid.build()
            assert g.n == n and is_connected(g), fid
