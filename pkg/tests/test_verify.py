from __future__ import annotations

from fractions import Fraction

import pytest

from _oracles import nx_indices
from szeged import families as fam
from szeged.canon import canonical_key
from szeged.generate import gen_bicyclic, gen_trees, gen_unicyclic
from szeged.graph import all_pairs_distances, from_edges
from szeged.indices import index_profile, wiener
from szeged.report import dumps, report_document
from szeged.verify import (
    THEOREMS,
    TheoremResult,
    check_bns_monotone,
    check_coalescence,
    check_cycle_vs_lollipop,
    check_even_girth_max,
    check_girth3_difference,
    check_odd_girth_max,
    check_path_shift,
    check_pendant,
    check_sandwich,
    check_thm_1_x,
    check_thm_2_2,
    check_thm_2_3,
    check_tree_orderings,
    cycle_with_trees_shape,
    identify,
    rank,
    run_check,
    shift_paths,
)


def _w(g):
    return wiener(all_pairs_distances(g))


# ------------------------------------------------------------ identify


def test_identify_examples():
    top = max(gen_unicyclic(10), key=_w)
    assert str(identify(top)) == "lollipop:10:3"
    assert str(identify(fam.cycle(5))) == "cycle:5"
    assert str(identify(fam.b1(5))) == "b1:5"
    assert str(identify(fam.h_graph(11, 2))) == "h:11:2"
    assert identify(fam.path(21)) is None


def test_identify_returns_isomorphic_member():
    for g in gen_bicyclic(7):
        fid = identify(g)
        if fid is not None:
            assert canonical_key(fid.build()) == canonical_key(g)


# ------------------------------------------------------------ ranking


@pytest.mark.parametrize("gen, n", [(gen_unicyclic, 9), (gen_bicyclic, 8), (gen_trees, 10)])
def test_ranking_report_invariants(gen, n):
    graphs = gen(n)
    report = rank(graphs, _w, canonical=True)
    values = [t.value for t in report.tiers]
    assert values == sorted(values, reverse=True) and len(set(values)) == len(values)
    assert report.size == len(graphs)
    keys = [e.key for t in report.tiers for e in t.members]
    assert len(set(keys)) == len(keys) == len(graphs)
    assert report == rank(graphs, _w)  # same result without the canonical shortcut


def test_ranked_families_reproduce_closed_forms():
    forms = {
        "bns": lambda n, s: fam.closed_form_w_bns(n, s),
        "b1": lambda n: fam.closed_form_w_b1(n),
    }
    for n in range(6, 11):
        report = rank(gen_bicyclic(n), _w, canonical=True)
        for tier in report.top(4):
            for e in tier.members:
                fid = fam.parse_family(e.family) if e.family else None
                if fid and fid.tag in forms:
                    assert forms[fid.tag](*fid.params) == tier.value
    report = rank(gen_unicyclic(10), _w, canonical=True)
    for tier in report.top(8):
        for e in tier.members:
            fid = fam.parse_family(e.family)
            if fid.tag == "lollipop" and fid.params[1] % 2 == 0 and fid.params[1] < fid.params[0]:
                assert fam.closed_form_w_lollipop_even(*fid.params) == tier.value
            if fid.tag == "h" and fid.params[1] in (2, 3):
                assert fam.closed_form_w_h23(fid.params[0]) == tier.value


# ------------------------------------------------------------ theorem checks


def test_thm_2_2_n6_residual():
    res = check_thm_2_2(6)
    assert res.passed, res.reasons
    assert res.details["residual"] == {25: 8, 24: 4, 23: 3}
    assert [t.value for t in res.ranking.top(3)] == [28, 27, 26]


def test_thm_2_2_n8_tie():
    res = check_thm_2_2(8)
    assert res.passed, res.reasons
    tier = res.ranking.tiers[3]
    assert tier.value == 69 and sorted(e.family for e in tier.members) == ["b1:8", "bns:8:2"]


@pytest.mark.parametrize("n, bound", [(5, Fraction(8, 7)), (6, Fraction(14, 13)), (7, Fraction(23, 22))])
def test_thm_2_3_small(n, bound):
    res = check_thm_2_3(n)
    assert res.passed, res.reasons
    assert res.ratio.value == bound == res.ratio.bound
    assert [e.family for e in res.ratio.attainers] == [f"b1:{n}"]


def test_thm_1_examples():
    res = check_thm_1_x(1, 6)
    assert res.passed and res.ratio.value == 16
    res = check_thm_1_x(5, 7)
    assert res.passed and res.ratio.value == 2 - Fraction(8, 56)
    assert [e.family for e in res.ratio.attainers] == ["lollipop:7:6"]
    res = check_thm_1_x(4, 8)
    assert res.passed
    floor = 1 + Fraction(3 * (64 + 32 - 6), 2 * (512 - 56 + 12))
    assert fam.theorem_bounds(8)["thm1.4ii"] == floor


def test_shape_predicate():
    assert cycle_with_trees_shape(fam.lollipop(8, 4), 4)
    assert cycle_with_trees_shape(fam.cr_stars(4, [2, 0, 0, 0]), 4)
    assert not cycle_with_trees_shape(fam.cr_paths(4, [1, 0, 1, 0]), 4)
    assert cycle_with_trees_shape(fam.cr_paths(5, [1, 1, 0, 0, 0]), 5, adjacent_pair=True)
    assert not cycle_with_trees_shape(fam.cr_paths(5, [1, 0, 1, 0, 0]), 5, adjacent_pair=True)


# ------------------------------------------------------------ tree orderings


@pytest.mark.parametrize("n", [5, 6, 7, 8, 10, 11, 12])
def test_tree_orderings_hold(n):
    res = check_tree_orderings(n)
    assert res.passed, res.reasons


def test_tree_ordering_n8_records_unnamed_tree():
    res = check_tree_orderings(8)
    w = res.details["W(G'')"]
    assert w < 75


def test_tree_ordering_n9_tie_is_reported():
    res = check_tree_orderings(9)
    assert not res.passed
    assert len(res.reasons) == 1 and res.reasons[0].startswith("tier 4 (W=108) is not a single tree")
    tier = res.ranking.tiers[3]
    assert tier.value == 108 and len(tier.members) == 2
    assert canonical_key(fam.spider(9, [4, 3, 1]).tree) in {e.key for e in tier.members}
    assert sorted(res.witnesses) == sorted(e.graph6 for e in tier.members)


# ------------------------------------------------------------ lemma suites


def test_coalescence_suite():
    assert check_coalescence(seed=3, trials=200).passed


def test_pendant_suite():
    res = check_pendant(max_n=8)
    assert res.passed and res.details["pendant_vertices"] > 0


def test_path_shift_suite():
    assert check_path_shift(seed=5, trials=100).passed


def test_shift_paths_moves_everything_to_one_side():
    out = shift_paths(4, [2, 0, 3, 0], 0, 2)
    assert sorted(out) == [0, 0, 0, 5]


def test_sandwich_suite():
    res = check_sandwich(max_total=4)
    assert res.passed and res.details["instances"] > 0


def test_cycle_vs_lollipop_suite():
    assert check_cycle_vs_lollipop(seed=1, trials=40).passed


def test_extremal_lemma_suites():
    assert check_girth3_difference(6).passed
    res = check_odd_girth_max(11)
    assert res.passed and res.details["n=11"] == 191
    res = check_even_girth_max(9)
    assert res.passed
    assert sorted(res.details["n=8"]["attainers"]) == ["cycle:8", "lollipop:8:6"]
    assert check_bns_monotone(16).passed


# ------------------------------------------------------------ consistency


@pytest.mark.parametrize("n", range(5, 21))
def test_difference_and_ratio_bound_share_denominator(n):
    den = n ** 3 - 19 * n + 54
    assert fam.theorem_bounds(n)["thm2.3"] == 1 + Fraction(6 * 2, den)
    w, sz, _ = nx_indices(fam.b1(n))
    assert sz - w == 2 and 6 * w == den


@pytest.mark.parametrize("n", range(10, 51))
def test_second_bound_below_non_bipartite_floor(n):
    floor = Fraction(3 * (n * n + 4 * n - 6), 2 * (n ** 3 - 7 * n + 12))
    assert floor > Fraction(24 * (n - 2), n ** 3 - 19 * n + 54)


# ------------------------------------------------------------ results and dispatch


def test_failing_result_has_witness():
    res = TheoremResult("x", 5, True)
    res.fail("broken", fam.cycle(5))
    assert not res.passed and res.witnesses == ["Dhc"]


def test_checks_are_deterministic():
    a = dumps(report_document([check_thm_2_2(7), check_thm_2_3(5)], "cmd", 0))
    b = dumps(report_document([check_thm_2_2(7), check_thm_2_3(5)], "cmd", 0))
    assert a == b


@pytest.mark.parametrize("theorem, n", [("thm2.1", 9), ("thm2.2", 5), ("thm1.2", 4), ("nope", 5), ("thm2.3", None)])
def test_run_check_rejects_bad_requests(theorem, n):
    with pytest.raises(ValueError):
        run_check(theorem, n)


def test_run_check_guard(monkeypatch):
    monkeypatch.setenv("SZEGED_MAX_CONNECTED_N", "6")
    with pytest.raises(ValueError):
        run_check("thm1.1", 7)


def test_theorem_ids():
    assert set(THEOREMS) >= {f"thm1.{x}" for x in range(1, 8)} | {"thm2.1", "thm2.2", "thm2.3", "thm2.4"}


def test_index_profile_on_disconnected_input_raises():
    with pytest.raises(ValueError):
        index_profile(from_edges(4, [(0, 1), (2, 3)]))
