"""Walk the top of the unicyclic Wiener ranking and show where the H^1 tier gains a member.

Run: python3 demos/unicyclic_ranking.py [n]
"""
from __future__ import annotations

import sys

from szeged import families as fam
from szeged.canon import is_isomorphic
from szeged.graph import all_pairs_distances
from szeged.indices import wiener
from szeged.verify import check_thm_2_1


def w(g) -> int:
    return wiener(all_pairs_distances(g))


def main(n: int = 10) -> None:
    res = check_thm_2_1(n)
    print(f"unicyclic graphs on {n} vertices: {res.ranking.size}")
    for i, tier in enumerate(res.ranking.top(8), 1):
        print(f"  tier {i}: W={tier.value:<4} {', '.join(e.label for e in tier.members)}")
    print(f"checker verdict: {'PASS' if res.passed else 'FAIL'}")
    for reason in res.reasons:
        print(f"  {reason}")

    # the extra member: a triangle with a path hung from an interior path vertex,
    # i.e. the spider T_n(n-4, 1, 1, 1) with two unit leaves joined
    x, h1 = fam.a_nk(n, 3, 1), fam.h_graph(n, 1)
    print(f"W(ank:{n}:3:1) = {w(x)}, W(h:{n}:1) = {w(h1)}, isomorphic: {is_isomorphic(x, h1)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 10)
