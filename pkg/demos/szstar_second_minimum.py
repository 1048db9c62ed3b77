"""Second-smallest Sz*/W over unicyclic and bicyclic graphs, and the n=10 floor crossing.

Run: python3 demos/szstar_second_minimum.py
"""
from __future__ import annotations

from fractions import Fraction

from szeged import families as fam
from szeged.indices import index_profile
from szeged.verify import check_thm_2_4


def main() -> None:
    for n in (10, 11):
        res = check_thm_2_4(n)
        r = res.ratio
        bound = fam.theorem_bounds(n)["thm2.4"]
        print(f"n={n}: min Sz*/W = {r.value} by {[e.label for e in r.attainers]}, stated {bound}, "
              f"{'PASS' if res.passed else 'FAIL'}")
        print(f"       Sz*/W(L_n,4) = {res.details['l4_ratio']}")

    # the non-bipartite floor lies below the stated bound only at n = 10
    for n in range(10, 14):
        floor = 1 + Fraction(3 * (n * n + 4 * n - 6), 2 * (n ** 3 - 7 * n + 12))
        l3 = index_profile(fam.lollipop(n, 3)).szstar_over_w
        print(f"n={n}: floor {floor} (= Sz*/W(L_n,3): {l3 == floor}), "
              f"bound {fam.theorem_bounds(n)['thm2.4']}, floor > bound: {floor > fam.theorem_bounds(n)['thm2.4']}")


if __name__ == "__main__":
    main()
