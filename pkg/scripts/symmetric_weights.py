"""Tabulate (left*, top*, diag) over symmetric tree-like tableaux.

Shows why the (x, y, z) product form cannot match: the diag statistic is
identically zero and left* equals top* on every symmetric tableau, so the
enumerated sum only has terms (xy)^k.
"""
import argparse
from collections import Counter

from tabcorners.formulas import Tsym_xyz, sym_sums
from tabcorners.tableaux import diag_stat, generate_all, left_stat, top_stat


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=4)
    args = p.parse_args()
    for n in range(1, args.max_n + 1):
        dist = Counter((left_stat(t) - 1, top_stat(t) - 1, diag_stat(t)) for t in generate_all("tltsym", n))
        print(f"n={n}: {dict(sorted(dist.items()))}")
        print(f"    enumerated {sym_sums(n).xyz}")
        print(f"    product    {Tsym_xyz(n)}")


if __name__ == "__main__":
    main()
