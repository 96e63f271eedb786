"""Look for index offsets relating permutation statistics to non-occupied corners.

For each statistic and each shift d, compare the total over S_{m+d} with
noc(T_m) for m = 3..max. Only exact matches on the whole range are reported
as matches.
"""
import argparse
from dataclasses import fields

from tabcorners.formulas import closed_noc
from tabcorners.permstats import AuxStats, total_aux


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-m", type=int, default=8)
    args = p.parse_args()
    ms = range(3, args.max_m + 1)
    noc = {m: closed_noc("tlt", m) for m in ms}
    totals = {k: total_aux(k) for k in range(1, args.max_m + 2)}
    print("noc(T_m):", [noc[m] for m in ms])
    for f in fields(AuxStats):
        for d in (-1, 0, 1):
            values = [getattr(totals[m + d], f.name) for m in ms if m + d in totals]
            tag = "match" if values == [noc[m] for m in ms] else "-"
            print(f"{f.name:22s} over S_(m{d:+d}): {values}  {tag}")


if __name__ == "__main__":
    main()
