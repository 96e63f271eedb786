"""Print closed-form vs enumerated corner totals for every family as CSV."""
import argparse
import sys

from tabcorners.config import RunConfig
from tabcorners.formulas import closed_corner_count, corner_table_csv, enumerated_corner_count

FAMILIES = ("pt", "at", "tlt", "ptb", "atsym", "tltsym")


def rows(config):
    for family in FAMILIES:
        top, warning = config.clamp(family, config.bounds.limit(family))
        if warning:
            print(f"# {warning}", file=sys.stderr)
        for n in range(1, top + 1):
            yield n, family, closed_corner_count(family, n), enumerated_corner_count(family, n, max_n=top)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=None)
    args = p.parse_args()
    sys.stdout.write(corner_table_csv(rows(RunConfig(max_n=args.max_n))))


if __name__ == "__main__":
    main()
