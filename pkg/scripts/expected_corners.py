"""Compare the closed rational expression for the expected corner count with direct averages."""
import argparse
from fractions import Fraction

from tabcorners.formulas import expected_X


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=6)
    args = p.parse_args()
    points = [(1, 1), (2, 3), (Fraction(1, 2), Fraction(7, 3)), (5, 1)]
    for n in range(1, args.max_n + 1):
        for a, b in points:
            closed, direct = expected_X(n, a, b)
            print(f"n={n} a={a} b={b}: closed {closed}  direct {direct}  {'ok' if closed == direct else 'MISMATCH'}")


if __name__ == "__main__":
    main()
