"""Tabulate x4, x3, their complements and the recovered nome on a q grid.

    python scripts/scan_moduli.py --qmax 0.9 --points 19
"""

import argparse
import csv
import sys

from ramanujan_elliptic.hyper2f1 import SlowConvergenceError
from ramanujan_elliptic.inversion import q_of_x
from ramanujan_elliptic.suites import linspace
from ramanujan_elliptic.theta import x_complement_num, x_num


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--qmin", type=float, default=0.001)
    p.add_argument("--qmax", type=float, default=0.9)
    p.add_argument("--points", type=int, default=19)
    args = p.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["q", "level", "x", "one_minus_x", "q_recovered"])
    for q in linspace(args.qmin, args.qmax, args.points):
        for level in (4, 3):
            x = x_num(level, q)
            comp = x_complement_num(level, q)
            try:
                back = f"{q_of_x(level, x):.15g}" if 0 < x < 1 else "nan"
            except SlowConvergenceError:
                # F(1 - x) needs too many terms when x is tiny or 1 - x is tiny
                back = "slow"
            out.writerow([f"{q:.6g}", level, f"{x:.17g}", f"{comp:.6e}", back])


if __name__ == "__main__":
    main()
