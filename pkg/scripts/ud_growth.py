"""Cumulative relative conjugacy growth of the U_d family and fitted log-log slopes."""

import argparse

from conjlang.growth import build_ud, degree_estimate, relative_growth


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degrees", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--max", type=int, default=32)
    p.add_argument("--window", type=int, nargs=2, default=[8, 24])
    p.add_argument("--table", action="store_true", help="print cc(n) for every n")
    args = p.parse_args()
    for d in args.degrees:
        table = relative_growth(build_ud(d).subset(), args.max)
        slope = degree_estimate(table, tuple(args.window))
        print(f"degree {d}  window {args.window}  slope {slope:.4f}")
        if args.table:
            for n, c, cc in table.rows():
                print(f"  {n:>3} {c:>8} {cc:>10}")


if __name__ == "__main__":
    main()
