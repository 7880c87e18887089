"""Tabulate depth, the block bound and exact sdepth for every cutpoint chain."""

import argparse

from stanleydec.triple import chain_case


def compositions(n):
    for mask in range(1 << (n - 1)):
        yield [0] + [i for i in range(1, n) if mask >> (i - 1) & 1] + [n]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    print(f"{'cutpoints':24} depth  bound  exact  oracle")
    for n in range(1, args.max_n + 1):
        for cuts in compositions(n):
            rep = chain_case(cuts, exact=True, oracle=True)
            print(f"{','.join(map(str, cuts)):24} {rep.depth:5d}  {rep.bound:5d}  "
                  f"{rep.exact_sdepth:5d}  {rep.oracle_depth:6d}")


if __name__ == "__main__":
    main()
