"""Exact sdepth of the maximal ideal, with solver timings."""

import argparse
import time

from stanleydec.solver import HARD_CAP, exact_sdepth
from stanleydec.ideal import SqfIdeal
from stanleydec.stanley import verify_decomposition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=6)
    args = ap.parse_args()
    for m in range(1, args.max_m + 1):
        t0 = time.perf_counter()
        k, D = exact_sdepth(SqfIdeal.prime(range(1, m + 1), m), cap=HARD_CAP)
        dt = time.perf_counter() - t0
        print(f"m={m}  sdepth={k}  ceil(m/2)={(m + 1) // 2}  spaces={len(D)}  "
              f"verified={verify_decomposition(D).partition}  {dt:.3f}s")


if __name__ == "__main__":
    main()
