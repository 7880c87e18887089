"""Check every triple of primes in n variables and print a per-case summary."""

import argparse
import collections
import time

from stanleydec.sweep import SweepConfig, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--exact", action="store_true")
    ap.add_argument("--oracle", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print("n  triples  case1  case2  gap(bound-depth)  gap(exact-bound)  failures  seconds")
    for n in args.n:
        t0 = time.perf_counter()
        rows = sweep(SweepConfig(n, args.exact, args.oracle, jobs=args.jobs))
        cases = collections.Counter(r.case for r in rows)
        gap1 = collections.Counter(r.bound - r.depth for r in rows)
        gap2 = collections.Counter(r.exact_sdepth - r.bound for r in rows) if args.exact else {}
        bad = [r for r in rows if not r.passed]
        print(f"{n}  {len(rows):7d}  {cases[1]:5d}  {cases[2]:5d}  {dict(sorted(gap1.items()))!s:16}  "
              f"{dict(sorted(gap2.items()))!s:16}  {len(bad):8d}  {time.perf_counter() - t0:7.2f}")
        for r in bad:
            print("   ", r.primes, r.problems)


if __name__ == "__main__":
    main()
