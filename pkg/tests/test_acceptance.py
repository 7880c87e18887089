"""Acceptance gate. Run with ``pytest tests/test_acceptance.py -v``; one PASS/FAIL
line per criterion is printed in the terminal summary."""

import time
from functools import lru_cache

from oracles import all_ideals, ceil_half, partition_by_enumeration
from stanleydec.homology import depth_oracle
from stanleydec.ideal import SqfIdeal, full, members, size, varset
from stanleydec.solver import exact_sdepth
from stanleydec.stanley import decomposition, product, sdepth_of, verify_decomposition
from stanleydec.triple import (
    bounds_from_counts,
    bounds_from_heights,
    chain_case,
    count_profile,
    depth_formula,
    lower_bound_report,
    normalize,
    piece_decompositions,
    sdepth_lower_bound,
    special_decomposition,
    valid_triples,
)


def triples(n, ordered=False):
    for tr in valid_triples(n, ordered=ordered):
        yield normalize([members(P) for P in tr], n)


@lru_cache(maxsize=None)
def exact_of(I):
    return exact_sdepth(I)


def test_c1_golden_example(criterion):
    t0 = time.perf_counter()
    T, free = normalize([[1, 2], [2, 3, 4], [1, 3]], 4)
    p = count_profile(T)
    counts = (p.b2, p.b3, p.b1, p.a23, p.a32, p.c)
    rep = lower_bound_report(T, free)
    pieces = piece_decompositions(T)
    D = special_decomposition(T, free)
    elapsed = time.perf_counter() - t0
    criterion(f"counts={counts} A={rep.bounds.A} B={rep.bounds.B} "
              f"depth={depth_formula(T, free)} bound={rep.bound} {elapsed:.3f}s")
    assert counts == (1, 1, 2, 1, 1, 1)
    assert (rep.bounds.A, rep.bounds.B) == (2, 3)
    assert depth_formula(T, free) == 2 and rep.bound == 2
    assert [str(s) for s in pieces["I1"].spaces] == ["x1x2K[x1,x2,x3,x4]"]
    assert [str(s) for s in pieces["I2"].spaces] == ["x2x3K[x2,x3,x4]"]
    assert [str(s) for s in pieces["I3"].spaces] == ["x1x3K[x1,x3,x4]", "x1x4K[x1,x4]"]
    assert sorted(sdepth_of(d) for d in pieces.values()) == [2, 3, 4]
    assert verify_decomposition(D).partition
    assert elapsed < 1.0


def test_c2_strictness_case(criterion):
    t0 = time.perf_counter()
    n = 4
    I = SqfIdeal.from_supports([[1, 3], [1, 4], [2, 3], [2, 4]], n)
    k, _ = exact_sdepth(I)
    _, D1 = exact_sdepth(SqfIdeal.prime([1, 2], n), varset([1, 2]))
    _, D2 = exact_sdepth(SqfIdeal.prime([3, 4], n), varset([3, 4]))
    prod = sdepth_of(product(D1, D2))
    elapsed = time.perf_counter() - t0
    criterion(f"exact={k} product={prod} {elapsed:.3f}s")
    assert (k, prod) == (3, 2)
    assert elapsed < 1.0


def test_c3_two_block_primes_n5(criterion):
    t0 = time.perf_counter()
    n = 5
    got = []
    for r1 in range(1, n):
        I = SqfIdeal.from_supports([[i, j] for i in range(1, r1 + 1) for j in range(r1 + 1, n + 1)], n)
        got.append(exact_sdepth(I)[0])
    elapsed = time.perf_counter() - t0
    criterion(f"r1=1..4 -> {got} {elapsed:.2f}s")
    assert got == [ceil_half(n + 1)] * 4 == [3] * 4
    assert elapsed < 10.0


def test_c4_counts_equal_heights(criterion):
    checked = mismatches = 0
    for n in range(1, 6):
        for T, _ in triples(n, ordered=True):
            for p in (T.admissible or (0,)):
                P1, P2, P3 = T.ordered(p)
                from_counts = bounds_from_counts(count_profile(T, p), size(P2), size(P3), T.m, T.case == 1)
                checked += 1
                mismatches += from_counts != bounds_from_heights(T, p)
    criterion(f"{checked} (triple, pivot) pairs, {mismatches} mismatches")
    assert checked > 0 and mismatches == 0


def test_c5_depth_formula_vs_oracle(criterion):
    t0 = time.perf_counter()
    checked = mismatches = 0
    for n in range(1, 6):
        for T, free in triples(n):
            checked += 1
            mismatches += depth_formula(T, free) != depth_oracle(T.ideal())
    elapsed = time.perf_counter() - t0
    criterion(f"{checked} triples, {mismatches} mismatches {elapsed:.1f}s")
    assert checked > 0 and mismatches == 0
    assert elapsed < 300.0


def test_c6_sdepth_above_depth(criterion):
    checked = violations = 0
    for n in range(1, 6):
        for T, free in triples(n, ordered=True):
            k = exact_of(T.ideal())[0]
            b = sdepth_lower_bound(T, free)
            checked += 1
            violations += not (k >= b >= depth_formula(T, free))
    criterion(f"{checked} ordered triples n<=5, {violations} violations")
    assert checked > 0 and violations == 0


def compositions(n):
    for mask in range(1 << (n - 1)):
        yield [0] + [i for i in range(1, n) if mask >> (i - 1) & 1] + [n]


def test_c7_chains(criterion):
    checked = violations = 0
    for n in range(1, 7):
        for cuts in compositions(n):
            rep = chain_case(cuts, exact=True, oracle=True)
            s = len(cuts) - 1
            checked += 1
            violations += not (rep.oracle_depth == s == rep.depth
                               and rep.exact_sdepth >= rep.bound >= s
                               and verify_decomposition(rep.decomposition).partition)
    criterion(f"{checked} chains n<=6, {violations} violations")
    assert checked == 63 and violations == 0


def test_c8_depth_additivity(criterion):
    checked = failures = 0
    for a in range(1, 4):
        for b in range(1, 4):
            n = a + b
            left, right = full(a), full(n) & ~full(a)
            for g in all_ideals(a):
                I = SqfIdeal(g, n)
                dI = depth_oracle(I, left)
                for h in all_ideals(b):
                    J = SqfIdeal(tuple(x << a for x in h), n)
                    IJ = SqfIdeal(tuple(x | y for x in I.gens for y in J.gens), n)
                    checked += 1
                    failures += depth_oracle(IJ) != dI + depth_oracle(J, right)
    criterion(f"{checked} block pairs, {failures} failures")
    assert checked > 0 and failures == 0


def test_c9_oracle_self_consistency(criterion):
    maximal = [exact_sdepth(SqfIdeal.prime(range(1, m + 1), m))[0] for m in range(1, 7)]
    assert maximal == [ceil_half(m) for m in range(1, 7)]

    witnesses = disagreements = 0
    for n in range(1, 6):
        pool = [SqfIdeal(g, n) for g in all_ideals(n)] if n <= 4 else [T.ideal() for T, _ in triples(n)]
        for I in pool:
            _, D = exact_of(I)
            witnesses += 1
            assert verify_decomposition(D).partition
            spaces = [(s.u, set(members(s.Z))) for s in D.spaces]
            # the witness itself plus two corruptions must agree with the cap-3 recheck
            variants = [spaces, spaces[1:], [(spaces[0][0], spaces[0][1] - {max(spaces[0][1])})] + spaces[1:]]
            for var in variants:
                pairs = [([j + 1 for j, e in enumerate(u) if e], Z) for u, Z in var]
                Dv = decomposition(pairs, I)
                disagreements += verify_decomposition(Dv).partition != partition_by_enumeration(var, I.gens, n, 3)
    criterion(f"maximal={maximal} witnesses={witnesses} cap2/cap3 disagreements={disagreements}")
    assert disagreements == 0
