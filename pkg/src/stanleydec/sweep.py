"""Exhaustive checks over all valid prime triples in a fixed number of variables."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .ideal import members
from .solver import DEFAULT_CAP
from .stanley import sdepth_of, verify_decomposition
from .triple import (
    bounds_from_counts,
    bounds_from_heights,
    check_conjecture,
    count_profile,
    counts_from_heights,
    normalize,
    special_decomposition,
    split_lemma_sd,
    valid_triples,
    verify_direct_sum,
)


@dataclass(frozen=True)
class SweepConfig:
    n: int
    exact: bool = False
    oracle: bool = False
    cap: int = DEFAULT_CAP
    jobs: int = 1


@dataclass
class SweepRow:
    primes: list[list[int]]
    case: int
    depth: int
    bound: int
    exact_sdepth: Optional[int] = None
    oracle_depth: Optional[int] = None
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems


def check_triple(primes: list[list[int]], n: int, exact: bool = False, oracle: bool = False,
                 cap: int = DEFAULT_CAP) -> SweepRow:
    """All cross-checks the library can run on one triple."""
    T, free = normalize(primes, n)
    v = check_conjecture(T, free, exact, oracle, cap)
    problems = list(v.problems)
    for p in (T.admissible or (0, 1, 2)):
        P1, P2, P3 = T.ordered(p)
        prof = count_profile(T, p)
        if prof != counts_from_heights(T, p):
            problems.append(f"pivot P{p + 1}: counts disagree with height identities")
        from_counts = bounds_from_counts(prof, len(members(P2)), len(members(P3)), T.m, T.case == 1)
        if from_counts != bounds_from_heights(T, p):
            problems.append(f"pivot P{p + 1}: bounds from counts {from_counts} != bounds from heights")
        if not verify_direct_sum(split_lemma_sd(T, p), T.ideal()).ok:
            problems.append(f"pivot P{p + 1}: pieces are not a direct sum")
    D = special_decomposition(T, free, cap=cap)
    rep = verify_decomposition(D)
    if not rep.partition:
        problems.append(f"special decomposition fails at {rep.witness} ({rep.reason})")
    elif sdepth_of(D) < v.bound:
        problems.append(f"special decomposition has sdepth {sdepth_of(D)} < bound {v.bound}")
    return SweepRow(primes, T.case, v.depth, v.bound, v.exact_sdepth, v.oracle_depth, problems)


def _run_one(args):
    return check_triple(*args)


def sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Check every unordered valid triple; rows come back in canonical order."""
    jobs = [([list(members(P)) for P in tr], cfg.n, cfg.exact, cfg.oracle, cfg.cap)
            for tr in valid_triples(cfg.n)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            return list(ex.map(_run_one, jobs, chunksize=32))
    return [_run_one(j) for j in jobs]
