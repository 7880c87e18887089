"""Exact Stanley depth of a squarefree monomial ideal.

The squarefree Stanley decompositions of ``I`` correspond to partitions of
its support poset into intervals ``[sigma, tau]``; ``sdepth(I) >= k`` iff
the poset has such a partition with every ``|tau| >= k``
(Herzog, Vladoiu and Zheng).  ``decide_at_least`` searches these partitions
by exact-cover backtracking.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Optional

from .ideal import SqfIdeal, VarSet, format_varset, full, members, monomial_of, set_key, size, subsets
from .stanley import StanleyDecomposition, StanleySpace

log = logging.getLogger(__name__)

DEFAULT_CAP = 6
HARD_CAP = 7


class SolverCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SupportPoset:
    """Upward-closed family of supports of ``I`` inside the ambient variables."""

    elements: tuple[VarSet, ...]
    ambient: VarSet
    n: int


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[tuple[VarSet, VarSet], ...]

    def __str__(self):
        return ", ".join(f"[{format_varset(a)},{format_varset(b)}]" for a, b in self.intervals)


def build_poset(I: SqfIdeal, ambient: Optional[VarSet] = None, cap: int = DEFAULT_CAP) -> SupportPoset:
    amb = full(I.n) if ambient is None else ambient
    m = size(amb)
    if cap > HARD_CAP:
        raise SolverCapExceeded(f"solver cap {cap} above the hard limit {HARD_CAP}")
    if m > cap:
        raise SolverCapExceeded(
            f"ring has {m} variables but the solver cap is {cap}; "
            f"drop free variables first or raise --cap (at most {HARD_CAP})")
    if m == HARD_CAP:
        warnings.warn(f"exact solver on {m} variables may take minutes", RuntimeWarning, stacklevel=2)
    elems = [s for s in subsets(amb) if I.contains_support(s)]
    elems.sort(key=set_key)
    return SupportPoset(tuple(elems), amb, I.n)


class _Search:
    def __init__(self, poset: SupportPoset, k: int):
        self.k = k
        elems = poset.elements
        self.elems = elems
        self.all_bits = (1 << len(elems)) - 1
        index = {s: i for i, s in enumerate(elems)}
        # only elements below size k can get stuck: larger ones may close as [s, s]
        self.small_bits = 0
        for i, s in enumerate(elems):
            if size(s) < k:
                self.small_bits |= 1 << i
        self.options: list[list[tuple[int, VarSet]]] = []
        for sigma in elems:
            tops = [t for t in subsets(poset.ambient)
                    if t & sigma == sigma and size(t) >= max(k, size(sigma))]
            # largest tops first, then canonical order
            tops.sort(key=lambda t: (-size(t), members(t)))
            opts = []
            for tau in tops:
                bits = 0
                for rho in subsets(tau & ~sigma):
                    bits |= 1 << index[rho | sigma]
                opts.append((bits, tau))
            self.options.append(opts)
        self.failed: set[int] = set()
        self.nodes = 0

    def run(self) -> Optional[list[tuple[VarSet, VarSet]]]:
        chosen: list[tuple[VarSet, VarSet]] = []
        if self._dfs(0, chosen):
            return chosen
        return None

    def _dead(self, covered: int) -> bool:
        open_small = self.small_bits & ~covered
        while open_small:
            low = open_small & -open_small
            i = low.bit_length() - 1
            open_small ^= low
            if not any(bits & covered == 0 for bits, _ in self.options[i]):
                return True
        return False

    def _dfs(self, covered: int, chosen: list) -> bool:
        self.nodes += 1
        uncovered = self.all_bits & ~covered
        if not uncovered:
            return True
        if covered in self.failed or self._dead(covered):
            return False
        # elements are sorted by size then lexicographically
        i = (uncovered & -uncovered).bit_length() - 1
        sigma = self.elems[i]
        for bits, tau in self.options[i]:
            if bits & covered:
                continue
            chosen.append((sigma, tau))
            if self._dfs(covered | bits, chosen):
                return True
            chosen.pop()
        self.failed.add(covered)
        return False


def decide_at_least(poset: SupportPoset, k: int) -> Optional[IntervalPartition]:
    """Interval partition of ``poset`` with all tops of size ``>= k``, or None."""
    if k < 1:
        raise ValueError("k must be positive")
    if not poset.elements:
        raise ValueError("empty poset (zero ideal)")
    search = _Search(poset, k)
    picked = search.run()
    log.debug("decide k=%d: %d nodes", k, search.nodes)
    if picked is None:
        return None
    return IntervalPartition(tuple(sorted(picked, key=lambda p: (set_key(p[0]), set_key(p[1])))))


def partition_to_decomposition(part: IntervalPartition, I: SqfIdeal, ambient: VarSet) -> StanleyDecomposition:
    spaces = tuple(StanleySpace(monomial_of(sigma, I.n), tau) for sigma, tau in part.intervals)
    return StanleyDecomposition(spaces, I, ambient)


def exact_sdepth(I: SqfIdeal, ambient: Optional[VarSet] = None,
                 cap: int = DEFAULT_CAP) -> tuple[int, StanleyDecomposition]:
    """Largest ``k`` with a Stanley decomposition of sdepth ``k``, and a witness."""
    if I.is_zero:
        raise ValueError("exact sdepth of the zero ideal is undefined")
    poset = build_poset(I, ambient, cap)
    best = None
    k = 0
    for cand in range(1, size(poset.ambient) + 1):
        part = decide_at_least(poset, cand)
        if part is None:
            break
        best, k = part, cand
    return k, partition_to_decomposition(best, I, poset.ambient)
