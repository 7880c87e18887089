"""Intersections of three monomial primes: depth, Stanley depth bounds and a
special Stanley decomposition built from a four-piece direct sum.

Everything is computed in the user's variable numbering.  The prime chosen
as pivot plays the role of ``(x_1, ..., x_r)``; its variables ``R`` and the
remaining spanned variables ``rest`` replace the renumbering ``x_1..x_r`` /
``x_{r+1}..x_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .ideal import (
    SqfIdeal,
    VarSet,
    format_varset,
    full,
    intersect,
    intersect_all,
    members,
    restrict,
    set_key,
    size,
    subsets,
    varset,
)
from .homology import depth_oracle
from .solver import DEFAULT_CAP, exact_sdepth
from .stanley import (
    StanleyDecomposition,
    direct_sum,
    extend_free,
    product,
    sdepth_of,
    verify_decomposition,
)


class InvalidTriple(ValueError):
    pass


def _ceil_half(a: int) -> int:
    return -(-a // 2)


@dataclass(frozen=True)
class PrimeTriple:
    """Three monomial primes, none contained in another.

    ``admissible`` lists the indices ``i`` with ``P_i`` inside the sum of the
    other two (Case 2); it is empty in Case 1, where the pivot is the first
    prime.
    """

    primes: tuple[VarSet, VarSet, VarSet]
    n: int
    admissible: tuple[int, ...]
    pivot: int = 0

    @property
    def spanned(self) -> VarSet:
        a, b, c = self.primes
        return a | b | c

    @property
    def m(self) -> int:
        """Number of spanned variables (the ``n`` of the construction)."""
        return size(self.spanned)

    @property
    def case(self) -> int:
        return 2 if self.admissible else 1

    def ordered(self, pivot: Optional[int] = None) -> tuple[VarSet, VarSet, VarSet]:
        """Primes as ``(P1, P2, P3)`` with the pivot first."""
        p = self.pivot if pivot is None else pivot
        others = [self.primes[i] for i in range(3) if i != p]
        return self.primes[p], others[0], others[1]

    def permutation(self, pivot: Optional[int] = None) -> tuple[int, ...]:
        """Original indices in construction order: pivot variables first."""
        P1 = self.ordered(pivot)[0]
        return members(P1) + members(self.spanned & ~P1)

    def with_pivot(self, pivot: int) -> PrimeTriple:
        if self.admissible and pivot not in self.admissible:
            raise InvalidTriple(f"P{pivot + 1} is not contained in the sum of the other primes")
        return PrimeTriple(self.primes, self.n, self.admissible, pivot)

    def ideal(self) -> SqfIdeal:
        return intersect_all([SqfIdeal(tuple(1 << (j - 1) for j in members(P)), self.n)
                              for P in self.primes])


def normalize(primes, n: int) -> tuple[PrimeTriple, VarSet]:
    """Validate a triple given as index lists; return it with its free variables."""
    primes = list(primes)
    if len(primes) != 3:
        raise InvalidTriple(f"expected three primes, got {len(primes)}")
    masks = []
    for i, P in enumerate(primes):
        idx = list(P)
        if not idx:
            raise InvalidTriple(f"P{i + 1} is the zero ideal")
        if any(j < 1 or j > n for j in idx):
            raise InvalidTriple(f"P{i + 1} uses a variable outside x1..x{n}")
        masks.append(varset(idx))
    for i, j in itertools.permutations(range(3), 2):
        if masks[i] & masks[j] == masks[i]:
            raise InvalidTriple(f"P{i + 1} is contained in P{j + 1}")
    admissible = tuple(
        i for i in range(3)
        if masks[i] & ~(masks[(i + 1) % 3] | masks[(i + 2) % 3]) == 0
    )
    T = PrimeTriple(tuple(masks), n, admissible, admissible[0] if admissible else 0)
    return T, full(n) & ~T.spanned


@dataclass(frozen=True)
class CountProfile:
    r: int
    b1: int
    b2: int
    b3: int
    a23: int
    a32: int
    c: int


@dataclass(frozen=True)
class Bounds:
    A: Optional[int] = None
    B: Optional[int] = None
    C: Optional[int] = None
    D: Optional[int] = None

    def present(self) -> dict[str, int]:
        return {k: v for k, v in vars(self).items() if v is not None}


def count_profile(T: PrimeTriple, pivot: Optional[int] = None) -> CountProfile:
    P1, P2, P3 = T.ordered(pivot)
    rest = T.spanned & ~P1
    return CountProfile(
        r=size(P1),
        b1=size(P1 & (P2 | P3)),
        b2=size(P1 & P2),
        b3=size(P1 & P3),
        a23=size(P1 & P2 & ~P3),
        a32=size(P1 & P3 & ~P2),
        c=size(rest & P2 & P3),
    )


def bounds_from_counts(p: CountProfile, ht2: int, ht3: int, n: int, case1: bool) -> Bounds:
    """A, B and (Case 1 only) C from the variable counts."""
    A = _ceil_half(p.a32) + _ceil_half(ht2 - p.b2) + n - p.a32 - ht2
    B = _ceil_half(p.a23) + _ceil_half(ht3 - p.b3) + n - p.a23 - ht3
    C = None
    if case1:
        C = _ceil_half(p.r - p.b1) + _ceil_half(ht2 - p.b2 - p.c) + _ceil_half(ht3 - p.b3 - p.c)
    return Bounds(A, B, C)


def bounds_from_heights(T: PrimeTriple, pivot: Optional[int] = None) -> Bounds:
    """A, B, C using only heights of the primes and their pairwise sums."""
    P1, P2, P3 = T.ordered(pivot)
    n = T.m
    h1, h2, h3 = size(P1), size(P2), size(P3)
    h12, h13, h23 = size(P1 | P2), size(P1 | P3), size(P2 | P3)
    A = _ceil_half(3 * n - h12 - h23 - h2) + _ceil_half(h12 - h1)
    B = _ceil_half(3 * n - h13 - h23 - h3) + _ceil_half(h13 - h1)
    C = None
    if T.case == 1:
        C = _ceil_half(n - h23) + _ceil_half(n - h13) + _ceil_half(n - h12)
    return Bounds(A, B, C)


def counts_from_heights(T: PrimeTriple, pivot: Optional[int] = None) -> CountProfile:
    """The counts recovered from heights alone (valid when the primes span)."""
    P1, P2, P3 = T.ordered(pivot)
    n = T.m
    h1, h2, h3 = size(P1), size(P2), size(P3)
    h12, h13, h23 = size(P1 | P2), size(P1 | P3), size(P2 | P3)
    return CountProfile(
        r=h1,
        b1=h1 + h23 - n,
        b2=h1 + h2 - h12,
        b3=h1 + h3 - h13,
        a23=h13 + h23 - h3 - n,
        a32=h12 + h23 - h2 - n,
        c=h12 + h13 - h1 - n,
    )


def depth_formula(T: PrimeTriple, free: VarSet = 0) -> int:
    if T.case == 1:
        return 3 + size(free)
    P1, P2, P3 = T.ordered(T.admissible[0])
    return T.m + 2 - max(size(P1 | P2), size(P1 | P3)) + size(free)


@dataclass(frozen=True)
class Piece:
    """One summand: an ideal of the polynomial ring on ``ambient``."""

    name: str
    ideal: SqfIdeal
    ambient: VarSet

    def contains_support(self, sigma: VarSet) -> bool:
        return sigma & ~self.ambient == 0 and self.ideal.contains_support(sigma)


@dataclass(frozen=True)
class SdSplit:
    pieces: tuple[Optional[Piece], ...]
    ring: VarSet
    pivot: int

    def nonzero(self) -> list[Piece]:
        return [p for p in self.pieces if p is not None and not p.ideal.is_zero]


def _prime(mask: VarSet, n: int) -> SqfIdeal:
    return SqfIdeal(tuple(1 << (j - 1) for j in members(mask)), n)


def split_lemma_sd(T: PrimeTriple, pivot: Optional[int] = None) -> SdSplit:
    """The pieces ``I1..I4``; ``I4`` is None when the pivot lies in the other two."""
    p = T.pivot if pivot is None else pivot
    P1, P2, P3 = T.ordered(p)
    n = T.n
    R = P1
    rest = T.spanned & ~R
    I = T.ideal()
    I1 = Piece("I1", restrict(I, R), T.spanned)
    amb2 = (R & ~P3) | rest
    I2 = Piece("I2", intersect(_prime(R & P2 & ~P3, n), _prime(P3 & ~R, n)), amb2)
    amb3 = (R & ~P2) | rest
    I3 = Piece("I3", intersect(_prime(R & P3 & ~P2, n), _prime(P2 & ~R, n)), amb3)
    tilde = (R & ~(P2 | P3)) | rest
    I4 = None
    if R & ~(P2 | P3):
        I4 = Piece("I4", restrict(I, tilde), tilde)
    return SdSplit((I1, I2, I3, I4), T.spanned, p)


@dataclass(frozen=True)
class DirectSumReport:
    ok: bool
    support: Optional[VarSet] = None
    hits: int = 0


def verify_direct_sum(split: SdSplit, I: SqfIdeal) -> DirectSumReport:
    """Every support of the ring lies in exactly one piece iff it lies in ``I``."""
    pieces = split.nonzero()
    for sigma in sorted(subsets(split.ring), key=set_key):
        hits = sum(1 for pc in pieces if pc.contains_support(sigma))
        if hits != (1 if I.contains_support(sigma) else 0):
            return DirectSumReport(False, sigma, hits)
    return DirectSumReport(True)


def _prime_decomposition(P: VarSet, ambient: VarSet, n: int, cap: int) -> StanleyDecomposition:
    """Exact-solver decomposition of the prime on ``P`` in ``K[ambient]``."""
    _, D = exact_sdepth(_prime(P, n), P, cap)
    return extend_free(D, ambient & ~P) if ambient & ~P else D


def piece_decompositions(T: PrimeTriple, pivot: Optional[int] = None,
                         cap: int = DEFAULT_CAP) -> dict[str, StanleyDecomposition]:
    """Stanley decompositions of the nonzero pieces, keyed by piece name."""
    split = split_lemma_sd(T, pivot)
    P1, P2, P3 = T.ordered(split.pivot)
    n = T.n
    R = P1
    rest = T.spanned & ~R
    out = {}
    I1, I2, I3, I4 = split.pieces
    if not I1.ideal.is_zero:
        _, D = exact_sdepth(I1.ideal, R, cap)
        out["I1"] = extend_free(D, rest) if rest else D
    if not I2.ideal.is_zero:
        out["I2"] = product(_prime_decomposition(R & P2 & ~P3, R & ~P3, n, cap),
                            _prime_decomposition(P3 & ~R, rest, n, cap))
    if not I3.ideal.is_zero:
        out["I3"] = product(_prime_decomposition(R & P3 & ~P2, R & ~P2, n, cap),
                            _prime_decomposition(P2 & ~R, rest, n, cap))
    if I4 is not None and not I4.ideal.is_zero:
        tail = intersect(_prime(P2 & rest, n), _prime(P3 & rest, n))
        _, D23 = exact_sdepth(tail, rest, cap)
        head = R & ~(P2 | P3)
        out["I4"] = product(_prime_decomposition(head, head, n, cap), D23)
    return out


@dataclass(frozen=True)
class BoundReport:
    bound: int
    pivot: int
    bounds: Bounds
    free: int

    @property
    def letters(self) -> dict[str, int]:
        return self.bounds.present()


def _bound_for_pivot(T: PrimeTriple, pivot: int, use_solver: bool, cap: int) -> tuple[int, Bounds]:
    P1, P2, P3 = T.ordered(pivot)
    prof = count_profile(T, pivot)
    raw = bounds_from_counts(prof, size(P2), size(P3), T.m, T.case == 1)
    split = split_lemma_sd(T, pivot)
    I1, I2, I3, I4 = split.pieces
    rest_size = T.m - prof.r
    D = None
    if not I1.ideal.is_zero:
        if use_solver:
            D = exact_sdepth(I1.ideal, P1, cap)[0] + rest_size
        else:
            D = 1 + rest_size
    bounds = Bounds(
        A=raw.A if not I3.ideal.is_zero else None,
        B=raw.B if not I2.ideal.is_zero else None,
        C=raw.C if I4 is not None and not I4.ideal.is_zero else None,
        D=D,
    )
    return min(bounds.present().values()), bounds


def lower_bound_report(T: PrimeTriple, free: VarSet = 0, use_solver: bool = True,
                       cap: int = DEFAULT_CAP) -> BoundReport:
    """Best bound over admissible pivots (only the first prime in Case 1)."""
    best = None
    for p in (T.admissible or (0,)):
        value, bounds = _bound_for_pivot(T, p, use_solver, cap)
        if best is None or value > best.bound - size(free):
            best = BoundReport(value + size(free), p, bounds, size(free))
    return best


def sdepth_lower_bound(T: PrimeTriple, free: VarSet = 0, use_solver: bool = True,
                       cap: int = DEFAULT_CAP) -> int:
    return lower_bound_report(T, free, use_solver, cap).bound


def special_decomposition(T: PrimeTriple, free: VarSet = 0, pivot: Optional[int] = None,
                          cap: int = DEFAULT_CAP) -> StanleyDecomposition:
    """Stanley decomposition of ``I`` assembled from the four pieces.

    Without an explicit pivot the one maximising the bound is used.
    """
    if pivot is None:
        pivot = lower_bound_report(T, free, True, cap).pivot
    parts = piece_decompositions(T, pivot, cap)
    D = direct_sum(list(parts.values()), T.ideal(), T.spanned)
    return extend_free(D, free) if free else D


@dataclass(frozen=True)
class Verdict:
    depth: int
    bound: int
    exact_sdepth: Optional[int] = None
    oracle_depth: Optional[int] = None
    passed: bool = True
    problems: tuple[str, ...] = field(default=())


def exact_sdepth_of_triple(T: PrimeTriple, free: VarSet = 0, cap: int = DEFAULT_CAP) -> int:
    """Exact sdepth of ``I`` in the full ring.

    Above the solver cap the free variables are split off and added back.
    """
    I = T.ideal()
    if size(T.spanned | free) <= cap:
        return exact_sdepth(I, T.spanned | free, cap)[0]
    return exact_sdepth(I, T.spanned, cap)[0] + size(free)


def check_conjecture(T: PrimeTriple, free: VarSet = 0, exact: bool = False, oracle: bool = False,
                     cap: int = DEFAULT_CAP) -> Verdict:
    depth = depth_formula(T, free)
    bound = sdepth_lower_bound(T, free, True, cap)
    problems = []
    if bound < depth:
        problems.append(f"bound {bound} < depth {depth}")
    ex = None
    if exact:
        ex = exact_sdepth_of_triple(T, free, cap)
        if ex < bound:
            problems.append(f"exact sdepth {ex} < bound {bound}")
        if ex < depth:
            problems.append(f"exact sdepth {ex} < depth {depth}")
    od = None
    if oracle:
        od = depth_oracle(T.ideal(), T.spanned | free)
        if od != depth:
            problems.append(f"depth oracle {od} != depth formula {depth}")
    return Verdict(depth, bound, ex, od, not problems, tuple(problems))


@dataclass(frozen=True)
class ChainReport:
    cutpoints: tuple[int, ...]
    depth: int
    bound: int
    decomposition: StanleyDecomposition
    exact_sdepth: Optional[int] = None
    oracle_depth: Optional[int] = None

    @property
    def blocks(self) -> list[VarSet]:
        c = self.cutpoints
        return [varset(range(c[i - 1] + 1, c[i] + 1)) for i in range(1, len(c))]


def chain_case(cutpoints, exact: bool = False, oracle: bool = False,
               cap: int = DEFAULT_CAP) -> ChainReport:
    """Intersection of primes on consecutive blocks ``x_{r_{i-1}+1}..x_{r_i}``."""
    cuts = tuple(int(c) for c in cutpoints)
    if len(cuts) < 2:
        raise ValueError("need at least two cutpoints 0 = r0 < r1")
    if cuts[0] != 0:
        raise ValueError("the first cutpoint must be 0")
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"cutpoints must be strictly increasing, got {list(cuts)}")
    n = cuts[-1]
    s = len(cuts) - 1
    blocks = [varset(range(cuts[i - 1] + 1, cuts[i] + 1)) for i in range(1, s + 1)]
    bound = sum(_ceil_half(size(b)) for b in blocks)
    D = None
    for b in blocks:
        Db = _prime_decomposition(b, b, n, cap)
        D = Db if D is None else product(D, Db)
    I = intersect_all([_prime(b, n) for b in blocks])
    ex = exact_sdepth(I, None, cap)[0] if exact else None
    od = None
    if oracle:
        od = depth_oracle(I)
    return ChainReport(cuts, s, bound, D, ex, od)


def pq_bound(r: int, t: int, n: int) -> int:
    """Lower bound for sdepth((x_1..x_t) cap (x_{r+1}..x_n))."""
    if not 1 <= r <= t < n:
        raise ValueError(f"need 1 <= r <= t < n, got r={r}, t={t}, n={n}")
    return _ceil_half(r) + _ceil_half(n - t)


def valid_triples(n: int, ordered: bool = False, spanning: bool = False):
    """All triples of pairwise incomparable nonzero primes in ``K[x_1..x_n]``.

    Unordered triples come as combinations in canonical set order.
    """
    subs = sorted((s for s in range(1, 1 << n)), key=set_key)
    gen = itertools.permutations(subs, 3) if ordered else itertools.combinations(subs, 3)
    for a, b, c in gen:
        if a & b in (a, b) or a & c in (a, c) or b & c in (b, c):
            continue
        if spanning and a | b | c != full(n):
            continue
        yield a, b, c


def describe(T: PrimeTriple) -> str:
    return " cap ".join(format_varset(P) for P in T.primes)
