"""Stanley spaces and decompositions of squarefree monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .ideal import (
    ContextMismatch,
    Monomial,
    SqfIdeal,
    VarSet,
    format_monomial,
    format_varset,
    full,
    intersect,
    members,
    monomial_of,
    set_key,
    size,
    subsets,
    support,
)


@dataclass(frozen=True, order=True)
class StanleySpace:
    """The space ``u K[Z]`` for a squarefree monomial ``u``."""

    u: Monomial
    Z: VarSet

    def __post_init__(self):
        if any(e not in (0, 1) for e in self.u):
            raise ValueError(f"Stanley space generator must be squarefree, got {self.u}")

    @property
    def u_support(self) -> VarSet:
        return support(self.u)

    def contains(self, m: Sequence[int]) -> bool:
        for j, (e, ue) in enumerate(zip(m, self.u)):
            if e < ue:
                return False
            if e > ue and not (self.Z >> j) & 1:
                return False
        return True

    def __str__(self):
        zs = ",".join(f"x{j}" for j in members(self.Z))
        return f"{format_monomial(self.u)}K[{zs}]"


def _sort_key(space: StanleySpace):
    return set_key(space.u_support), set_key(space.Z)


@dataclass(frozen=True)
class StanleyDecomposition:
    """A list of Stanley spaces meant to partition ``target``.

    ``ambient`` is the set of variables of the polynomial ring the
    decomposition lives in (all of ``x_1..x_n`` unless stated otherwise).
    The zero ideal has the empty decomposition.
    """

    spaces: tuple[StanleySpace, ...]
    target: SqfIdeal
    ambient: VarSet = field(default=-1)

    def __post_init__(self):
        n = self.target.n
        amb = full(n) if self.ambient == -1 else self.ambient
        object.__setattr__(self, "ambient", amb)
        for s in self.spaces:
            if len(s.u) != n:
                raise ContextMismatch(f"space {s} does not live in a ring with {n} variables")
        object.__setattr__(self, "spaces", tuple(sorted(self.spaces, key=_sort_key)))

    @property
    def n(self) -> int:
        return self.target.n

    def __len__(self):
        return len(self.spaces)

    def __str__(self):
        return " + ".join(str(s) for s in self.spaces) or "0"


def decomposition(pairs: Iterable[tuple[Iterable[int], Iterable[int]]], target: SqfIdeal,
                  ambient: Optional[VarSet] = None) -> StanleyDecomposition:
    """Build from ``(u_support, Z)`` index lists."""
    n = target.n
    spaces = []
    for u, Z in pairs:
        mask = 0
        for j in u:
            mask |= 1 << (j - 1)
        zmask = 0
        for j in Z:
            zmask |= 1 << (j - 1)
        spaces.append(StanleySpace(monomial_of(mask, n), zmask))
    return StanleyDecomposition(tuple(spaces), target, -1 if ambient is None else ambient)


def sdepth_of(D: StanleyDecomposition) -> int:
    if not D.spaces:
        raise ValueError("sdepth of an empty decomposition is undefined")
    return min(size(s.Z) for s in D.spaces)


@dataclass(frozen=True)
class VerifyReport:
    partition: bool
    witness: Optional[Monomial] = None
    reason: str = ""


def verify_decomposition(D: StanleyDecomposition) -> VerifyReport:
    """Check that the spaces of ``D`` partition its target.

    Membership of ``m`` in ``u K[Z]`` only depends on which exponents of ``m``
    are 0, 1 or at least 2, so scanning exponents in {0,1,2} over the ambient
    variables is exhaustive.  Each grid point is a pair of masks
    ``s2 <= s1`` (variables with exponent >= 2, resp. >= 1).
    """
    amb = D.ambient
    n = D.n
    spaces = []
    for s in D.spaces:
        u = s.u_support
        if u & ~amb or s.Z & ~amb:
            raise ContextMismatch(f"space {s} uses variables outside the ambient ring")
        spaces.append((u, s.Z))
    gens = D.target.gens
    for s1 in sorted(subsets(amb), key=set_key):
        in_target = any(g & s1 == g for g in gens)
        for s2 in sorted(subsets(s1), key=set_key):
            hits = 0
            for u, Z in spaces:
                if u & s1 == u and (s1 & ~u) & ~Z == 0 and s2 & ~Z == 0:
                    hits += 1
                    if hits > 1:
                        break
            if hits != (1 if in_target else 0):
                m = tuple(2 if (s2 >> j) & 1 else (s1 >> j) & 1 for j in range(n))
                if hits == 0:
                    reason = "not covered"
                elif not in_target:
                    reason = "outside the ideal"
                else:
                    reason = "covered more than once"
                return VerifyReport(False, m, reason)
    return VerifyReport(True)


def product(D1: StanleyDecomposition, D2: StanleyDecomposition) -> StanleyDecomposition:
    """Decomposition of ``I S cap J S`` from decompositions of ``I`` and ``J``
    living on disjoint sets of variables."""
    if D1.n != D2.n:
        raise ContextMismatch("decompositions live in different rings")
    if D1.ambient & D2.ambient:
        raise ValueError(
            f"variable sets overlap: {format_varset(D1.ambient)} and {format_varset(D2.ambient)}")
    spaces = tuple(
        StanleySpace(tuple(a + b for a, b in zip(s.u, t.u)), s.Z | t.Z)
        for s in D1.spaces for t in D2.spaces
    )
    return StanleyDecomposition(spaces, intersect(D1.target, D2.target), D1.ambient | D2.ambient)


def extend_free(D: StanleyDecomposition, extra: VarSet) -> StanleyDecomposition:
    """Pass to ``D``'s ring with the variables ``extra`` adjoined."""
    if extra & D.ambient:
        raise ValueError(f"variables {format_varset(extra & D.ambient)} already in the ring")
    if extra >> D.n:
        raise ContextMismatch("extra variables outside the ring")
    spaces = tuple(StanleySpace(s.u, s.Z | extra) for s in D.spaces)
    return StanleyDecomposition(spaces, D.target, D.ambient | extra)


def direct_sum(parts: Sequence[StanleyDecomposition], target: SqfIdeal,
               ambient: Optional[VarSet] = None) -> StanleyDecomposition:
    """Concatenate decompositions of pieces of a direct sum of ``target``."""
    spaces = tuple(s for D in parts for s in D.spaces)
    return StanleyDecomposition(spaces, target, -1 if ambient is None else ambient)
