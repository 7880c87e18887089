"""Variable sets, squarefree monomials and squarefree monomial ideals.

A variable set is stored as an int bitmask: variable ``x_j`` (1-based) is
bit ``j - 1``.  Monomials are tuples of exponents of length ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VARS = 16

VarSet = int
Monomial = tuple[int, ...]


class ContextMismatch(ValueError):
    pass


def varset(indices: Iterable[int]) -> VarSet:
    mask = 0
    for j in indices:
        if j < 1:
            raise ValueError(f"variable indices are 1-based, got {j}")
        mask |= 1 << (j - 1)
    return mask


def members(mask: VarSet) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def size(mask: VarSet) -> int:
    return bin(mask).count("1")


def full(n: int) -> VarSet:
    return (1 << n) - 1


def set_key(mask: VarSet) -> tuple[int, tuple[int, ...]]:
    """Canonical order: cardinality first, then lexicographic on indices."""
    return size(mask), members(mask)


def subsets(mask: VarSet) -> Iterable[VarSet]:
    """All submasks of ``mask`` (including 0 and ``mask``)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def format_varset(mask: VarSet) -> str:
    return "{" + ",".join(str(j) for j in members(mask)) + "}"


def monomial(n: int, indices: Iterable[int] = ()) -> Monomial:
    """Squarefree monomial with the given support."""
    exps = [0] * n
    for j in indices:
        exps[j - 1] = 1
    return tuple(exps)


def support(m: Sequence[int]) -> VarSet:
    mask = 0
    for j, e in enumerate(m):
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            mask |= 1 << j
    return mask


def monomial_of(mask: VarSet, n: int) -> Monomial:
    return tuple((mask >> j) & 1 for j in range(n))


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{j}")
        elif e > 1:
            parts.append(f"x{j}^{e}")
    return "".join(parts) or "1"


def minimalize(gens: Iterable[VarSet]) -> tuple[VarSet, ...]:
    """Antichain reduction, returned in canonical order."""
    uniq = sorted(set(gens), key=set_key)
    kept: list[VarSet] = []
    for g in uniq:
        if not any(h & g == h for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class SqfIdeal:
    """Squarefree monomial ideal of ``K[x_1..x_n]`` given by minimal supports.

    An empty ``gens`` is the zero ideal.  The unit ideal cannot be built.
    """

    gens: tuple[VarSet, ...]
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"n must lie in 1..{MAX_VARS}, got {self.n}")
        if any(g == 0 for g in self.gens):
            raise ValueError("the unit ideal is not representable")
        if any(g >> self.n for g in self.gens):
            raise ValueError(f"generator outside x1..x{self.n}")
        canon = minimalize(self.gens)
        if canon != tuple(self.gens):
            object.__setattr__(self, "gens", canon)

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], n: int) -> SqfIdeal:
        return cls(tuple(varset(s) for s in supports), n)

    @classmethod
    def prime(cls, indices: Iterable[int], n: int) -> SqfIdeal:
        return cls(tuple(1 << (j - 1) for j in indices), n)

    @classmethod
    def zero(cls, n: int) -> SqfIdeal:
        return cls((), n)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def variables(self) -> VarSet:
        """Union of the generator supports."""
        out = 0
        for g in self.gens:
            out |= g
        return out

    def contains_support(self, sigma: VarSet) -> bool:
        return any(g & sigma == g for g in self.gens)

    def supports(self) -> list[list[int]]:
        return [list(members(g)) for g in self.gens]

    def __str__(self):
        if self.is_zero:
            return "0"
        return "(" + ",".join(format_monomial(monomial_of(g, self.n)) for g in self.gens) + ")"


def _check_same(I: SqfIdeal, J: SqfIdeal) -> None:
    if I.n != J.n:
        raise ContextMismatch(f"ideals live in different rings (n={I.n} vs n={J.n})")


def membership(m: Sequence[int], I: SqfIdeal) -> bool:
    if len(m) != I.n:
        raise ContextMismatch(f"monomial has {len(m)} exponents, ring has {I.n} variables")
    return I.contains_support(support(m))


def intersect(I: SqfIdeal, J: SqfIdeal) -> SqfIdeal:
    _check_same(I, J)
    return SqfIdeal(tuple(g | h for g in I.gens for h in J.gens), I.n)


def intersect_all(ideals: Sequence[SqfIdeal]) -> SqfIdeal:
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def restrict(I: SqfIdeal, V: VarSet) -> SqfIdeal:
    """``I`` intersected with the subring on ``V`` (may be the zero ideal)."""
    if V >> I.n:
        raise ValueError(f"variable set outside x1..x{I.n}")
    return SqfIdeal(tuple(g for g in I.gens if g & V == g), I.n)


def height_sum(P: VarSet, Q: VarSet) -> int:
    """Height of the sum of two monomial primes."""
    return size(P | Q)
