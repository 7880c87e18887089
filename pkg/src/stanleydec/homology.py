"""Depth of squarefree monomial ideals through their Stanley-Reisner complex.

``depth(S/I) = 1 + max{i : the i-skeleton of Delta is Cohen-Macaulay}`` and
Cohen-Macaulayness is tested with Reisner's criterion over the rationals.
Faces are bitmasks like variable sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .ideal import SqfIdeal, VarSet, full, members, size, subsets


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                # exact division: Bareiss invariant
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[VarSet, ...]
    vertices: VarSet

    def faces(self) -> frozenset[VarSet]:
        out = set()
        for f in self.facets:
            out.update(subsets(f))
        return frozenset(out)

    @property
    def dim(self) -> int:
        return max(size(f) for f in self.facets) - 1

    @classmethod
    def from_faces(cls, faces, vertices: VarSet = 0) -> SimplicialComplex:
        faces = set(faces)
        facets = [f for f in faces if not any(g != f and g & f == f for g in faces)]
        facets.sort(key=lambda f: (-size(f), members(f)))
        return cls(tuple(facets), vertices)


def stanley_reisner(I: SqfIdeal, ambient: Optional[VarSet] = None) -> SimplicialComplex:
    """Complex of supports inside ``ambient`` that are not in ``I``."""
    if I.is_zero:
        raise ValueError("zero ideal: depth(I) is not defined")
    amb = full(I.n) if ambient is None else ambient
    faces = [s for s in subsets(amb) if not I.contains_support(s)]
    return SimplicialComplex.from_faces(faces, amb)


def _boundary_matrix(rows: Sequence[VarSet], cols: Sequence[VarSet]) -> list[list[int]]:
    pos = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for i, v in enumerate(members(face)):
            mat[pos[face & ~(1 << (v - 1))]][j] = -1 if i % 2 else 1
    return mat


@lru_cache(maxsize=None)
def _homology(faces: frozenset[VarSet]) -> tuple[int, ...]:
    if not faces:
        raise ValueError("the void complex has no reduced homology here")
    top = max(size(f) for f in faces)
    by_size = [sorted(f for f in faces if size(f) == k) for k in range(top + 1)]
    # ranks of d_k : C_{k-1} -> C_{k-2}, chains indexed by face cardinality k
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        if by_size[k] and by_size[k - 1]:
            ranks[k] = integer_rank(_boundary_matrix(by_size[k - 1], by_size[k]))
    return tuple(len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def reduced_homology_ranks(delta: SimplicialComplex) -> list[int]:
    """Ranks of reduced homology in dimensions -1, 0, ..., dim."""
    return list(_homology(delta.faces()))


def link(faces: frozenset[VarSet], F: VarSet) -> frozenset[VarSet]:
    return frozenset(G & ~F for G in faces if G & F == F)


@lru_cache(maxsize=None)
def _faces_cm(faces: frozenset[VarSet]) -> bool:
    for F in faces:
        lk = link(faces, F)
        dim = max(size(g) for g in lk) - 1
        # H~_i for i = -1 .. dim-1
        if any(_homology(lk)[: dim + 1]):
            return False
    return True


def is_cohen_macaulay(delta: SimplicialComplex) -> bool:
    return _faces_cm(delta.faces())


def skeleton(faces: frozenset[VarSet], i: int) -> frozenset[VarSet]:
    return frozenset(f for f in faces if size(f) <= i + 1)


def depth_quotient(I: SqfIdeal, ambient: Optional[VarSet] = None) -> int:
    """depth(S/I) for ``S`` the polynomial ring on ``ambient``."""
    faces = stanley_reisner(I, ambient).faces()
    dim = max(size(f) for f in faces) - 1
    best = -1
    for i in range(dim + 1):
        if _faces_cm(skeleton(faces, i)):
            best = i
    return best + 1


def depth_oracle(I: SqfIdeal, ambient: Optional[VarSet] = None) -> int:
    """depth(I) = depth(S/I) + 1."""
    return depth_quotient(I, ambient) + 1


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic, the empty face counted in dimension -1."""
    return sum((-1) ** (size(f) - 1) for f in delta.faces())
