"""Cubical model of the real moment-angle complex of K inside [-1,1]^m.

A cell is a pair (J, signs): J a face of K spanning the free coordinates,
and a choice of +-1 for every coordinate outside J.  The sign-flip action
of C2^m permutes cells; coordinate i fixes a cell exactly when i lies in J.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import iter_vertices, popcount, vertices_of
from .homology import CubicalComplex, HomologyGroup
from .simplicial import SimplicialComplex

MAX_MA_VERTICES = 16


@dataclass(frozen=True)
class MACell:
    """Cube with free coordinates J; ``neg`` marks the -1 coordinates outside J."""

    m: int
    free: int
    neg: int

    def __post_init__(self) -> None:
        if self.neg & self.free:
            raise ValueError("sign bits must avoid the free coordinates")
        if (self.free | self.neg) >> self.m:
            raise ValueError("coordinate out of range")

    @property
    def dim(self) -> int:
        return popcount(self.free)

    def free_vertices(self) -> tuple[int, ...]:
        return vertices_of(self.free)

    def signs(self) -> dict[int, int]:
        fixed = ((1 << self.m) - 1) & ~self.free
        return {v: -1 if self.neg & (1 << (v - 1)) else 1 for v in iter_vertices(fixed)}

    def __repr__(self) -> str:
        sgn = "".join(
            "*" if self.free & (1 << i) else ("-" if self.neg & (1 << i) else "+")
            for i in range(self.m)
        )
        return f"MACell({sgn})"


def _ma_boundary(cell: MACell) -> list[tuple[int, MACell]]:
    terms = []
    sign = 1
    for v in iter_vertices(cell.free):
        bit = 1 << (v - 1)
        rest = cell.free & ~bit
        terms.append((sign, MACell(cell.m, rest, cell.neg)))
        terms.append((-sign, MACell(cell.m, rest, cell.neg | bit)))
        sign = -sign
    return terms


def real_moment_angle(K: SimplicialComplex) -> CubicalComplex:
    """All cells (J, signs) with J a face of K."""
    if K.m > MAX_MA_VERTICES:
        raise ValueError(
            f"moment-angle model limited to {MAX_MA_VERTICES} vertices, got {K.m}"
        )
    full = (1 << K.m) - 1
    by_dim: dict[int, list[MACell]] = {}
    for J in K.face_masks:
        fixed = full & ~J
        k = popcount(J)
        bucket = by_dim.setdefault(k, [])
        neg_bits = vertices_of(fixed)
        for choice in range(1 << len(neg_bits)):
            neg = 0
            for i, v in enumerate(neg_bits):
                if choice & (1 << i):
                    neg |= 1 << (v - 1)
            bucket.append(MACell(K.m, J, neg))
    top = max(by_dim) if by_dim else 0
    cells = [
        sorted(by_dim.get(k, []), key=lambda c: (c.free, c.neg)) for k in range(top + 1)
    ]
    return CubicalComplex(cells, _ma_boundary)


def moment_angle_homology(K: SimplicialComplex, mod2: bool = False) -> list[HomologyGroup]:
    return real_moment_angle(K).homology(mod2=mod2)


def stabilizer(cell: MACell) -> tuple[int, ...]:
    """Coordinates acting trivially on the cell: exactly its free vertex set."""
    return cell.free_vertices()


def act(cell: MACell, generator: int) -> MACell:
    """Apply the sign flip in coordinate ``generator``."""
    bit = 1 << (generator - 1)
    if cell.free & bit:
        return cell
    return MACell(cell.m, cell.free, cell.neg ^ bit)


def orbit_counts(K: SimplicialComplex) -> tuple[int, ...]:
    """Number of sign-flip orbits of k-cells: the faces of K of size k."""
    top = max(popcount(J) for J in K.face_masks)
    counts = [0] * (top + 1)
    for J in K.face_masks:
        counts[popcount(J)] += 1
    return tuple(counts)
