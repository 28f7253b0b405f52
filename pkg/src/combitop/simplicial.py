"""Finite abstract simplicial complexes on vertices 1..m.

Faces are stored as bitmasks over the vertex set (m <= 64).  Every complex
contains the empty face and all singletons; constructors enforce both, and
downward closure is validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._bits import iter_vertices, mask_of, popcount, submasks, vertices_of

MAX_VERTICES = 64


def _face_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (popcount(mask), vertices_of(mask))


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of subsets of {1..m}, as bitmasks."""

    m: int
    face_masks: frozenset[int]

    def __post_init__(self) -> None:
        if not 0 <= self.m <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.m}")
        full = (1 << self.m) - 1
        if 0 not in self.face_masks:
            raise ValueError("the empty face is missing")
        for v in range(1, self.m + 1):
            if (1 << (v - 1)) not in self.face_masks:
                raise ValueError(f"singleton {{{v}}} is missing")
        for f in self.face_masks:
            if f & ~full:
                raise ValueError("face contains a vertex outside 1..m")
            # downward closure: dropping any one vertex stays a face
            rest = f
            while rest:
                low = rest & -rest
                if (f ^ low) not in self.face_masks:
                    raise ValueError("face family is not downward closed")
                rest ^= low

    # -- construction ------------------------------------------------

    @classmethod
    def from_maximal_faces(cls, m: int, maximal: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given subsets, plus all singletons and the empty face."""
        if not 0 <= m <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {m}")
        faces = {0}
        for v in range(1, m + 1):
            faces.add(1 << (v - 1))
        for subset in maximal:
            mask = 0
            for v in subset:
                if not 1 <= v <= m:
                    raise ValueError(f"vertex {v} out of range 1..{m}")
                mask |= 1 << (v - 1)
            faces.update(submasks(mask))
        return cls(m, frozenset(faces))

    # -- basic queries -----------------------------------------------

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, {len(self.face_masks)} faces)"

    def has_face(self, vertices: Iterable[int]) -> bool:
        return mask_of(vertices) in self.face_masks

    def faces(self) -> list[tuple[int, ...]]:
        """All faces (including the empty one) as sorted vertex tuples."""
        return [vertices_of(f) for f in sorted(self.face_masks, key=_face_sort_key)]

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.face_masks) - 1

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_0, ..., f_dim); the empty face is not counted."""
        counts = [0] * (self.dim + 1)
        for f in self.face_masks:
            if f:
                counts[popcount(f) - 1] += 1
        return tuple(counts)

    def edges(self) -> list[tuple[int, int]]:
        """The 1-skeleton as a sorted list of vertex pairs."""
        out = [vertices_of(f) for f in self.face_masks if popcount(f) == 2]
        out.sort()
        return out  # type: ignore[return-value]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbor mask per vertex (index 0 unused)."""
        adj = [0] * (self.m + 1)
        for i, j in self.edges():
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return tuple(adj)

    # -- missing faces and flag structure ----------------------------

    def missing_face_masks(self) -> set[int]:
        """Minimal non-faces: W not a face whose codimension-1 subsets all are."""
        candidates = set()
        for f in self.face_masks:
            for v in range(self.m):
                bit = 1 << v
                if not f & bit:
                    cand = f | bit
                    if cand not in self.face_masks:
                        candidates.add(cand)
        out = set()
        for cand in candidates:
            rest = cand
            minimal = True
            while rest:
                low = rest & -rest
                if (cand ^ low) not in self.face_masks:
                    minimal = False
                    break
                rest ^= low
            if minimal:
                out.add(cand)
        return out

    def missing_faces(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in sorted(self.missing_face_masks(), key=_face_sort_key)]

    def is_flag(self) -> bool:
        """True when every missing face is a pair of vertices."""
        return all(popcount(w) == 2 for w in self.missing_face_masks())

    def flagify(self) -> "SimplicialComplex":
        """The minimal flag complex containing this one: the clique complex of the 1-skeleton."""
        adj = self.adjacency_masks()
        cliques = {0}
        stack = [(1 << (v - 1), adj[v]) for v in range(1, self.m + 1)]
        while stack:
            mask, common = stack.pop()
            cliques.add(mask)
            # extend only by vertices above the current maximum
            top = mask.bit_length()
            ext = common >> top << top
            while ext:
                low = ext & -ext
                v = low.bit_length()
                stack.append((mask | low, common & adj[v]))
                ext ^= low
        return SimplicialComplex(self.m, frozenset(cliques))

    # -- derived complexes -------------------------------------------

    def restrict(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """Restriction to a vertex subset, relabeled to 1..|W| in ascending order."""
        wmask = 0
        for v in vertices:
            if not 1 <= v <= self.m:
                raise ValueError(f"vertex {v} out of range 1..{self.m}")
            wmask |= 1 << (v - 1)
        order = vertices_of(wmask)
        relabel = {v: i + 1 for i, v in enumerate(order)}
        faces = set()
        for f in self.face_masks:
            g = f & wmask
            faces.add(mask_of(relabel[v] for v in iter_vertices(g)))
        return SimplicialComplex(len(order), frozenset(faces))

    def skeleton(self, j: int) -> "SimplicialComplex":
        """Subcomplex of faces of dimension at most j."""
        if j < 0:
            raise ValueError("skeleton dimension must be >= 0")
        return SimplicialComplex(
            self.m, frozenset(f for f in self.face_masks if popcount(f) <= j + 1)
        )

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """Complex of chains of nonempty faces, ordered by strict inclusion."""
        verts = sorted((f for f in self.face_masks if f), key=_face_sort_key)
        index = {f: i + 1 for i, f in enumerate(verts)}
        by_size: dict[int, list[int]] = {}
        for f in verts:
            by_size.setdefault(popcount(f), []).append(f)
        chains: list[list[int]] = []

        def grow(chain: list[int]) -> None:
            top = chain[-1]
            exts = [g for g in by_size.get(popcount(top) + 1, []) if top & g == top]
            if not exts:
                # no one-vertex extension means maximal, by downward closure
                chains.append(list(chain))
            for g in exts:
                chain.append(g)
                grow(chain)
                chain.pop()

        for v in by_size.get(1, []):
            grow([v])
        return SimplicialComplex.from_maximal_faces(
            len(verts), [[index[f] for f in chain] for chain in chains]
        )


# -- stock complexes -------------------------------------------------


def full_simplex(m: int) -> SimplicialComplex:
    """The complex of all subsets of {1..m}."""
    return SimplicialComplex.from_maximal_faces(m, [range(1, m + 1)])


def simplex_boundary(m: int) -> SimplicialComplex:
    """All proper subsets of {1..m}: the boundary of an (m-1)-simplex."""
    if m < 2:
        raise ValueError("need at least two vertices")
    verts = range(1, m + 1)
    return SimplicialComplex.from_maximal_faces(
        m, [[v for v in verts if v != skip] for skip in verts]
    )


def polygon_boundary(m: int) -> SimplicialComplex:
    """The boundary of a planar m-gon (m >= 3): an m-cycle of edges."""
    if m < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    edges = [[i, i % m + 1] for i in range(1, m + 1)]
    return SimplicialComplex.from_maximal_faces(m, edges)


def discrete_complex(m: int) -> SimplicialComplex:
    """m isolated vertices."""
    return SimplicialComplex.from_maximal_faces(m, [])
