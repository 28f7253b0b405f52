"""Coordinate subspace arrangements attached to a complex.

The arrangement is generated by the coordinate subspaces of the minimal
non-faces; a point lies in the complement exactly when its zero set of
coordinates is a face.  Over the reals the complement has the homology of
the real moment-angle model, which this module reuses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import HomologyGroup
from .macomplex import moment_angle_homology
from .simplicial import SimplicialComplex

FIELDS = ("R", "C", "E")

_CODIM_PER_VERTEX = {"R": 1, "C": 2, "E": 1}


@dataclass(frozen=True)
class Arrangement:
    field: str
    generators: tuple[tuple[int, ...], ...]

    def codimensions(self) -> tuple[int, ...]:
        """Real codimension of each generating subspace."""
        per = _CODIM_PER_VERTEX[self.field]
        return tuple(per * len(g) for g in self.generators)


def arrangement(K: SimplicialComplex, field: str) -> Arrangement:
    """Maximal subspaces of the arrangement: one per minimal non-face."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    return Arrangement(field, tuple(K.missing_faces()))


def in_complement(K: SimplicialComplex, zero_set) -> bool:
    """Does a point whose vanishing coordinates are ``zero_set`` avoid the arrangement?"""
    return K.has_face(zero_set)


def real_complement_homology(
    K: SimplicialComplex, mod2: bool = False
) -> list[HomologyGroup]:
    """Homology of the real arrangement complement, via the moment-angle model."""
    return moment_angle_homology(K, mod2=mod2)
