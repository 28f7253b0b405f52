"""Connectivity invariants read off from the missing faces of a complex.

``c`` is the minimal dimension of a missing face with at least three
vertices (infinite exactly when the complex is flag); ``c_prime`` drops the
size restriction (infinite exactly for a full simplex).  Each bound yields
a derived degree per group kind: one less for coxeter/artin, doubled for
circulation.  Infinity is represented by ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._bits import popcount
from .simplicial import SimplicialComplex

GROUP_KINDS = ("coxeter", "artin", "circulation")


def derived_degrees(c) -> dict[str, object]:
    """Degree bound per group kind from a minimal missing-face dimension."""
    return {"coxeter": c - 1, "artin": c - 1, "circulation": 2 * c}


@dataclass(frozen=True)
class ConnectivityReport:
    c: object
    c_prime: object
    flag: bool

    @property
    def d(self) -> dict[str, object]:
        return derived_degrees(self.c)

    @property
    def d_prime(self) -> dict[str, object]:
        return derived_degrees(self.c_prime)


def connectivity_report(K: SimplicialComplex) -> ConnectivityReport:
    dims_large = [popcount(w) - 1 for w in K.missing_face_masks() if popcount(w) >= 3]
    dims_all = [popcount(w) - 1 for w in K.missing_face_masks()]
    c = min(dims_large) if dims_large else math.inf
    c_prime = min(dims_all) if dims_all else math.inf
    return ConnectivityReport(c=c, c_prime=c_prime, flag=c == math.inf)


def pair_connectivity(K: SimplicialComplex, L: SimplicialComplex):
    """(c, derived degrees) for a subcomplex pair K <= L on the same vertices."""
    if K.m != L.m:
        raise ValueError("complexes must share a vertex set")
    if not K.face_masks <= L.face_masks:
        raise ValueError("first complex must be a subcomplex of the second")
    if L.face_masks <= K.flagify().face_masks:
        c = connectivity_report(K).c
    else:
        c = 1
    return c, derived_degrees(c)


def flag_equivalence(K: SimplicialComplex) -> bool:
    """True when K is flag: the colimit group then models the based loops exactly."""
    return K.is_flag()
