"""Graph products of cyclic-type vertex groups over a commutation graph.

Three kinds are supported, differing only in the vertex group:

* ``coxeter``     - order-two vertex groups (right-angled Coxeter);
* ``artin``       - infinite cyclic vertex groups (right-angled Artin);
* ``circulation`` - rational rotation angles in [0,1), an exact slice of
  the circle group.

Words are sequences of (vertex, value) letters; letters at vertices joined
by an edge commute.  ``normal_form`` merges letters at equal vertices
whenever the letters between them commute past, then fixes a canonical
order: peel off maximal mutually-commuting blocks from the right and sort
each block by vertex.  Two words are equal in the group exactly when their
normal forms agree letterwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .simplicial import SimplicialComplex

KINDS = ("coxeter", "artin", "circulation")

Letter = tuple[int, object]


@dataclass(frozen=True)
class CommutationGraph:
    """Symmetric adjacency on vertices 1..m, as a neighbor mask per vertex."""

    m: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.m + 1 or self.adjacency[0]:
            raise ValueError("adjacency must have one mask per vertex, index 0 unused")
        for v in range(1, self.m + 1):
            mask = self.adjacency[v]
            if mask >> self.m:
                raise ValueError("neighbor out of range")
            if mask & (1 << (v - 1)):
                raise ValueError("no loops allowed")
            for w in range(1, self.m + 1):
                if (mask >> (w - 1)) & 1 != (self.adjacency[w] >> (v - 1)) & 1:
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_complex(cls, K: SimplicialComplex) -> "CommutationGraph":
        return cls(K.m, K.adjacency_masks())

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[tuple[int, int]]) -> "CommutationGraph":
        adj = [0] * (m + 1)
        for i, j in edges:
            if not (1 <= i <= m and 1 <= j <= m) or i == j:
                raise ValueError(f"bad edge ({i}, {j})")
            adj[i] |= 1 << (j - 1)
            adj[j] |= 1 << (i - 1)
        return cls(m, tuple(adj))

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] & (1 << (j - 1)))

    def complete_on(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.adjacent(a, b) for k, a in enumerate(vs) for b in vs[k + 1 :])


def _normalize_value(kind: str, value) -> object | None:
    """Canonical letter value, or None for the identity."""
    if kind == "coxeter":
        return 1
    if kind == "artin":
        e = int(value)
        return e if e else None
    q = Fraction(value) % 1
    return q if q else None


def _combine(kind: str, a, b) -> object | None:
    if kind == "coxeter":
        return None
    if kind == "artin":
        s = a + b
        return s if s else None
    s = (a + b) % 1
    return s if s else None


def _invert_value(kind: str, a):
    if kind == "coxeter":
        return 1
    if kind == "artin":
        return -a
    return (1 - a) % 1


@dataclass(frozen=True)
class GroupWord:
    kind: str
    graph: CommutationGraph
    letters: tuple[Letter, ...]

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        _check_ambient(self, other)
        return GroupWord(self.kind, self.graph, self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        inv = tuple(
            (v, _invert_value(self.kind, val)) for v, val in reversed(self.letters)
        )
        return GroupWord(self.kind, self.graph, inv)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


def word(kind: str, graph: CommutationGraph, letters: Iterable[Sequence]) -> GroupWord:
    """Build a word, dropping identity letters and normalizing values."""
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}")
    out = []
    for v, value in letters:
        if not 1 <= v <= graph.m:
            raise ValueError(f"vertex {v} out of range 1..{graph.m}")
        norm = _normalize_value(kind, value)
        if norm is not None:
            out.append((v, norm))
    return GroupWord(kind, graph, tuple(out))


def identity(kind: str, graph: CommutationGraph) -> GroupWord:
    return GroupWord(kind, graph, ())


def _check_ambient(w1: GroupWord, w2: GroupWord) -> None:
    if w1.kind != w2.kind or w1.graph != w2.graph:
        raise ValueError("words live in different groups")


def _fully_reduce(kind: str, adj: tuple[int, ...], letters: list[Letter]) -> list[Letter]:
    """Merge same-vertex letters whenever everything between commutes with them."""
    changed = True
    while changed:
        changed = False
        n = len(letters)
        for i in range(n):
            v = letters[i][0]
            neighbors = adj[v]
            for j in range(i + 1, n):
                vj = letters[j][0]
                if vj == v:
                    merged = _combine(kind, letters[i][1], letters[j][1])
                    del letters[j]
                    if merged is None:
                        del letters[i]
                    else:
                        letters[i] = (v, merged)
                    changed = True
                    break
                if not (neighbors >> (vj - 1)) & 1:
                    break
            if changed:
                break
    return letters


def _block_split(adj: tuple[int, ...], letters: Sequence[Letter]) -> list[list[Letter]]:
    """Peel maximal commuting blocks off the right end; leftmost block first."""
    blocks: list[list[Letter]] = []
    rest = list(letters)
    while rest:
        seen = 0
        block: list[Letter] = []
        keep: list[Letter] = []
        for letter in reversed(rest):
            v = letter[0]
            if seen & ~adj[v] == 0:
                block.append(letter)
            else:
                keep.append(letter)
            seen |= 1 << (v - 1)
        block.sort()
        keep.reverse()
        blocks.append(block)
        rest = keep
    blocks.reverse()
    return blocks


def normal_form(w: GroupWord) -> GroupWord:
    reduced = _fully_reduce(w.kind, w.graph.adjacency, list(w.letters))
    blocks = _block_split(w.graph.adjacency, reduced)
    flat = tuple(letter for block in blocks for letter in block)
    return GroupWord(w.kind, w.graph, flat)


def equal(w1: GroupWord, w2: GroupWord) -> bool:
    _check_ambient(w1, w2)
    return normal_form(w1).letters == normal_form(w2).letters


def wordlength(w: GroupWord) -> int:
    """Syllable count of the reduced word."""
    return len(normal_form(w).letters)


def cartier_foata_blocks(w: GroupWord) -> list[tuple[Letter, ...]]:
    """Unique decomposition of the reduced word into maximal commuting blocks."""
    reduced = _fully_reduce(w.kind, w.graph.adjacency, list(w.letters))
    return [tuple(block) for block in _block_split(w.graph.adjacency, reduced)]


def abelianize(w: GroupWord):
    """Per-vertex letter totals: in Z/2, Z, or Q/Z according to the kind."""
    if w.kind == "coxeter":
        totals = [0] * (w.graph.m + 1)
        for v, _ in w.letters:
            totals[v] ^= 1
        return tuple(totals[1:])
    if w.kind == "artin":
        sums = [0] * (w.graph.m + 1)
        for v, e in w.letters:
            sums[v] += e
        return tuple(sums[1:])
    fracs = [Fraction(0)] * (w.graph.m + 1)
    for v, q in w.letters:
        fracs[v] = (fracs[v] + q) % 1
    return tuple(fracs[1:])


def in_commutator_subgroup(w: GroupWord) -> bool:
    return not any(abelianize(w))


def is_abelian_restriction(K: SimplicialComplex, vertices: Iterable[int]) -> bool:
    """True when the subgroup generated by the vertex subset is abelian."""
    vs = list(vertices)
    for v in vs:
        if not 1 <= v <= K.m:
            raise ValueError(f"vertex {v} out of range 1..{K.m}")
    graph = CommutationGraph.from_complex(K)
    return graph.complete_on(vs)


# -- word literals ----------------------------------------------------

_ARTIN_RE = re.compile(r"v(\d+)\^(-?\d+)$")
_COXETER_RE = re.compile(r"a(\d+)$")
_CIRC_RE = re.compile(r"t(\d+)@(-?\d+)/(\d+)$")


def parse_word(kind: str, graph: CommutationGraph, text: str) -> GroupWord:
    """Parse space-separated letters: v<i>^<e>, a<i>, or t<i>@<p>/<q>."""
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}")
    tokens = text.split()
    if tokens == ["e"]:
        tokens = []
    letters = []
    for tok in tokens:
        if kind == "artin":
            match = _ARTIN_RE.fullmatch(tok)
            if not match:
                raise ValueError(f"bad artin letter {tok!r} (expected v<i>^<e>)")
            letters.append((int(match.group(1)), int(match.group(2))))
        elif kind == "coxeter":
            match = _COXETER_RE.fullmatch(tok)
            if not match:
                raise ValueError(f"bad coxeter letter {tok!r} (expected a<i>)")
            letters.append((int(match.group(1)), 1))
        else:
            match = _CIRC_RE.fullmatch(tok)
            if not match:
                raise ValueError(f"bad circulation letter {tok!r} (expected t<i>@<p>/<q>)")
            letters.append(
                (int(match.group(1)), Fraction(int(match.group(2)), int(match.group(3))))
            )
    return word(kind, graph, letters)


def format_word(w: GroupWord) -> str:
    if not w.letters:
        return "e"
    if w.kind == "artin":
        return " ".join(f"v{v}^{e}" for v, e in w.letters)
    if w.kind == "coxeter":
        return " ".join(f"a{v}" for v, _ in w.letters)
    return " ".join(f"t{v}@{q.numerator}/{q.denominator}" for v, q in w.letters)
