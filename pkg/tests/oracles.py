"""Independent brute-force oracles used to freeze expected test values.

Everything here recomputes results from first principles (exhaustive
enumeration, single-step rewriting closures, determinant divisors) without
touching the library's own algorithms beyond the face-set representation.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from combitop.simplicial import SimplicialComplex


# -- complexes ---------------------------------------------------------


def face_sets(K: SimplicialComplex) -> set[frozenset[int]]:
    return {frozenset(f) for f in K.faces()}


def brute_missing_faces(K: SimplicialComplex) -> set[frozenset[int]]:
    """Minimal non-faces by scanning every vertex subset."""
    faces = face_sets(K)
    out = set()
    for r in range(1, K.m + 1):
        for sub in itertools.combinations(range(1, K.m + 1), r):
            w = frozenset(sub)
            if w in faces:
                continue
            if all(w - {v} in faces for v in w):
                out.add(w)
    return out


def brute_clique_complex(K: SimplicialComplex) -> set[frozenset[int]]:
    """All subsets whose pairs are edges, by scanning every vertex subset."""
    edges = {frozenset(e) for e in K.edges()}
    out = {frozenset()}
    for r in range(1, K.m + 1):
        for sub in itertools.combinations(range(1, K.m + 1), r):
            if all(frozenset(p) in edges for p in itertools.combinations(sub, 2)):
                out.add(frozenset(sub))
    return out


def random_complex(m: int, rng: random.Random) -> SimplicialComplex:
    """Downward closure of a random batch of small vertex subsets."""
    n_faces = rng.randint(0, 2 * m)
    maximal = []
    for _ in range(n_faces):
        size = rng.randint(1, min(m, 4))
        maximal.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex.from_maximal_faces(m, maximal)


def random_complexes(count: int, max_m: int, seed: int) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    return [random_complex(rng.randint(1, max_m), rng) for _ in range(count)]


# -- monomial counting ---------------------------------------------------


def brute_monomial_count(K: SimplicialComplex, mode: str, degree: int) -> int:
    """Count exponent vectors of a given degree with support a face."""
    faces = face_sets(K)
    if degree == 0:
        return 1
    if mode == "exterior":
        return sum(1 for f in faces if len(f) == degree)
    step = 2 if mode == "complex" else 1
    if degree % step:
        return 0
    total = degree // step
    count = 0
    for vec in itertools.product(range(total + 1), repeat=K.m):
        if sum(vec) != total:
            continue
        support = frozenset(v + 1 for v, e in enumerate(vec) if e)
        if support in faces:
            count += 1
    return count


# -- integer linear algebra ----------------------------------------------


def det_int(mat: list[list[int]]) -> int:
    """Integer determinant by cofactor expansion (small matrices only)."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * det_int(minor)
    return total


def snf_by_determinant_divisors(mat: list[list[int]]) -> list[int]:
    """Smith diagonal via d_k = gcd of all k x k minors."""
    nrows, ncols = len(mat), len(mat[0]) if mat else 0
    divisors = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rows in itertools.combinations(range(nrows), k):
            for cols in itertools.combinations(range(ncols), k):
                sub = [[mat[i][j] for j in cols] for i in rows]
                g = math.gcd(g, det_int(sub))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


# -- word rewriting closure ------------------------------------------------

# Letters are (vertex, value) pairs; words are tuples of letters.  Values:
# 1 for coxeter letters, nonzero ints for artin, Fractions in (0,1) for
# circulation.  The only moves are single adjacent swaps across an edge of
# the commutation graph and single adjacent same-vertex merges.


def _merge_value(kind: str, a, b):
    if kind == "coxeter":
        return None
    if kind == "artin":
        s = a + b
        return s if s else None
    s = (a + b) % 1
    return s if s else None


def single_moves(kind: str, adj: tuple[int, ...], w: tuple) -> list[tuple]:
    out = []
    for k in range(len(w) - 1):
        v1, e1 = w[k]
        v2, e2 = w[k + 1]
        if v1 == v2:
            merged = _merge_value(kind, e1, e2)
            if merged is None:
                out.append(w[:k] + w[k + 2 :])
            else:
                out.append(w[:k] + ((v1, merged),) + w[k + 2 :])
        elif (adj[v1] >> (v2 - 1)) & 1:
            out.append(w[:k] + (w[k + 1], w[k]) + w[k + 2 :])
    return out


class RewritingOracle:
    """Equality via the reflexive-symmetric-transitive closure of single moves.

    The closure is explored over all words reachable from the seeds; two
    seed words are equal in the group exactly when they land in the same
    connected component.
    """

    def __init__(self, kind: str, adj: tuple[int, ...], seeds):
        self.kind = kind
        self.adj = adj
        self._parent: dict[tuple, tuple] = {}
        self._explore(seeds)
        self._canon: dict[tuple, tuple] = {}
        roots: dict[tuple, tuple] = {}
        for w in self._parent:
            root = self._find(w)
            best = roots.get(root)
            key = (len(w), w)
            if best is None or key < (len(best), best):
                roots[root] = w
        for w in self._parent:
            self._canon[w] = roots[self._find(w)]

    def _find(self, w):
        parent = self._parent
        root = w
        while parent[root] != root:
            root = parent[root]
        while parent[w] != root:
            parent[w], w = root, parent[w]
        return root

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[ra] = rb

    def _explore(self, seeds):
        stack = []
        for w in seeds:
            if w not in self._parent:
                self._parent[w] = w
                stack.append(w)
        while stack:
            w = stack.pop()
            for w2 in single_moves(self.kind, self.adj, w):
                if w2 not in self._parent:
                    self._parent[w2] = w2
                    stack.append(w2)
                self._union(w, w2)

    def canonical(self, w: tuple) -> tuple:
        return self._canon[w]

    def equal(self, w1: tuple, w2: tuple) -> bool:
        return self._canon[w1] == self._canon[w2]


class PackedRewritingOracle:
    """Same single-move closure as RewritingOracle, tuned for exhaustive sweeps.

    Words are packed into integers, six bits per letter below a sentinel
    bit: the vertex (minus one) in the high two-plus bits and the exponent,
    offset by 8, in the low four.  Only integer-exponent kinds (artin,
    coxeter) are supported; exponents must stay within -8..7, which holds
    for closures of short words with unit exponents.
    """

    def __init__(self, kind: str, m: int, adj: tuple[int, ...], seeds=(), packed_seeds=None):
        if kind not in ("artin", "coxeter"):
            raise ValueError("packed oracle supports artin and coxeter only")
        self.kind = kind
        self.m = m
        # neighbor masks re-indexed by vertex code (vertex - 1)
        self._adj = [adj[v] for v in range(1, m + 1)]
        self._parent: dict[int, int] = {}
        if packed_seeds is None:
            packed_seeds = [self.pack(w) for w in seeds]
        self._explore(packed_seeds)

    @staticmethod
    def pack(w) -> int:
        acc = 1
        for v, e in w:
            acc = (acc << 6) | ((v - 1) << 4) | (e + 8)
        return acc

    def _find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def _explore(self, seeds: list[int]) -> None:
        parent = self._parent
        adj = self._adj
        coxeter = self.kind == "coxeter"
        stack = []
        for w in seeds:
            if w not in parent:
                parent[w] = w
                stack.append(w)
        while stack:
            w = stack.pop()
            rw = w
            while parent[rw] != rw:
                parent[rw] = parent[parent[rw]]
                rw = parent[rw]
            n = (w.bit_length() - 1) // 6
            sa = 6 * (n - 1)
            for _ in range(n - 1):
                sb = sa - 6
                a = (w >> sa) & 63
                b = (w >> sb) & 63
                va = a >> 4
                vb = b >> 4
                if va == vb:
                    if coxeter:
                        merged = None
                    else:
                        e = (a & 15) + (b & 15) - 16
                        merged = None if e == 0 else (va << 4) | (e + 8)
                    high = w >> (sa + 6)
                    low = w & ((1 << sb) - 1)
                    if merged is None:
                        w2 = (high << sb) | low
                    else:
                        w2 = (((high << 6) | merged) << sb) | low
                elif (adj[va] >> vb) & 1:
                    w2 = w - (a << sa) - (b << sb) + (b << sa) + (a << sb)
                else:
                    sa = sb
                    continue
                if w2 not in parent:
                    parent[w2] = w2
                    stack.append(w2)
                rb = w2
                while parent[rb] != rb:
                    parent[rb] = parent[parent[rb]]
                    rb = parent[rb]
                if rw != rb:
                    parent[rw] = rb
                    rw = rb
                sa = sb

    def component(self, w) -> int:
        return self._find(self.pack(w))

    def component_packed(self, pw: int) -> int:
        return self._find(pw)

    def equal(self, w1, w2) -> bool:
        return self.component(w1) == self.component(w2)


def all_graphs(m: int):
    """Every labeled graph on vertices 1..m, as adjacency-mask tuples."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * (m + 1)
        for idx, (i, j) in enumerate(pairs):
            if bits & (1 << idx):
                adj[i] |= 1 << (j - 1)
                adj[j] |= 1 << (i - 1)
        yield tuple(adj)


def all_words(alphabet, max_len: int):
    """Every word over the alphabet with at most max_len letters."""
    out = [()]
    for n in range(1, max_len + 1):
        out.extend(itertools.product(alphabet, repeat=n))
    return out


def artin_alphabet(m: int):
    return [(v, e) for v in range(1, m + 1) for e in (1, -1)]


def coxeter_alphabet(m: int):
    return [(v, 1) for v in range(1, m + 1)]


def random_word(kind: str, m: int, length: int, rng: random.Random):
    letters = []
    for _ in range(length):
        v = rng.randint(1, m)
        if kind == "artin":
            letters.append((v, rng.choice([-2, -1, 1, 2])))
        elif kind == "coxeter":
            letters.append((v, 1))
        else:
            letters.append((v, Fraction(rng.randint(1, 5), rng.randint(2, 7)) % 1))
    return [l for l in letters if l[1] != 0]
