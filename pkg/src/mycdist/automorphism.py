"""Automorphism search for small graphs.

The engine is a backtracking search over aligned ordered-partition pairs
(P of the domain, Q of the codomain). Each node refines both partitions to
a stable equitable pair using (cell, neighbor-count-per-cell) signatures,
prunes on any signature mismatch, then individualizes: the lowest vertex
id in the smallest non-singleton cell of P is mapped, in turn, onto each
member of the aligned cell of Q in ascending order. Discrete leaves are
verified edge-by-edge before being reported. The DFS order is therefore
deterministic, and full listings are additionally sorted by image vector.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import GraphTooLarge, GroupTooLarge, SearchBudgetExceeded, SizeMismatch
from .graphs import Graph

MAX_VERTICES = 24
MAX_ELEMENTS = 10**6
NAIVE_MAX_VERTICES = 9


@dataclass(frozen=True)
class Permutation:
    """Bijection of 0..n-1, stored as the image vector."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self.compose(other))(v) = self(other(v))."""
        return Permutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, x in enumerate(self.image):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))


@dataclass(frozen=True)
class AutListing:
    """Full automorphism listing, sorted lexicographically by image vector."""

    n: int
    elements: tuple[Permutation, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)


class Budget:
    """Shared step counter; spend() raises once the limit is crossed."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise SearchBudgetExceeded(self.used)


def is_automorphism(g: Graph, p: Permutation | Sequence[int]) -> bool:
    img = p.image if isinstance(p, Permutation) else tuple(p)
    if len(img) != g.n:
        raise SizeMismatch(f"permutation length {len(img)} != graph order {g.n}")
    if sorted(img) != list(range(g.n)):
        return False
    # bijection preserving all edges preserves non-edges too
    return all(g.has_edge(img[u], img[v]) for u, v in g.edges())


def _refine_pair(adj_s, adj_t, P, Q, budget: Budget | None):
    """Refine an aligned pair to a stable equitable pair; None on mismatch."""
    while True:
        cell_s = {}
        for ci, cell in enumerate(P):
            for v in cell:
                cell_s[v] = ci
        cell_t = {}
        for ci, cell in enumerate(Q):
            for v in cell:
                cell_t[v] = ci
        if budget is not None:
            budget.spend(len(cell_s))
        newP, newQ = [], []
        changed = False
        for ci in range(len(P)):
            groups_s: dict = {}
            for v in P[ci]:
                cnt = Counter()
                for u in adj_s[v]:
                    cnt[cell_s[u]] += 1
                groups_s.setdefault(tuple(sorted(cnt.items())), []).append(v)
            groups_t: dict = {}
            for v in Q[ci]:
                cnt = Counter()
                for u in adj_t[v]:
                    cnt[cell_t[u]] += 1
                groups_t.setdefault(tuple(sorted(cnt.items())), []).append(v)
            keys = sorted(groups_s)
            if keys != sorted(groups_t):
                return None
            for key in keys:
                a, b = groups_s[key], groups_t[key]
                if len(a) != len(b):
                    return None
                newP.append(sorted(a))
                newQ.append(sorted(b))
            if len(keys) > 1:
                changed = True
        P, Q = newP, newQ
        if not changed:
            return P, Q


def _leaf_image(adj_s, adj_t, P, Q):
    img = [0] * len(adj_s)
    for ci in range(len(P)):
        img[P[ci][0]] = Q[ci][0]
    for v in range(len(adj_s)):
        if {img[u] for u in adj_s[v]} != adj_t[img[v]]:
            return None
    return tuple(img)


def _search_pair(adj_s, adj_t, P, Q, budget: Budget | None) -> Iterator[tuple[int, ...]]:
    """Yield every bijection consistent with the aligned pair (P, Q)."""
    ref = _refine_pair(adj_s, adj_t, P, Q, budget)
    if ref is None:
        return
    P, Q = ref
    best = -1
    for ci, cell in enumerate(P):
        if len(cell) > 1 and (best == -1 or len(cell) < len(P[best])):
            best = ci
    if best == -1:
        img = _leaf_image(adj_s, adj_t, P, Q)
        if img is not None:
            yield img
        return
    v = P[best][0]
    rest_p = [x for x in P[best] if x != v]
    for u in Q[best]:
        newP = P[:best] + [[v], rest_p] + P[best + 1:]
        newQ = Q[:best] + [[u], [x for x in Q[best] if x != u]] + Q[best + 1:]
        yield from _search_pair(adj_s, adj_t, newP, newQ, budget)


def _unit_pair(n: int):
    cell = list(range(n))
    return [list(cell)], [list(cell)]


def enumerate_automorphisms(g: Graph, *, max_vertices: int = MAX_VERTICES,
                            max_elements: int = MAX_ELEMENTS) -> AutListing:
    """Full automorphism listing of g.

    Raises GraphTooLarge past max_vertices and GroupTooLarge as soon as the
    listing would exceed max_elements.
    """
    if g.n > max_vertices:
        raise GraphTooLarge(f"n={g.n} exceeds cap {max_vertices}")
    if g.n == 0:
        return AutListing(0, (Permutation(()),))
    P, Q = _unit_pair(g.n)
    found = []
    for img in _search_pair(g.adjacency, g.adjacency, P, Q, None):
        found.append(img)
        if len(found) > max_elements:
            raise GroupTooLarge(f"listing exceeds {max_elements} elements")
    found.sort()
    return AutListing(g.n, tuple(Permutation(img) for img in found))


def enumerate_automorphisms_naive(g: Graph) -> AutListing:
    """Oracle listing: filter all n! permutations. Only for n <= 9."""
    if g.n > NAIVE_MAX_VERTICES:
        raise GraphTooLarge(f"n={g.n} exceeds naive cap {NAIVE_MAX_VERTICES}")
    n = g.n
    if n == 0:
        return AutListing(0, (Permutation(()),))
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    a = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    mapped = a[perms[:, :, None], perms[:, None, :]]
    mask = (mapped == a).all(axis=(1, 2))
    elems = tuple(Permutation(tuple(int(x) for x in p)) for p in perms[mask])
    return AutListing(n, elems)


def _color_cells(n: int, colors: Sequence[int]) -> list[list[int]]:
    if len(colors) != n:
        raise SizeMismatch(f"coloring length {len(colors)} != graph order {n}")
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def search_color_preserving(g: Graph, coloring) -> Permutation | None:
    """First nontrivial color-preserving automorphism in DFS order, or None.

    Accepts a Coloring or a plain sequence of 1-based colors. Never builds
    the full listing; the color classes seed the initial partition.
    """
    colors = getattr(coloring, "assign", coloring)
    if g.n == 0:
        return None
    cells = _color_cells(g.n, colors)
    P = [list(c) for c in cells]
    Q = [list(c) for c in cells]
    for img in _search_pair(g.adjacency, g.adjacency, P, Q, None):
        if any(i != x for i, x in enumerate(img)):
            return Permutation(img)
    return None


def _orbit_closure(seed: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {seed}
    frontier = [seed]
    while frontier:
        x = frontier.pop()
        for img in gens:
            for y in (img[x], img.index(x)):
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
    return orbit


def orbit_of(g: Graph, v: int, *, max_vertices: int = MAX_VERTICES) -> frozenset[int]:
    """Orbit of v under Aut(g), without materializing the full listing.

    One targeted search per candidate image (candidates limited to v's cell
    of the stable equitable partition); discovered automorphisms act as
    generators so later candidates are often settled by closure alone.
    """
    g._check(v)
    if g.n > max_vertices:
        raise GraphTooLarge(f"n={g.n} exceeds cap {max_vertices}")
    if g.n == 1:
        return frozenset({v})
    adj = g.adjacency
    P, Q = _unit_pair(g.n)
    ref = _refine_pair(adj, adj, P, Q, None)
    assert ref is not None  # a graph is always consistent with itself
    P, Q = ref
    ci = next(i for i, cell in enumerate(P) if v in cell)
    candidates = P[ci]
    orbit = {v}
    gens: list[tuple[int, ...]] = []
    rest_p = [x for x in P[ci] if x != v]
    for u in candidates:
        if u in orbit:
            continue
        newP = P[:ci] + [[v], rest_p] + P[ci + 1:]
        newQ = Q[:ci] + [[u], [x for x in Q[ci] if x != u]] + Q[ci + 1:]
        img = next(_search_pair(adj, adj, newP, newQ, None), None)
        if img is not None:
            gens.append(img)
            orbit = _orbit_closure(v, gens)
    return frozenset(orbit)


def find_isomorphism(g: Graph, h: Graph) -> Permutation | None:
    """Color-free isomorphism g -> h via the same refinement search."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if g.n == 0:
        return Permutation(())
    P = [list(range(g.n))]
    Q = [list(range(h.n))]
    img = next(_search_pair(g.adjacency, h.adjacency, P, Q, None), None)
    return Permutation(img) if img is not None else None
