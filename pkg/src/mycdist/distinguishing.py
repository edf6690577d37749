"""Distinguishing numbers of small graphs.

A coloring is distinguishing when no nontrivial automorphism preserves
all color classes. The exact search enumerates colorings in canonical
form (colors renumbered by first occurrence), so color permutations are
never revisited. Three prunes keep the tree small, all of them sound:

* twins (equal open neighborhoods) must receive distinct colors;
* if some nontrivial automorphism preserves the colors assigned so far
  while fixing every still-uncolored vertex, no extension can work;
* partial assignments equivalent to an already-explored sibling under an
  automorphism plus a color renaming are skipped (only attempted when the
  full listing is small enough to consult).

The brute-force oracle ignores all of that and checks every canonical
coloring against the naive n!-filter listing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .automorphism import (Budget, _search_pair, enumerate_automorphisms,
                           enumerate_automorphisms_naive)
from .errors import GraphTooLarge, GroupTooLarge, MalformedColoring
from .graphs import Graph, twin_classes

DEFAULT_BUDGET = 10**8
# listings larger than this are not consulted for sibling-orbit pruning
ORBIT_LISTING_CAP = 960


@dataclass(frozen=True)
class Coloring:
    """Vertex coloring with palette 1..k; assign[v] is the color of v."""

    k: int
    assign: tuple[int, ...]

    def __post_init__(self):
        if self.assign:
            if self.k < 1:
                raise MalformedColoring(f"k={self.k} but {len(self.assign)} vertices")
            bad = [c for c in self.assign if not (1 <= c <= self.k)]
            if bad:
                raise MalformedColoring(f"colors {bad} outside 1..{self.k}")
        elif self.k < 0:
            raise MalformedColoring("negative k")

    @property
    def n(self) -> int:
        return len(self.assign)

    def used(self) -> int:
        return len(set(self.assign))

    def canonical(self) -> "Coloring":
        """Renumber colors by first occurrence; k becomes the used count."""
        seen: dict[int, int] = {}
        out = []
        for c in self.assign:
            if c not in seen:
                seen[c] = len(seen) + 1
            out.append(seen[c])
        return Coloring(len(seen), tuple(out))

    def classes(self) -> dict[int, list[int]]:
        by: dict[int, list[int]] = {}
        for v, c in enumerate(self.assign):
            by.setdefault(c, []).append(v)
        return by


@dataclass(frozen=True)
class DistResult:
    value: int
    certificate: Coloring
    lower_bound_witness: int | None = None  # twin class size, when it forced the value


@dataclass(frozen=True)
class ExceedsCap:
    """Returned when the distinguishing number is proven to exceed k_cap."""

    k_cap: int


def twin_lower_bound(g: Graph) -> int:
    """Largest twin class size: twins must all receive distinct colors."""
    if g.n == 0:
        return 0
    return max(len(c) for c in twin_classes(g))


def is_distinguishing(g: Graph, c: Coloring) -> bool:
    if c.n != g.n:
        raise MalformedColoring(f"coloring length {c.n} != graph order {g.n}")
    return _first_preserving(g.adjacency, list(c.assign), g.n, None) is None


def _first_preserving(adj, colors, upto, budget):
    """First nontrivial automorphism preserving colors[:upto] and fixing
    every vertex >= upto, or None."""
    by: dict[int, list[int]] = {}
    for v in range(upto):
        by.setdefault(colors[v], []).append(v)
    cells = [by[c] for c in sorted(by)]
    cells.extend([v] for v in range(upto, len(adj)))
    P = [list(cell) for cell in cells]
    Q = [list(cell) for cell in cells]
    for img in _search_pair(adj, adj, P, Q, budget):
        if any(i != x for i, x in enumerate(img)):
            return img
    return None


def _prefix_stabilizers(images: list[tuple[int, ...]], n: int) -> list[list[tuple[int, ...]]]:
    """stabs[d] = nontrivial listing elements mapping {0..d} onto itself."""
    stabs: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    ident = tuple(range(n))
    for img in images:
        if img == ident:
            continue
        hi = 0
        for d in range(n):
            hi = max(hi, img[d])
            if hi == d:
                stabs[d].append(img)
    return stabs


def _sibling_equivalent(stab, colors, d, c_old, c_new) -> bool:
    """True if the assignments differing only in colors[d] (c_old vs c_new)
    are related by a prefix automorphism plus a color bijection."""
    for img in stab:
        rho: dict[int, int] = {}
        used: set[int] = set()
        ok = True
        for v in range(d + 1):
            w = img[v]
            x = c_old if w == d else colors[w]
            y = c_new if v == d else colors[v]
            if x in rho:
                if rho[x] != y:
                    ok = False
                    break
            elif y in used:
                ok = False
                break
            else:
                rho[x] = y
                used.add(y)
        if ok:
            return True
    return False


def _search_k(g: Graph, k: int, twin_id, stabs, budget: Budget):
    """First canonical distinguishing coloring with exactly k colors, or None."""
    n = g.n
    adj = g.adjacency
    colors = [0] * n
    class_used: list[set[int]] = [set() for _ in range(max(twin_id) + 1)]

    def dfs(d: int, max_used: int):
        budget.spend(1)
        if d >= 2 and _first_preserving(adj, colors, d, budget) is not None:
            return None
        if d == n:
            return tuple(colors)
        tried_old: list[int] = []
        stab = stabs[d] if stabs is not None else []
        cls = twin_id[d]
        for c in range(1, min(max_used + 1, k) + 1):
            if c in class_used[cls]:
                continue
            if max(max_used, c) + (n - d - 1) < k:
                continue  # can no longer introduce k distinct colors
            if c <= max_used and stab and any(
                    _sibling_equivalent(stab, colors, d, c_old, c) for c_old in tried_old):
                continue
            colors[d] = c
            class_used[cls].add(c)
            res = dfs(d + 1, max(max_used, c))
            colors[d] = 0
            class_used[cls].discard(c)
            if res is not None:
                return res
            if c <= max_used:
                tried_old.append(c)
        return None

    return dfs(0, 0)


def distinguishing_number(g: Graph, k_cap: int | None = None, *,
                          budget: int | Budget | None = None,
                          use_orbits: bool = True) -> DistResult | ExceedsCap:
    """Exact distinguishing number with a certificate coloring.

    The search starts at the twin lower bound and increments k after
    exhausting each level, so the returned value is minimal. Raises
    SearchBudgetExceeded when the step budget runs out; returns
    ExceedsCap once the value is proven to exceed k_cap.
    """
    n = g.n
    if n == 0:
        return DistResult(0, Coloring(0, ()))
    bud = budget if isinstance(budget, Budget) else Budget(budget if budget else DEFAULT_BUDGET)
    classes = twin_classes(g)
    twin_id = [0] * n
    for ci, cl in enumerate(classes):
        for v in cl:
            twin_id[v] = ci
    tb = max(len(cl) for cl in classes)

    stabs = None
    if use_orbits and n <= 24:
        try:
            listing = enumerate_automorphisms(g, max_elements=ORBIT_LISTING_CAP)
            stabs = _prefix_stabilizers([p.image for p in listing], n)
        except (GroupTooLarge, GraphTooLarge):
            stabs = None

    for k in range(max(tb, 1), n + 1):
        if k_cap is not None and k > k_cap:
            return ExceedsCap(k_cap)
        cert = _search_k(g, k, twin_id, stabs, bud)
        if cert is not None:
            witness = tb if (tb >= 2 and k == tb) else None
            return DistResult(k, Coloring(k, cert), witness)
    raise AssertionError("rainbow coloring is always distinguishing")


def _canonical_colorings_exactly(n: int, k: int):
    """All canonical colorings of n vertices using exactly colors 1..k."""
    colors = [0] * n

    def rec(d: int, max_used: int):
        if d == n:
            if max_used == k:
                yield tuple(colors)
            return
        hi = min(max_used + 1, k)
        for c in range(1, hi + 1):
            if max(max_used, c) + (n - d - 1) < k:
                continue
            colors[d] = c
            yield from rec(d + 1, max(max_used, c))

    yield from rec(0, 0)


def distinguishing_number_bruteforce(g: Graph) -> DistResult:
    """Oracle: try every canonical coloring against the naive listing.

    Independent of the refinement engine; usable up to the naive
    enumeration cap (n <= 9).
    """
    n = g.n
    if n == 0:
        return DistResult(0, Coloring(0, ()))
    listing = enumerate_automorphisms_naive(g)
    nontrivial = [p.image for p in listing if not p.is_identity()]
    if not nontrivial:
        return DistResult(1, Coloring(1, (1,) * n))
    perms = np.array(nontrivial, dtype=np.int8)
    for k in range(1, n + 1):
        for assign in _canonical_colorings_exactly(n, k):
            c = np.array(assign, dtype=np.int16)
            if not (c[perms] == c).all(axis=1).any():
                return DistResult(k, Coloring(k, assign))
    raise AssertionError("rainbow coloring is always distinguishing")
