"""Generalized Mycielskian construction mu_t(G).

Vertex ids are arithmetic: the level-s copy of source vertex i is s*n + i
for 0 <= s <= t (level 0 is the original), and the root w is (t+1)*n.
Level 0 induces a copy of G; each source edge ij contributes the cross
edges (s*n+i, (s+1)*n+j) and (s*n+j, (s+1)*n+i) for 0 <= s < t; w is
adjacent to exactly the level-t vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptySource, InvalidT, LayoutMismatch
from .graphs import Graph


@dataclass(frozen=True)
class VertexRole:
    """What a mu_t(G) vertex id stands for."""

    kind: str  # "original" | "shadow" | "root"
    index: int | None  # source vertex id, None for the root
    level: int | None  # 0 for originals, 1..t for shadows, None for the root


@dataclass(frozen=True)
class MycLayout:
    """Id scheme of one mu_t construction over a source of order n."""

    n: int
    t: int

    @property
    def order(self) -> int:
        return (self.t + 1) * self.n + 1

    @property
    def root(self) -> int:
        return (self.t + 1) * self.n

    def vertex_id(self, i: int, s: int) -> int:
        if not (0 <= i < self.n and 0 <= s <= self.t):
            raise LayoutMismatch(f"no vertex (i={i}, s={s}) in this layout")
        return s * self.n + i

    def level_ids(self, s: int) -> range:
        if not (0 <= s <= self.t):
            raise LayoutMismatch(f"no level {s} in this layout")
        return range(s * self.n, (s + 1) * self.n)

    def role(self, v: int) -> VertexRole:
        if v == self.root:
            return VertexRole("root", None, None)
        if not (0 <= v < self.order):
            raise LayoutMismatch(f"vertex {v} outside layout of order {self.order}")
        s, i = divmod(v, self.n)
        return VertexRole("original" if s == 0 else "shadow", i, s)

    def roles(self) -> list[VertexRole]:
        return [self.role(v) for v in range(self.order)]


def build_mycielskian(g: Graph, t: int) -> tuple[Graph, MycLayout]:
    """Construct (mu_t(g), layout). Requires g.n >= 1 and t >= 1."""
    if g.n == 0:
        raise EmptySource("source graph must have at least one vertex")
    if t < 1:
        raise InvalidT(f"t must be >= 1, got {t}")
    n = g.n
    layout = MycLayout(n=n, t=t)
    edges: list[tuple[int, int]] = []
    for i, j in g.edges():
        edges.append((i, j))
        for s in range(t):
            edges.append((s * n + i, (s + 1) * n + j))
            edges.append((s * n + j, (s + 1) * n + i))
    w = layout.root
    edges.extend((t * n + i, w) for i in range(n))
    return Graph(layout.order, edges), layout


@dataclass(frozen=True)
class FactCheck:
    name: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class FactReport:
    checks: tuple[FactCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[FactCheck]:
        return [c for c in self.checks if not c.ok]


def validate_facts(g: Graph, t: int, h: Graph, layout: MycLayout) -> FactReport:
    """Check the structural facts of mu_t(g) against a built graph h.

    Facts: order (t+1)n+1; deg(w) = n; deg of level-s copy of i is
    2*deg_g(i) for s < t and deg_g(i)+1 at level t; levels 1..t induce
    independent sets.
    """
    if layout.n != g.n or layout.t != t:
        raise LayoutMismatch(f"layout is for (n={layout.n}, t={layout.t}), not (n={g.n}, t={t})")
    if h.n != layout.order:
        raise LayoutMismatch(f"graph order {h.n} != layout order {layout.order}")
    n = g.n
    checks = []

    checks.append(FactCheck("order", h.n == (t + 1) * n + 1))

    wdeg = h.degree(layout.root)
    checks.append(FactCheck("root_degree", wdeg == n, None if wdeg == n else f"deg(w)={wdeg}, n={n}"))

    bad = None
    for s in range(t):
        for i in range(n):
            d = h.degree(layout.vertex_id(i, s))
            if d != 2 * g.degree(i):
                bad = f"deg(u_{i}^{s})={d}, expected {2 * g.degree(i)}"
                break
        if bad:
            break
    checks.append(FactCheck("inner_level_degrees", bad is None, bad))

    bad = None
    for i in range(n):
        d = h.degree(layout.vertex_id(i, t))
        if d != g.degree(i) + 1:
            bad = f"deg(u_{i}^{t})={d}, expected {g.degree(i) + 1}"
            break
    checks.append(FactCheck("top_level_degrees", bad is None, bad))

    bad = None
    for s in range(1, t + 1):
        ids = set(layout.level_ids(s))
        for v in ids:
            hit = h.neighbors(v) & ids
            if hit:
                bad = f"level {s} has edge {v}-{min(hit)}"
                break
        if bad:
            break
    checks.append(FactCheck("levels_independent", bad is None, bad))

    return FactReport(tuple(checks))
