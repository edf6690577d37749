"""Naive reference implementations used as oracles in tests.

Everything here is written for obviousness, not speed, and on purpose
shares no code with the package internals it is checking.
"""

from collections import deque


def naive_component_count(n, edge_set, removed=frozenset()):
    """Count connected components by BFS, optionally with a vertex removed."""
    alive = [v for v in range(n) if v not in removed]
    seen = set()
    count = 0
    for s in alive:
        if s in seen:
            continue
        count += 1
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            for u in alive:
                if u not in seen and (min(v, u), max(v, u)) in edge_set:
                    seen.add(u)
                    queue.append(u)
    return count


def naive_cut_vertices(g):
    """v is a cut vertex iff deleting it increases the component count."""
    edge_set = {(u, v) for u, v in g.edges()}
    base = naive_component_count(g.n, edge_set)
    cuts = set()
    for v in range(g.n):
        if naive_component_count(g.n, edge_set, removed={v}) > base:
            cuts.add(v)
    return cuts


def naive_twin_classes(g):
    """Quadratic pairwise comparison of open neighborhoods."""
    classes = []
    for v in range(g.n):
        for rep, members in classes:
            if g.neighbors(v) == g.neighbors(rep):
                members.append(v)
                break
        else:
            classes.append((v, [v]))
    return [sorted(members) for _, members in classes]


def bfs_distances(g):
    """All-pairs distances; -1 where unreachable."""
    dist = [[-1] * g.n for _ in range(g.n)]
    for s in range(g.n):
        dist[s][s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[s][u] == -1:
                    dist[s][u] = dist[s][v] + 1
                    queue.append(u)
    return dist


def assert_group_axioms(listing):
    """Closure, identity, inverses over the full listing."""
    elems = {p.image for p in listing}
    n = listing.n
    ident = tuple(range(n))
    assert ident in elems
    for a in elems:
        inv = [0] * n
        for i, x in enumerate(a):
            inv[x] = i
        assert tuple(inv) in elems
    for a in elems:
        for b in elems:
            assert tuple(a[x] for x in b) in elems
