"""Exhaustive reference solvers for small instances.

:func:`oracle_solve` enumerates set partitions of the vertex set as
restricted-growth strings.  A partition is a solution exactly when every
vertex has at most ``d_star`` neighbours outside its part and at most
``a_star`` non-neighbours inside it; with budgets in ``{0, 1}`` the cross
edges and the missing intra-part pairs are then automatically matchings.
Both counters are maintained incrementally while vertices are placed, so
infeasible prefixes are cut early.

:func:`matching_bruteforce_decide` is an independent second oracle that
enumerates the matching formulation directly; it is only meant for
cross-checking on tiny graphs.
"""

from __future__ import annotations

from itertools import combinations

from .errors import UsageError
from .graph import EditSolution, Instance, is_cluster_graph, pair

ORACLE_MAX_VERTICES = 14


def oracle_partition(inst: Instance) -> list[set[int]] | None:
    """A feasible partition into final clusters, or ``None``."""
    n = inst.n
    if n > ORACLE_MAX_VERTICES:
        raise UsageError(f"oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return []
    order = _search_order(inst)
    index = {v: i for i, v in enumerate(order)}
    # earlier[i]: bitmask of neighbours of order[i] placed before it
    earlier = [0] * n
    for i, v in enumerate(order):
        for u in inst.adj[v]:
            j = index[u]
            if j < i:
                earlier[i] |= 1 << j
    a = [inst.a_star[v] for v in order]
    d = [inst.d_star[v] for v in order]
    cross = [0] * n
    miss = [0] * n
    blocks: list[int] = []
    label = [0] * n

    def bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def place(i: int) -> bool:
        if i == n:
            return True
        nb = earlier[i]
        ai, di = a[i], d[i]
        for b in range(len(blocks) + 1):
            block = blocks[b] if b < len(blocks) else 0
            missing = block & ~nb
            outside = nb & ~block
            if missing.bit_count() > ai or outside.bit_count() > di:
                continue
            if any(miss[j] >= a[j] for j in bits(missing)):
                continue
            if any(cross[j] >= d[j] for j in bits(outside)):
                continue
            for j in bits(missing):
                miss[j] += 1
            for j in bits(outside):
                cross[j] += 1
            miss[i] = missing.bit_count()
            cross[i] = outside.bit_count()
            if b == len(blocks):
                blocks.append(1 << i)
            else:
                blocks[b] |= 1 << i
            label[i] = b
            if place(i + 1):
                return True
            if b == len(blocks) - 1 and blocks[b] == 1 << i:
                blocks.pop()
            else:
                blocks[b] &= ~(1 << i)
            for j in bits(missing):
                miss[j] -= 1
            for j in bits(outside):
                cross[j] -= 1
        return False

    if not place(0):
        return None
    parts: dict[int, set[int]] = {}
    for i, v in enumerate(order):
        parts.setdefault(label[i], set()).add(v)
    return sorted(parts.values(), key=min)


def _search_order(inst: Instance) -> list[int]:
    """Breadth-first order so each vertex meets its neighbours early."""
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(inst.adj):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            for u in sorted(inst.adj[v]):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def solution_from_partition(inst: Instance, parts: list[set[int]]) -> EditSolution:
    """Cross edges become ``D``, missing intra-part pairs become ``A``."""
    where = {v: k for k, part in enumerate(parts) for v in part}
    deletions = {pair(u, v) for u, v in inst.edges() if where[u] != where[v]}
    additions = set()
    for part in parts:
        for u, v in combinations(sorted(part), 2):
            if not inst.has_edge(u, v):
                additions.add((u, v))
    return EditSolution(frozenset(deletions), frozenset(additions))


def oracle_solve(inst: Instance) -> EditSolution | None:
    """A solution found by exhaustive search, or ``None`` for NO."""
    parts = oracle_partition(inst)
    return None if parts is None else solution_from_partition(inst, parts)


def oracle_decide(inst: Instance) -> bool:
    """YES/NO by exhaustive search; limited to 14 vertices."""
    return oracle_partition(inst) is not None


BRUTE_MAX_VERTICES = 6


def _matchings(pairs: list[tuple[int, int]]):
    """All matchings (as lists) drawn from ``pairs``."""

    def rec(k: int, used: set[int], chosen: list[tuple[int, int]]):
        if k == len(pairs):
            yield list(chosen)
            return
        yield from rec(k + 1, used, chosen)
        u, v = pairs[k]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            chosen.append(pairs[k])
            yield from rec(k + 1, used, chosen)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    yield from rec(0, set(), [])


def matching_bruteforce_decide(inst: Instance) -> bool:
    """YES/NO by enumerating deletion and addition matchings directly."""
    if inst.n > BRUTE_MAX_VERTICES:
        raise UsageError(f"matching brute force is limited to {BRUTE_MAX_VERTICES} vertices")
    verts = inst.vertices()
    deletable = [e for e in inst.edges() if inst.d_star[e[0]] and inst.d_star[e[1]]]
    addable = [
        (u, v)
        for u, v in combinations(verts, 2)
        if not inst.has_edge(u, v) and inst.a_star[u] and inst.a_star[v]
    ]
    add_options = list(_matchings(addable))
    for dels in _matchings(deletable):
        base = inst.copy()
        for u, v in dels:
            base.remove_edge(u, v)
        for adds in add_options:
            g = base.copy()
            for u, v in adds:
                g.add_edge(u, v)
            if is_cluster_graph(g):
                return True
    return False
