"""Maximum matching in general graphs and constrained matching queries.

The core is Edmonds' blossom-shrinking search started from a single
exposed root.  Per-search state lives in dictionaries that are only
populated for vertices the search actually reaches, so a search costs
time proportional to the explored region rather than to the whole graph.
That matters when thousands of searches run on a large sparse graph whose
matching is already almost complete after the greedy start.

Graphs are passed as adjacency mappings ``{v: iterable of neighbours}``;
an :class:`~cluster_editing.graph.Instance` can be passed directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping

from .errors import UsageError
from .graph import Instance, Pair, pair

Adjacency = Mapping[int, Iterable[int]]


@dataclass(frozen=True)
class MatchingQuery:
    """Vertices that must be covered (``Y``) and must stay exposed (``Z``)."""

    Y: frozenset[int] = field(default_factory=frozenset)
    Z: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, Y: Iterable[int] = (), Z: Iterable[int] = ()) -> "MatchingQuery":
        return cls(frozenset(Y), frozenset(Z))


def _as_adjacency(graph: Adjacency | Instance) -> dict[int, list[int]]:
    src = graph.adj if isinstance(graph, Instance) else graph
    return {v: sorted(ns) for v, ns in sorted(src.items())}


def _search(
    adj: Mapping[int, list[int]],
    match: dict[int, int],
    root: int,
    accept: Callable[[int], bool] | None = None,
) -> tuple[str, int, dict[int, int]] | None:
    """One alternating-tree search from the exposed vertex ``root``.

    Returns ``("exposed", t, parent)`` when ``t`` is an exposed vertex that
    ends an augmenting path, ``("outer", t, parent)`` when ``t != root`` is
    an even (outer) vertex with ``accept(t)`` true, or ``None``.
    """
    parent: dict[int, int] = {}
    base: dict[int, int] = {}
    outer = {root}
    tree = [root]
    queue = deque([root])

    def b(v: int) -> int:
        return base.get(v, v)

    def lca(x: int, y: int) -> int:
        seen = set()
        while True:
            x = b(x)
            seen.add(x)
            if x not in match:
                break
            x = parent[match[x]]
        while True:
            y = b(y)
            if y in seen:
                return y
            y = parent[match[y]]

    def mark(v: int, stop: int, child: int, blossom: set[int]) -> None:
        while b(v) != stop:
            blossom.add(b(v))
            blossom.add(b(match[v]))
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        if accept is not None and v != root and accept(v):
            return ("outer", v, parent)
        for to in adj[v]:
            if b(v) == b(to) or match.get(v) == to:
                continue
            if to == root or (to in match and match[to] in parent):
                cur = lca(v, to)
                blossom: set[int] = set()
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in tree:
                    if b(i) in blossom:
                        base[i] = cur
                        if i not in outer:
                            outer.add(i)
                            queue.append(i)
            elif to not in parent:
                parent[to] = v
                tree.append(to)
                if to not in match:
                    return ("exposed", to, parent)
                mate = match[to]
                outer.add(mate)
                tree.append(mate)
                queue.append(mate)
    return None


def _augment(match: dict[int, int], parent: dict[int, int], end: int) -> None:
    v: int | None = end
    while v is not None:
        pv = parent[v]
        ppv = match.get(pv)
        match[v] = pv
        match[pv] = v
        v = ppv


def _greedy(adj: Mapping[int, list[int]], match: dict[int, int], order: Iterable[int]) -> None:
    for v in order:
        if v in match:
            continue
        for u in adj[v]:
            if u not in match:
                match[v] = u
                match[u] = v
                break


def _edges_of(match: dict[int, int]) -> set[Pair]:
    return {pair(u, v) for u, v in match.items() if u < v}


def maximum_matching(graph: Adjacency | Instance) -> set[Pair]:
    """A maximum-cardinality matching; deterministic for a fixed input."""
    adj = _as_adjacency(graph)
    match: dict[int, int] = {}
    _greedy(adj, match, adj)
    for v in adj:
        if v in match:
            continue
        found = _search(adj, match, v)
        if found is not None:
            _augment(match, found[2], found[1])
    return _edges_of(match)


def _check_query(adj: Mapping[int, list[int]], q: MatchingQuery) -> None:
    if q.Y & q.Z:
        raise UsageError("Y and Z must be disjoint")
    unknown = (q.Y | q.Z) - adj.keys()
    if unknown:
        raise UsageError(f"query mentions unknown vertices {sorted(unknown)}")


def _constrained_padded(adj: Mapping[int, list[int]], q: MatchingQuery) -> set[Pair] | None:
    keep = [v for v in adj if v not in q.Z]
    keep_set = set(keep)
    aux: dict[int, set[int]] = {v: {u for u in adj[v] if u in keep_set} for v in keep}
    U = [v for v in keep if v not in q.Y]
    if len(keep) % 2 == 1:
        pad = max(adj, default=-1) + 1
        aux[pad] = set()
        U.append(pad)
    for u, v in combinations(U, 2):
        aux[u].add(v)
        aux[v].add(u)
    M = maximum_matching(aux)
    if 2 * len(M) != len(aux):
        return None
    U_set = set(U)
    return {e for e in M if not (e[0] in U_set and e[1] in U_set)}


def _constrained_augmenting(adj: Mapping[int, list[int]], q: MatchingQuery) -> set[Pair] | None:
    keep = {v for v in adj if v not in q.Z}
    sub = {v: [u for u in adj[v] if u in keep] for v in adj if v in keep}
    match: dict[int, int] = {}
    ys = sorted(q.Y)
    # Match Y vertices first, preferring partners outside Y.
    for y in ys:
        if y in match:
            continue
        free = [u for u in sub[y] if u not in match]
        if free:
            u = next((w for w in free if w not in q.Y), free[0])
            match[y] = u
            match[u] = y
    required: set[int] = set()
    sink = max(adj, default=-1) + 1
    for y in ys:
        if y in match:
            required.add(y)
            continue
        found = _search(sub, match, y, accept=lambda t: t not in required)
        if found is None:
            return None
        kind, t, parent = found
        if kind == "exposed":
            _augment(match, parent, t)
        else:
            # Hang a temporary sink on t, augment into it, then drop it.
            parent[sink] = t
            _augment(match, parent, sink)
            del match[sink]
            del match[t]
        required.add(y)
    return _edges_of(match)


PADDED_LIMIT = 64


def constrained_matching(
    graph: Adjacency | Instance,
    q: MatchingQuery,
    method: str = "auto",
) -> set[Pair] | None:
    """A matching covering all of ``q.Y`` and none of ``q.Z``, or ``None``.

    ``method="padded"`` runs the perfect-matching construction on
    ``G - Z`` with the uncovered-allowed vertices completed to a clique
    (plus one pad vertex for parity).  ``method="augmenting"`` grows the
    covered set one ``Y`` vertex at a time with alternating searches,
    which stays linear in the size of a sparse graph.  ``"auto"`` uses the
    padded construction up to 64 vertices and augmenting searches beyond.
    """
    adj = _as_adjacency(graph)
    _check_query(adj, q)
    if method == "auto":
        method = "padded" if len(adj) <= PADDED_LIMIT else "augmenting"
    if method == "padded":
        return _constrained_padded(adj, q)
    if method == "augmenting":
        return _constrained_augmenting(adj, q)
    raise UsageError(f"unknown method {method!r}")


def is_matching(edges: Iterable[Pair]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen or u == v:
            return False
        seen.add(u)
        seen.add(v)
    return True
