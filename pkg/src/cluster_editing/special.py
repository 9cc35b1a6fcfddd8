"""Exact solver for the special class via one constrained matching.

On a triangle- and 4-cycle-free graph of maximum degree 3, a solution
deletes a matching ``D`` after which every component is a path on at most
three vertices, and every 3-vertex path gets its end chord added.  In the
special class such a ``D`` exists iff some matching covers the set ``Y``
below while avoiding every vertex without deletion budget:

* ``X3``: all degree-3 vertices,
* ``X2'``: degree-2 vertices next to a degree-3 vertex,
* ``Z``: the remaining degree-2 vertices that have a neighbour without
  addition budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, UsageError
from .graph import EditSolution, Instance, Pair, components, find_violation, pair
from .matching import MatchingQuery, constrained_matching


@dataclass(frozen=True)
class PartitionSets:
    X0: frozenset[int]
    X1: frozenset[int]
    X2: frozenset[int]
    X3: frozenset[int]
    X2_prime: frozenset[int]
    X2_double: frozenset[int]
    Z: frozenset[int]
    Y: frozenset[int]
    forbidden: frozenset[int]


def _partition_unchecked(inst: Instance, verts: set[int] | None = None) -> PartitionSets:
    adj = inst.adj
    vs = adj.keys() if verts is None else verts
    by_deg: list[set[int]] = [set(), set(), set(), set()]
    for v in vs:
        by_deg[len(adj[v])].add(v)
    X3 = by_deg[3]
    X2p = {v for v in by_deg[2] if any(len(adj[u]) == 3 for u in adj[v])}
    X2pp = by_deg[2] - X2p
    Z = {v for v in X2pp if any(inst.a_star[u] == 0 for u in adj[v])}
    forbidden = {v for v in vs if inst.d_star[v] == 0}
    return PartitionSets(
        frozenset(by_deg[0]),
        frozenset(by_deg[1]),
        frozenset(by_deg[2]),
        frozenset(X3),
        frozenset(X2p),
        frozenset(X2pp),
        frozenset(Z),
        frozenset(Z | X2p | X3),
        frozenset(forbidden),
    )


def partition_sets(inst: Instance) -> PartitionSets:
    """Degree classes and the cover set ``Y`` of a connected special instance."""
    if inst.n < 2:
        raise UsageError("partition sets need at least two vertices")
    if len(components(inst)) != 1:
        raise UsageError("partition sets need a connected instance")
    if find_violation(inst) is not None:
        raise UsageError("instance is not in the special class")
    return _partition_unchecked(inst)


def _check_special(inst: Instance) -> None:
    if any(len(ns) > 3 for ns in inst.adj.values()):
        raise UsageError("instance is not in the special class")


def decide_special(inst: Instance) -> set[Pair] | None:
    """Witness matching covering ``Y`` and avoiding ``d_star = 0``, or ``None``.

    Components are handled one at a time; single vertices need nothing.
    The caller is responsible for class membership (the pipeline
    guarantees it); only the degree bound is re-checked here.
    """
    _check_special(inst)
    witness: set[Pair] = set()
    for comp in components(inst):
        if len(comp) == 1:
            continue
        ps = _partition_unchecked(inst, comp)
        if ps.Y & ps.forbidden:
            return None
        sub = {v: inst.adj[v] for v in comp}
        m = constrained_matching(sub, MatchingQuery(ps.Y, ps.forbidden))
        if m is None:
            return None
        witness |= m
    return witness


def extract_solution_special(inst: Instance, witness: set[Pair]) -> EditSolution:
    """Extend the witness to a maximal matching of deletable edges.

    Every component of ``G - D`` is then a path on at most three vertices
    and the end chords of the 3-vertex paths form ``A``.
    """
    adj, d = inst.adj, inst.d_star
    covered: set[int] = set()
    D: set[Pair] = set()
    for u, v in sorted(pair(*e) for e in witness):
        if v not in adj[u] or u in covered or v in covered:
            raise InvariantError("witness is not a matching of edges")
        covered.update((u, v))
        D.add((u, v))
    for u, v in inst.edges():
        if u in covered or v in covered or d[u] != 1 or d[v] != 1:
            continue
        covered.update((u, v))
        D.add((u, v))
    A: set[Pair] = set()
    rest = {v: set(ns) for v, ns in adj.items()}
    for u, v in D:
        rest[u].discard(v)
        rest[v].discard(u)
    seen: set[int] = set()
    for s in sorted(rest):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        for x in comp:
            for y in rest[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
        if len(comp) <= 2:
            continue
        ends = [x for x in comp if len(rest[x]) == 1]
        if len(comp) != 3 or len(ends) != 2:
            raise InvariantError(f"component {sorted(comp)} is not a path on at most three vertices")
        p, q = ends
        if inst.a_star[p] != 1 or inst.a_star[q] != 1:
            raise InvariantError(f"end chord ({p}, {q}) is not addable")
        A.add(pair(p, q))
    return EditSolution(frozenset(D), frozenset(A))
