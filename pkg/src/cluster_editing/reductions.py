"""Reduction rules that shrink an instance towards the special class.

Every operation returns a :data:`StepOutcome`: either the instance is
decided outright (:class:`Decided`) or it is rewritten into an equivalent
smaller instance together with a step record (:class:`Rewritten`).  Step
records keep the actual vertex ids in their roles, which is all the
information :meth:`lift` needs to turn a deletion set of the rewritten
instance back into one for the instance before the step.

Operations copy their input unless ``in_place=True``.  In-place mode is
meant for the pipeline's private working copy; after a ``NO`` decision the
instance is left in an unspecified state.

Small sets whose outside edges must all be deleted in any solution are
split off with :func:`apply_r_deletable`, which solves the split-off part
with the exhaustive oracle.  Sets handed to it never exceed 12 vertices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvariantError, UsageError
from .graph import (
    C4,
    EditSolution,
    HighDegree,
    Instance,
    Pair,
    SpecialClassBreach,
    Triangle,
    component_of,
    find_violation,
    pair,
)
from .oracle import oracle_solve

R_DELETABLE_MAX = 12


# ----------------------------------------------------------------------
# Outcomes and step records


@dataclass(frozen=True)
class Decided:
    yes: bool
    solution: EditSolution | None
    reason: str


@dataclass(frozen=True)
class TriangleAbsorb:
    clique: frozenset[int]
    deletions: frozenset[Pair]
    additions: frozenset[Pair]

    def lift(self, D: set[Pair]) -> set[Pair]:
        return D | self.deletions


@dataclass(frozen=True)
class RDeletable:
    X: frozenset[int]
    F: frozenset[Pair]
    inner: EditSolution

    def lift(self, D: set[Pair]) -> set[Pair]:
        return D | self.F | self.inner.deletions


def _cycle_edges(v: tuple[int, ...]) -> list[Pair]:
    return [pair(v[i], v[(i + 1) % 4]) for i in range(4)]


def _spokes(v: tuple[int, ...], w: tuple[int, ...]) -> set[Pair]:
    return {pair(a, b) for a, b in zip(v, w)}


@dataclass(frozen=True)
class R2GPlus:
    """Cycle removed, ``w1w2`` and ``w3w4`` added."""

    v: tuple[int, int, int, int]
    w: tuple[int, int, int, int]

    def lift(self, D: set[Pair]) -> set[Pair]:
        v, w = self.v, self.w
        top, bottom = pair(w[0], w[1]), pair(w[2], w[3])
        if top in D:
            if bottom not in D:
                raise InvariantError("R2GPlus lift: only one new edge deleted")
            return (D - {top, bottom}) | _spokes(v, w)
        if bottom in D:
            raise InvariantError("R2GPlus lift: only one new edge deleted")
        return D | {pair(v[0], v[1]), pair(v[2], v[3])}


@dataclass(frozen=True)
class R2Star:
    """Outer vertices ``w`` removed, ``v1 z1`` (and ``v3 z``) added.

    ``zw`` is the vertex among ``w2, w3`` adjacent to ``z``.
    """

    v: tuple[int, int, int, int]
    w: tuple[int, int, int, int]
    z1: int
    z: int | None
    zw: int | None

    def lift(self, D: set[Pair]) -> set[Pair]:
        v, w = self.v, self.w
        cyc = set(_cycle_edges(v))
        hit = D & cyc
        if not hit:
            e1 = pair(v[0], self.z1)
            if e1 not in D:
                raise InvariantError("R2Star lift: cycle kept but v1 z1 not deleted")
            out = (D - {e1}) | {pair(v[0], v[1]), pair(v[2], v[3]), pair(w[0], self.z1)}
            if self.z is not None:
                e3 = pair(v[2], self.z)
                if e3 not in out:
                    raise InvariantError("R2Star lift: cycle kept but v3 z not deleted")
                out = (out - {e3}) | {pair(self.zw, self.z)}  # type: ignore[arg-type]
            return out
        if len(hit) != 2:
            raise InvariantError("R2Star lift: cycle cut in an unexpected way")
        return (D - hit) | _spokes(v, w)


@dataclass(frozen=True)
class R3Gadget:
    """Cycle and ``w_{3-s}`` replaced by ``x - w_s - w3`` with ``d(x)=0``."""

    v: tuple[int, int, int, int]
    w: tuple[int, int, int]
    s: int
    x: int

    def lift(self, D: set[Pair]) -> set[Pair]:
        v, w = self.v, self.w
        ws = w[self.s - 1]
        link = pair(ws, w[2])
        if link in D:
            return (D - {link}) | {pair(v[0], w[0]), pair(v[1], w[1]), pair(v[2], w[2])}
        return D | {pair(v[1], v[2]), pair(v[3], v[0])}


@dataclass(frozen=True)
class R4Shrink:
    """``v3, v4`` removed and ``d(v2)`` cleared; ``u`` is ``v1``'s outside neighbour."""

    v: tuple[int, int, int, int]
    u: int

    def lift(self, D: set[Pair]) -> set[Pair]:
        v = self.v
        if pair(v[0], self.u) in D:
            return set(D)
        return D | {pair(v[1], v[2]), pair(v[3], v[0])}


@dataclass(frozen=True)
class R4Gadget:
    """Cycle replaced by the path ``q1 - x - q3 - q4 - y - q6``.

    ``cut`` holds the two cycle edges to delete when ``xx'`` survives.
    """

    cycle: tuple[int, int, int, int]
    x: int
    y: int
    xp: int
    yp: int
    q: tuple[int, int, int, int]
    cut: tuple[Pair, Pair]

    def lift(self, D: set[Pair]) -> set[Pair]:
        gadget = set(self.q)
        inside = {e for e in D if e[0] in gadget or e[1] in gadget}
        xx, yy = pair(self.x, self.xp), pair(self.y, self.yp)
        if (xx in D) != (yy in D):
            raise InvariantError("R4Gadget lift: exactly one outside edge deleted")
        if xx in D:
            return D - inside
        return (D - inside) | set(self.cut)


@dataclass(frozen=True)
class NormalizeEdgeCut:
    u: int
    w: int

    def lift(self, D: set[Pair]) -> set[Pair]:
        return D | {pair(self.u, self.w)}


@dataclass(frozen=True)
class ComponentSplit:
    parts: tuple[frozenset[int], ...]

    def lift(self, D: set[Pair]) -> set[Pair]:
        return set(D)


ReductionStep = Union[
    TriangleAbsorb,
    RDeletable,
    R2GPlus,
    R2Star,
    R3Gadget,
    R4Shrink,
    R4Gadget,
    NormalizeEdgeCut,
    ComponentSplit,
]


@dataclass(frozen=True)
class Rewritten:
    instance: Instance
    step: ReductionStep


StepOutcome = Union[Decided, Rewritten]


def _no(reason: str) -> Decided:
    return Decided(False, None, reason)


def _work(inst: Instance, in_place: bool) -> Instance:
    return inst if in_place else inst.copy()


# ----------------------------------------------------------------------
# Split-off of forced sets


def apply_r_deletable(inst: Instance, X: Iterable[int], in_place: bool = False) -> StepOutcome:
    """Split off ``X``, assuming every solution deletes all edges leaving it.

    ``G[X]`` is solved exhaustively with deletion budgets reduced by the
    cut edges.  The result is sound even when ``X`` is not actually forced
    but the instance is a NO-instance.
    """
    X = frozenset(X)
    if len(X) > R_DELETABLE_MAX:
        raise UsageError(f"split-off sets are limited to {R_DELETABLE_MAX} vertices, got {len(X)}")
    if not X <= inst.adj.keys():
        raise UsageError("split-off set contains unknown vertices")
    F: set[Pair] = set()
    used: dict[int, int] = {}
    for x in X:
        for u in inst.adj[x]:
            if u not in X:
                F.add(pair(x, u))
                used[x] = used.get(x, 0) + 1
                used[u] = used.get(u, 0) + 1
    for v, k in used.items():
        if k > inst.d_star[v]:
            return _no(f"edges leaving the split-off set exceed the deletion budget at {v}")
    sub = inst.subgraph(X)
    for x in X:
        sub.d_star[x] -= used.get(x, 0)
    inner = oracle_solve(sub)
    if inner is None:
        return _no("split-off part has no solution")
    if len(X) == len(inst.adj):
        return Decided(True, inner, "whole instance solved exhaustively")
    g = _work(inst, in_place)
    for v, k in used.items():
        if v not in X:
            g.set_weights(v, d=g.d_star[v] - k)
    g.remove_vertices(sorted(X))
    return Rewritten(g, RDeletable(X, frozenset(F), inner))


# ----------------------------------------------------------------------
# Triangles and high degree


def _find_triangle(inst: Instance) -> tuple[int, int, int] | None:
    for v in sorted(inst.adj):
        for u in sorted(x for x in inst.adj[v] if x > v):
            common = [w for w in inst.adj[v] & inst.adj[u] if w > u]
            if common:
                return (v, u, min(common))
    return None


def reduce_triangles(
    inst: Instance,
    witness: Triangle | HighDegree | None = None,
    in_place: bool = False,
) -> StepOutcome:
    """Grow a triangle into its forced clique and remove it.

    A vertex outside the clique ``Q`` with one edge into ``Q`` must lose
    that edge, one with ``|Q| - 1`` edges must gain the missing pair, one
    with ``|Q|`` edges joins ``Q``, and anything else is a NO.  Outside
    vertices are handled in ascending id order.  Without a triangle, a
    vertex of degree at least four is a NO.
    """
    tri: tuple[int, ...] | None
    if isinstance(witness, Triangle):
        tri = witness.vertices
    elif isinstance(witness, HighDegree):
        tri = None
    else:
        tri = _find_triangle(inst)
    if tri is None:
        if isinstance(witness, HighDegree):
            v = witness.vertex
            if len(inst.adj[v]) < 4:
                raise UsageError(f"vertex {v} has degree below four")
            ns = inst.adj[v]
            if any(ns & inst.adj[u] for u in ns):
                raise UsageError(f"vertex {v} lies on a triangle")
            return _no(f"triangle-free vertex {v} has degree {len(ns)}")
        high = [v for v in sorted(inst.adj) if len(inst.adj[v]) >= 4]
        if not high:
            raise UsageError("no triangle and no vertex of degree four or more")
        return _no(f"triangle-free vertex {high[0]} has degree {len(inst.adj[high[0]])}")
    a, b, c = tri
    if not (inst.has_edge(a, b) and inst.has_edge(b, c) and inst.has_edge(a, c)):
        raise UsageError(f"{tri} is not a triangle")

    g = _work(inst, in_place)
    Q: set[int] = set()
    links: dict[int, int] = {}
    heap: list[int] = []
    deletions: set[Pair] = set()
    additions: set[Pair] = set()

    def absorb(v: int) -> None:
        Q.add(v)
        links.pop(v, None)
        for u in g.adj[v]:
            if u not in Q:
                if u not in links:
                    links[u] = 0
                    heapq.heappush(heap, u)
                links[u] += 1

    for v in tri:
        absorb(v)
    while heap:
        v = heapq.heappop(heap)
        if v not in links:
            continue
        k = links.pop(v)
        if k == 1:
            q = next(iter(g.adj[v] & Q))
            if g.d_star[v] != 1 or g.d_star[q] != 1:
                return _no(f"edge ({q}, {v}) into a forced clique is not deletable")
            g.remove_edge(v, q)
            g.set_weights(v, d=0)
            g.set_weights(q, d=0)
            deletions.add(pair(v, q))
        elif k == len(Q) - 1:
            q = next(iter(Q - g.adj[v]))
            if g.a_star[v] != 1 or g.a_star[q] != 1:
                return _no(f"pair ({q}, {v}) needed by a forced clique is not addable")
            g.add_edge(v, q)
            g.set_weights(v, a=0)
            g.set_weights(q, a=0)
            additions.add(pair(v, q))
            absorb(v)
        elif k == len(Q):
            absorb(v)
        else:
            return _no(f"vertex {v} has {k} of {len(Q)} possible edges into a forced clique")
    g.remove_vertices(sorted(Q))
    return Rewritten(g, TriangleAbsorb(frozenset(Q), frozenset(deletions), frozenset(additions)))


# ----------------------------------------------------------------------
# 4-cycles


def _as_cycle(inst: Instance, ctx: C4 | tuple[int, ...]) -> tuple[int, int, int, int]:
    cyc = ctx.cycle if isinstance(ctx, C4) else tuple(ctx)
    if len(cyc) != 4 or len(set(cyc)) != 4:
        raise UsageError(f"{cyc} is not a 4-cycle")
    for i in range(4):
        if not inst.has_edge(cyc[i], cyc[(i + 1) % 4]):
            raise UsageError(f"{cyc} is not a 4-cycle")
    if inst.has_edge(cyc[0], cyc[2]) or inst.has_edge(cyc[1], cyc[3]):
        raise UsageError(f"{cyc} has a chord")
    return cyc  # type: ignore[return-value]


def _outside(inst: Instance, v: int, cycle: Iterable[int]) -> int | None:
    outs = inst.adj[v] - set(cycle)
    if len(outs) > 1:
        raise UsageError(f"vertex {v} has more than one neighbour off the cycle")
    return next(iter(outs)) if outs else None


@dataclass(frozen=True)
class C4Context:
    """A 4-cycle ``v`` with outside neighbours ``w``, in a fixed labelling.

    ``e[i]`` tells whether ``w[i] w[i+1]`` is an edge; ``z[i]`` is the third
    neighbour of ``w[i]`` besides ``v[i]`` and its partner ``w`` on the
    same side (``w1 <-> w4``, ``w2 <-> w3``), when it has one.
    """

    v: tuple[int, int, int, int]
    w: tuple[int, ...]
    e: tuple[bool, bool, bool, bool]
    z: tuple[int | None, ...]

    @property
    def V8(self) -> frozenset[int]:
        return frozenset(self.v) | frozenset(self.w)

    @property
    def VC(self) -> frozenset[int]:
        return frozenset(self.v)

    def permuted(self, inst: Instance, sigma: tuple[int, int, int, int]) -> "C4Context":
        return c4_context(inst, tuple(self.v[i] for i in sigma))


PARTNER = (3, 2, 1, 0)
SIGMA_SWAP_SIDES = (1, 0, 3, 2)
SIGMA_MIRROR = (3, 2, 1, 0)
SIGMA_BOTH = (2, 3, 0, 1)


def c4_context(inst: Instance, cycle: tuple[int, ...]) -> C4Context:
    """Context of a 4-cycle whose vertices all have degree 3."""
    v = tuple(cycle)
    w = tuple(_outside(inst, x, v) for x in v)
    if any(x is None for x in w):
        raise UsageError("every cycle vertex needs an outside neighbour")
    e = tuple(inst.has_edge(w[i], w[(i + 1) % 4]) for i in range(4))  # type: ignore[arg-type]
    z: list[int | None] = []
    for i in range(4):
        rest = inst.adj[w[i]] - {v[i], w[PARTNER[i]]}  # type: ignore[index]
        z.append(min(rest) if len(rest) == 1 and inst.has_edge(w[i], w[PARTNER[i]]) else None)  # type: ignore[arg-type]
    return C4Context(v, w, e, tuple(z))  # type: ignore[arg-type]


def reduce_c4_four_deg3(
    inst: Instance,
    ctx: C4 | tuple[int, ...],
    in_place: bool = False,
    _depth: int = 0,
) -> StepOutcome:
    """Remove a 4-cycle all of whose vertices have degree 3.

    In any solution either all four spokes ``v_i w_i`` are deleted and the
    cycle survives, or two opposite cycle edges are deleted and each side
    closes a 4-cycle through an edge between outside neighbours.  The
    checks below rule one of these out whenever they can, splitting off
    the cycle or the cycle with its outside neighbours; the remaining
    configurations are rewritten by one of two gadgets.
    """
    cyc = _as_cycle(inst, ctx)
    if any(len(inst.adj[x]) != 3 for x in cyc):
        raise UsageError("every cycle vertex must have degree 3")
    c = c4_context(inst, cyc)
    v, w = c.v, c.w
    if w[0] == w[2] or w[1] == w[3]:
        return _no("K_{2,3} subgraph")
    if any(inst.d_star[x] == 0 or inst.a_star[x] == 0 for x in v):
        return _no("cycle vertex without full budgets")
    if all(c.e):
        comp = component_of(inst, v[0])
        if comp != c.V8:
            raise UsageError("closed 8-vertex configuration is not a component")
        return apply_r_deletable(inst, comp, in_place)
    r = c.e.index(False)
    if r:
        c = c4_context(inst, v[r:] + v[:r])
        v, w = c.v, c.w
    if not (c.e[1] and c.e[3]):
        # The two-sided option needs both w2w3 and w4w1.
        return apply_r_deletable(inst, c.VC, in_place)
    if c.e[2]:
        # w1 - w4 - w3 - w2 would be an induced path if the cycle survived.
        return apply_r_deletable(inst, c.V8, in_place)
    if any(inst.d_star[x] == 0 for x in w):
        return apply_r_deletable(inst, c.V8, in_place)
    if any(inst.a_star[x] == 0 for x in w):
        return apply_r_deletable(inst, c.VC, in_place)
    return _four_deg3_outer(inst, c, in_place, _depth)


def _four_deg3_outer(inst: Instance, c: C4Context, in_place: bool, depth: int) -> StepOutcome:
    """Cases driven by the third neighbours ``z_i`` (e2, e4 present; e1, e3 absent)."""
    z = c.z
    V8 = c.V8
    present = [x for x in z if x is not None]
    if any(x in V8 for x in present):
        return apply_r_deletable(inst, V8, in_place)
    if len(set(present)) != len(present):
        return apply_r_deletable(inst, c.VC, in_place)
    if z[0] is not None and z[3] is not None and not inst.has_edge(z[0], z[3]):
        return apply_r_deletable(inst, V8, in_place)
    if z[1] is not None and z[2] is not None and not inst.has_edge(z[1], z[2]):
        return apply_r_deletable(inst, V8, in_place)

    def has(*idx: int) -> bool:
        return all(z[i] is not None for i in idx)

    if (
        (has(0, 2, 3) and not inst.has_edge(z[2], z[3]))  # type: ignore[arg-type]
        or (has(1, 2, 3) and not inst.has_edge(z[2], z[3]))  # type: ignore[arg-type]
        or (has(0, 1, 3) and not inst.has_edge(z[0], z[1]))  # type: ignore[arg-type]
        or (has(0, 1, 2) and not inst.has_edge(z[0], z[1]))  # type: ignore[arg-type]
    ):
        g = _work(inst, in_place)
        g.remove_vertices(c.v)
        g.add_edge(c.w[0], c.w[1])
        g.add_edge(c.w[2], c.w[3])
        return Rewritten(g, R2GPlus(c.v, c.w))  # type: ignore[arg-type]

    pair14, pair23 = has(0, 3), has(1, 2)
    if pair14 and pair23:
        comp = component_of(inst, c.v[0])
        if len(comp) > R_DELETABLE_MAX:
            raise InvariantError("fully extended configuration exceeds 12 vertices")
        return apply_r_deletable(inst, comp, in_place)
    if pair14 or pair23:
        if not pair14:
            c = c.permuted(inst, SIGMA_SWAP_SIDES)
        if c.z[1] is not None:
            c = c.permuted(inst, SIGMA_MIRROR)
        z = c.z
        if z[2] is not None:
            V11 = c.V8 | {z[0], z[2], z[3]}
            comp = component_of(inst, c.v[0])
            if comp == V11:
                return apply_r_deletable(inst, V11, in_place)
            shared = (inst.adj[z[0]] & inst.adj[z[2]]) - V11  # type: ignore[index]
            if shared:
                return apply_r_deletable(inst, c.V8, in_place)
            return apply_r_deletable(inst, c.VC, in_place)
        comp = component_of(inst, c.v[0])
        if len(comp) <= R_DELETABLE_MAX:
            return apply_r_deletable(inst, comp, in_place)
        if depth >= 1:
            raise InvariantError("re-rooted 4-cycle did not resolve")
        alt = (c.w[0], c.v[0], c.v[3], c.w[3])
        return reduce_c4_four_deg3(inst, alt, in_place, depth + 1)

    if not present:
        comp = component_of(inst, c.v[0])
        if comp != V8:
            raise UsageError("8-vertex configuration without third neighbours is not a component")
        return apply_r_deletable(inst, V8, in_place)
    if z[0] is None:
        sigma = SIGMA_MIRROR if z[3] is not None else SIGMA_SWAP_SIDES if z[1] is not None else SIGMA_BOTH
        c = c.permuted(inst, sigma)
    v, w, z = c.v, c.w, c.z
    if z[1] is not None:
        zz, zw = z[1], w[1]
    elif z[2] is not None:
        zz, zw = z[2], w[2]
    else:
        zz = zw = None
    g = _work(inst, in_place)
    g.remove_vertices(w)
    g.add_edge(v[0], z[0])  # type: ignore[arg-type]
    if zz is not None:
        g.add_edge(v[2], zz)
    return Rewritten(g, R2Star(v, w, z[0], zz, zw))  # type: ignore[arg-type]


def reduce_c4_three_deg3(
    inst: Instance,
    ctx: C4 | tuple[int, ...],
    in_place: bool = False,
) -> StepOutcome:
    """Remove a 4-cycle with exactly three degree-3 vertices.

    ``v4`` is the degree-2 vertex, ``v2`` the one opposite it.  A solution
    keeps the cycle and deletes the three spokes (option i) or deletes two
    opposite cycle edges, which needs ``w2w3`` (option ii) or ``w1w2``
    (option iii).  Weight checks discard options that the budgets forbid;
    if both option i and one of the others survive, the cycle and the
    degree-2 outside neighbour are replaced by a path with a pinned end.
    """
    cyc = _as_cycle(inst, ctx)
    degs = [len(inst.adj[x]) for x in cyc]
    if sorted(degs) != [2, 3, 3, 3]:
        raise UsageError("cycle must have exactly three degree-3 vertices and one of degree 2")
    k = degs.index(2)
    rot = cyc[k + 1:] + cyc[:k + 1]
    v1, v2, v3, v4 = rot
    if v1 > v3:
        v1, v3 = v3, v1
    v = (v1, v2, v3, v4)
    w1, w2, w3 = (_outside(inst, x, v) for x in (v1, v2, v3))
    if w1 == w3:
        return _no("K_{2,3} subgraph")
    e12, e23 = inst.has_edge(w1, w2), inst.has_edge(w2, w3)  # type: ignore[arg-type]
    if e23 and not e12:
        v1, v3, w1, w3 = v3, v1, w3, w1
        v = (v1, v2, v3, v4)
        e12, e23 = e23, e12
    w = (w1, w2, w3)
    a, d = inst.a_star, inst.d_star
    all_d = all(d[x] == 1 for x in v)
    opt_i = all(d[x] == 1 for x in (v1, v2, v3) + w) and all(a[x] == 1 for x in v)  # type: ignore[operator]
    opt_ii = (
        e23 and all_d and all(a[x] == 1 for x in (w1, w2, w3, v2, v3, v4)) and len(inst.adj[w1]) <= 2  # type: ignore[index]
    )
    opt_iii = (
        e12 and all_d and all(a[x] == 1 for x in (w1, w2, w3, v1, v2, v4)) and len(inst.adj[w3]) <= 2  # type: ignore[index]
    )
    V7 = frozenset(v) | frozenset(w)  # type: ignore[arg-type]
    if not (opt_i or opt_ii or opt_iii):
        return _no("budgets rule out every way to resolve the cycle")
    if not opt_i:
        return apply_r_deletable(inst, V7, in_place)
    if not (opt_ii or opt_iii):
        return apply_r_deletable(inst, frozenset(v), in_place)
    if e12 and e23:
        comp = component_of(inst, v1)
        if comp != V7:
            raise UsageError("7-vertex configuration is not a component")
        return apply_r_deletable(inst, V7, in_place)
    if inst.has_edge(w1, w3):  # type: ignore[arg-type]
        # w1 is saturated by v1, w2, w3, so the configuration is closed.
        comp = component_of(inst, v1)
        if comp != V7:
            raise UsageError("7-vertex configuration is not a component")
        return apply_r_deletable(inst, V7, in_place)
    dw1, dw2 = len(inst.adj[w1]), len(inst.adj[w2])  # type: ignore[index]
    if dw1 == 3 and dw2 == 3:
        raise UsageError("w1 v1 v2 w2 is a 4-cycle of degree-3 vertices")
    s = 1 if dw1 == 3 else 2
    ws, wo = (w1, w2) if s == 1 else (w2, w1)
    g = _work(inst, in_place)
    g.remove_vertices(v + (wo,))  # type: ignore[operator]
    x = g.add_vertex(a=1, d=0)
    g.add_edge(ws, w3)  # type: ignore[arg-type]
    g.add_edge(ws, x)  # type: ignore[arg-type]
    return Rewritten(g, R3Gadget(v, w, s, x))  # type: ignore[arg-type]


def reduce_c4_general(
    inst: Instance,
    ctx: C4 | tuple[int, ...],
    in_place: bool = False,
) -> StepOutcome:
    """Remove a 4-cycle with at most two degree-3 vertices."""
    cyc = _as_cycle(inst, ctx)
    a, d = inst.a_star, inst.d_star
    deg3 = [x for x in cyc if len(inst.adj[x]) == 3]
    if len(deg3) > 2 or any(len(inst.adj[x]) > 3 for x in cyc):
        raise UsageError("cycle has more than two degree-3 vertices")
    VC = frozenset(cyc)
    if any(d[x] == 0 for x in cyc):
        return apply_r_deletable(inst, VC, in_place)
    if not deg3:
        if component_of(inst, cyc[0]) != VC:
            raise UsageError("4-cycle without degree-3 vertices is not a component")
        return apply_r_deletable(inst, VC, in_place)
    if len(deg3) == 1:
        k = cyc.index(deg3[0])
        v = cyc[k:] + cyc[:k]
        if a[v[1]] < a[v[3]]:
            v = (v[0], v[3], v[2], v[1])
        u = _outside(inst, v[0], v)
        opt_i = all(a[x] == 1 for x in v) and d[u] == 1  # type: ignore[index]
        opt_23 = a[u] == 1 and a[v[1]] == 1  # type: ignore[index]
        if not (opt_i or opt_23):
            return _no("budgets rule out every way to resolve the cycle")
        if not opt_23:
            return apply_r_deletable(inst, VC, in_place)
        if not opt_i:
            return apply_r_deletable(inst, VC | {u}, in_place)  # type: ignore[arg-type]
        g = _work(inst, in_place)
        g.remove_vertices((v[2], v[3]))
        g.set_weights(v[1], d=0)
        return Rewritten(g, R4Shrink(v, u))  # type: ignore[arg-type]

    x, y = sorted(deg3)
    k = cyc.index(x)
    v = cyc[k:] + cyc[:k]
    adjacent = inst.has_edge(x, y)
    if adjacent and v[1] == y:
        v = (v[0], v[3], v[2], v[1])
    xp, yp = _outside(inst, x, v), _outside(inst, y, v)
    low = tuple(t for t in v if t not in (x, y))
    if adjacent:
        # v = (x, v2, v3, y)
        if inst.has_edge(xp, yp):  # type: ignore[arg-type]
            comp = component_of(inst, x)
            if len(comp) != 6:
                raise UsageError("closed 6-vertex configuration is not a component")
            return apply_r_deletable(inst, comp, in_place)
        cut = (pair(v[1], v[2]), pair(v[3], v[0]))
    else:
        # v = (x, v2, y, v4)
        if xp == yp:
            return _no("K_{2,3} subgraph")
        cut = (pair(v[0], v[1]), pair(v[2], v[3]))
    opt_i = all(a[t] == 1 for t in v) and d[xp] == 1 and d[yp] == 1  # type: ignore[index]
    opt_23 = a[xp] == 1 and a[yp] == 1 and all(a[t] == 1 for t in low)  # type: ignore[index]
    if not (opt_i or opt_23):
        return _no("budgets rule out every way to resolve the cycle")
    if not opt_23:
        return apply_r_deletable(inst, VC, in_place)
    if not opt_i:
        return apply_r_deletable(inst, VC | {xp, yp}, in_place)  # type: ignore[arg-type]
    g = _work(inst, in_place)
    g.remove_vertices(low)
    if adjacent:
        g.remove_edge(x, y)
    q1 = g.add_vertex(a=1, d=0)
    q3 = g.add_vertex(a=1, d=1)
    q4 = g.add_vertex(a=1, d=1)
    q6 = g.add_vertex(a=1, d=0)
    for s, t in ((q1, x), (x, q3), (q3, q4), (q4, y), (y, q6)):
        g.add_edge(s, t)
    g.set_weights(x, a=1, d=1)
    g.set_weights(y, a=1, d=1)
    return Rewritten(g, R4Gadget(v, x, y, xp, yp, (q1, q3, q4, q6), cut))  # type: ignore[arg-type]


# ----------------------------------------------------------------------
# Special-class normalisation


def normalize_special(
    inst: Instance,
    breach: SpecialClassBreach | None = None,
    in_place: bool = False,
) -> StepOutcome:
    """Repair one breach of the special-class conditions.

    (a) a degree-3 vertex without deletion budget is a NO; (b) a degree-2
    vertex without deletion budget pins a path of three, which is split
    off; (c) an edge from a degree-3 vertex to a vertex without addition
    budget, and (d) an edge between two degree-3 vertices, must be
    deleted, so it is cut and both endpoints lose their deletion budget.
    """
    if breach is None:
        found = find_violation(inst)
        if not isinstance(found, SpecialClassBreach):
            raise UsageError("instance has no special-class breach at the front of the queue")
        breach = found
    rule, wit = breach.rule, breach.vertices
    if rule == "a":
        (v,) = wit
        if len(inst.adj[v]) != 3 or inst.d_star[v] != 0:
            raise UsageError("rule a needs a degree-3 vertex without deletion budget")
        return _no(f"degree-3 vertex {v} cannot delete an edge")
    if rule == "b":
        (x,) = wit
        if len(inst.adj[x]) != 2 or inst.d_star[x] != 0:
            raise UsageError("rule b needs a degree-2 vertex without deletion budget")
        return apply_r_deletable(inst, {x} | inst.adj[x], in_place)
    if rule not in ("c", "d"):
        raise UsageError(f"unknown rule {rule!r}")
    u, w = wit
    if not inst.has_edge(u, w) or len(inst.adj[u]) != 3:
        raise UsageError(f"rule {rule} needs an edge at a degree-3 vertex")
    if rule == "c" and inst.a_star[w] != 0:
        raise UsageError("rule c needs a neighbour without addition budget")
    if rule == "d" and len(inst.adj[w]) != 3:
        raise UsageError("rule d needs two adjacent degree-3 vertices")
    if inst.d_star[u] == 0 or inst.d_star[w] == 0:
        return _no(f"forced deletion of ({u}, {w}) is not allowed")
    g = _work(inst, in_place)
    g.remove_edge(u, w)
    g.set_weights(u, d=0)
    g.set_weights(w, d=0)
    return Rewritten(g, NormalizeEdgeCut(u, w))
