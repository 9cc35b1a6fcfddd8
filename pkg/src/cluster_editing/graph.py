"""Weighted instances, edit certificates and structural queries.

An :class:`Instance` is an undirected simple graph in which every vertex
carries an addition budget ``a_star`` and a deletion budget ``d_star``,
both in ``{0, 1}``.  Vertex ids are plain integers that stay stable when
other vertices are removed, so reduction traces can refer to them.

Queries in this module never mutate their argument.  The mutators on
:class:`Instance` exist for the reductions module; they optionally record
every vertex whose neighbourhood, degree or weights changed in a caller
supplied ``dirty`` set so that incremental scanners can re-check only the
affected region.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import InputError, UsageError

Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    """Return the unordered pair ``{u, v}`` as a sorted tuple."""
    return (u, v) if u < v else (v, u)


@dataclass
class Instance:
    """A graph with per-vertex addition and deletion budgets."""

    adj: dict[int, set[int]] = field(default_factory=dict)
    a_star: dict[int, int] = field(default_factory=dict)
    d_star: dict[int, int] = field(default_factory=dict)
    next_id: int = 0
    dirty: set[int] | None = field(default=None, repr=False, compare=False)

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(
        cls,
        vertices: int | Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        a_star: dict[int, int] | None = None,
        d_star: dict[int, int] | None = None,
    ) -> "Instance":
        """Build an instance; ``vertices`` is a count or an iterable of ids.

        Missing weights default to 1.  Raises :class:`InputError` on loops,
        duplicate edges, unknown endpoints or weights outside ``{0, 1}``.
        """
        ids = list(range(vertices)) if isinstance(vertices, int) else list(vertices)
        if len(set(ids)) != len(ids):
            raise InputError("duplicate vertex id")
        inst = cls()
        for v in ids:
            if not isinstance(v, int) or v < 0:
                raise InputError(f"vertex ids must be non-negative integers, got {v!r}")
            inst.adj[v] = set()
            inst.a_star[v] = 1
            inst.d_star[v] = 1
        inst.next_id = max(ids, default=-1) + 1
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u not in inst.adj or v not in inst.adj:
                raise InputError(f"edge ({u}, {v}) has an unknown endpoint")
            if v in inst.adj[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            inst.adj[u].add(v)
            inst.adj[v].add(u)
        for name, given in (("a_star", a_star), ("d_star", d_star)):
            if given is None:
                continue
            target = getattr(inst, name)
            for v, val in given.items():
                if v not in target:
                    raise InputError(f"{name} given for unknown vertex {v}")
                if val not in (0, 1):
                    raise InputError(f"{name}[{v}] must be 0 or 1, got {val!r}")
                target[v] = int(val)
        return inst

    def copy(self) -> "Instance":
        """Deep copy without the dirty log."""
        return Instance(
            {v: set(ns) for v, ns in self.adj.items()},
            dict(self.a_star),
            dict(self.d_star),
            self.next_id,
        )

    def subgraph(self, vertices: Iterable[int]) -> "Instance":
        """Induced sub-instance on ``vertices`` (ids and weights preserved)."""
        keep = set(vertices)
        missing = keep - self.adj.keys()
        if missing:
            raise UsageError(f"unknown vertices {sorted(missing)}")
        return Instance(
            {v: self.adj[v] & keep for v in keep},
            {v: self.a_star[v] for v in keep},
            {v: self.d_star[v] for v in keep},
            self.next_id,
        )

    def validate(self) -> None:
        """Raise :class:`InputError` unless all type invariants hold."""
        keys = self.adj.keys()
        if self.a_star.keys() != keys or self.d_star.keys() != keys:
            raise InputError("weights must be defined on exactly the vertex set")
        for v, ns in self.adj.items():
            if v in ns:
                raise InputError(f"self-loop at vertex {v}")
            for u in ns:
                if u not in self.adj or v not in self.adj[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
            if self.a_star[v] not in (0, 1) or self.d_star[v] not in (0, 1):
                raise InputError(f"weights of vertex {v} must be 0 or 1")
        if keys and self.next_id <= max(keys):
            raise InputError("next_id must exceed every vertex id")

    # -- queries ------------------------------------------------------
    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.adj.values()) // 2

    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def edges(self) -> list[Pair]:
        """All edges as sorted pairs, in lexicographic order."""
        return sorted((u, v) for u, ns in self.adj.items() for v in ns if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    # -- mutators -----------------------------------------------------
    def _touch(self, *vs: int) -> None:
        if self.dirty is not None:
            self.dirty.update(vs)

    def add_vertex(self, a: int = 1, d: int = 1) -> int:
        v = self.next_id
        self.next_id += 1
        self.adj[v] = set()
        self.a_star[v] = a
        self.d_star[v] = d
        self._touch(v)
        return v

    def remove_vertex(self, v: int) -> None:
        for u in self.adj[v]:
            self.adj[u].discard(v)
        self._touch(*self.adj[v])
        del self.adj[v], self.a_star[v], self.d_star[v]
        if self.dirty is not None:
            self.dirty.discard(v)

    def remove_vertices(self, vs: Iterable[int]) -> None:
        for v in list(vs):
            self.remove_vertex(v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v or v in self.adj[u]:
            raise UsageError(f"cannot add edge ({u}, {v})")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self._touch(u, v)

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise UsageError(f"edge ({u}, {v}) is absent")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self._touch(u, v)

    def set_weights(self, v: int, a: int | None = None, d: int | None = None) -> None:
        if a is not None:
            self.a_star[v] = a
        if d is not None:
            self.d_star[v] = d
        self._touch(v)


@dataclass(frozen=True)
class EditSolution:
    """A certificate: deleted edges ``D`` and added pairs ``A``."""

    deletions: frozenset[Pair] = frozenset()
    additions: frozenset[Pair] = frozenset()

    @classmethod
    def of(cls, deletions: Iterable[tuple[int, int]] = (), additions: Iterable[tuple[int, int]] = ()) -> "EditSolution":
        return cls(frozenset(pair(*e) for e in deletions), frozenset(pair(*e) for e in additions))


# ----------------------------------------------------------------------
# Structural queries


def components(inst: Instance) -> list[set[int]]:
    """Connected components, ordered by their minimum vertex id."""
    seen: set[int] = set()
    out: list[set[int]] = []
    for s in sorted(inst.adj):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in inst.adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(comp)
    return out


def component_of(inst: Instance, v: int) -> set[int]:
    comp = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in inst.adj[x]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    return comp


def is_cluster_graph(inst: Instance) -> bool:
    """True iff every connected component is a clique."""
    for comp in components(inst):
        k = len(comp) - 1
        if any(len(inst.adj[v]) != k for v in comp):
            return False
    return True


def classify_edge(inst: Instance, u: int, v: int) -> str:
    """``"deletable"`` or ``"non-deletable"`` for an edge ``uv``."""
    if not inst.has_edge(u, v):
        raise UsageError(f"({u}, {v}) is not an edge")
    return "deletable" if inst.d_star[u] == 1 and inst.d_star[v] == 1 else "non-deletable"


def classify_pair(inst: Instance, u: int, v: int) -> str:
    """``"addable"`` or ``"non-addable"`` for a non-adjacent pair ``uv``."""
    if u == v or u not in inst or v not in inst or inst.has_edge(u, v):
        raise UsageError(f"({u}, {v}) is not a non-adjacent vertex pair")
    return "addable" if inst.a_star[u] == 1 and inst.a_star[v] == 1 else "non-addable"


# ----------------------------------------------------------------------
# Violations


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]

    @property
    def witness(self) -> tuple[int, ...]:
        return self.vertices


@dataclass(frozen=True)
class HighDegree:
    vertex: int

    @property
    def witness(self) -> tuple[int, ...]:
        return (self.vertex,)


@dataclass(frozen=True)
class K23:
    """Two vertices ``pair`` sharing the three neighbours ``common``."""

    pair: tuple[int, int]
    common: tuple[int, int, int]

    @property
    def witness(self) -> tuple[int, ...]:
        return self.pair + self.common


@dataclass(frozen=True)
class C4:
    """A 4-cycle ``cycle`` (in cyclic order) and how many of it have degree 3."""

    cycle: tuple[int, int, int, int]
    deg3: int

    @property
    def witness(self) -> tuple[int, ...]:
        return self.cycle


@dataclass(frozen=True)
class SpecialClassBreach:
    """A breach of the special-class conditions.

    Rules: ``"a"`` degree-3 vertex with ``d_star = 0``; ``"b"`` degree-2
    vertex with ``d_star = 0``; ``"c"`` degree-3 ``u`` next to ``w`` with
    ``a_star(w) = 0``; ``"d"`` two adjacent degree-3 vertices.
    """

    rule: str
    vertices: tuple[int, ...]

    @property
    def witness(self) -> tuple[int, ...]:
        return self.vertices


Violation = Union[Triangle, HighDegree, K23, C4, SpecialClassBreach]

# Priority levels, scanned in this order.
LEVEL_TRIANGLE = 0
LEVEL_HIGH_DEGREE = 1
LEVEL_K23 = 2
LEVEL_C4_FOUR = 3
LEVEL_C4_THREE = 4
LEVEL_C4_LOW = 5
LEVEL_RULE_A = 6
LEVEL_RULE_B = 7
LEVEL_RULE_C = 8
LEVEL_RULE_D = 9
NUM_LEVELS = 10

# Every witness lies within this distance of its anchor (first element).
WITNESS_RADIUS = 2


def _triangle_at(inst: Instance, v: int) -> Violation | None:
    nv = inst.adj[v]
    higher = sorted(u for u in nv if u > v)
    for u in higher:
        common = [w for w in nv & inst.adj[u] if w > u]
        if common:
            return Triangle((v, u, min(common)))
    return None


def _high_degree_at(inst: Instance, v: int) -> Violation | None:
    return HighDegree(v) if len(inst.adj[v]) >= 4 else None


def _k23_at(inst: Instance, x: int) -> Violation | None:
    adj = inst.adj
    nx = adj[x]
    if len(nx) < 3:
        return None
    second = {y for u in nx for y in adj[u] if y > x}
    for y in sorted(second):
        common = nx & adj[y]
        if len(common) >= 3:
            return K23((x, y), tuple(sorted(common)[:3]))  # type: ignore[arg-type]
    return None


def _cycles_at(inst: Instance, v1: int) -> Iterator[tuple[int, int, int, int]]:
    """4-cycles whose minimum vertex is ``v1``, as ``(v1, a, c, b)`` with a < b."""
    adj = inst.adj
    higher = sorted(u for u in adj[v1] if u > v1)
    for i, a in enumerate(higher):
        na = adj[a]
        for b in higher[i + 1:]:
            for c in sorted(na & adj[b]):
                if c > v1:
                    yield (v1, a, c, b)


def _c4_at(inst: Instance, v: int, level: int) -> Violation | None:
    adj = inst.adj
    best = None
    for cyc in _cycles_at(inst, v):
        k = sum(1 for x in cyc if len(adj[x]) == 3)
        lvl = LEVEL_C4_FOUR if k == 4 else LEVEL_C4_THREE if k == 3 else LEVEL_C4_LOW
        if lvl == level and (best is None or cyc < best[0]):
            best = (cyc, k)
    return C4(best[0], best[1]) if best else None


def _rule_a_at(inst: Instance, v: int) -> Violation | None:
    if len(inst.adj[v]) == 3 and inst.d_star[v] == 0:
        return SpecialClassBreach("a", (v,))
    return None


def _rule_b_at(inst: Instance, v: int) -> Violation | None:
    if len(inst.adj[v]) == 2 and inst.d_star[v] == 0:
        return SpecialClassBreach("b", (v,))
    return None


def _rule_c_at(inst: Instance, u: int) -> Violation | None:
    if len(inst.adj[u]) != 3:
        return None
    bad = [w for w in inst.adj[u] if inst.a_star[w] == 0]
    return SpecialClassBreach("c", (u, min(bad))) if bad else None


def _rule_d_at(inst: Instance, u: int) -> Violation | None:
    adj = inst.adj
    if len(adj[u]) != 3:
        return None
    bad = [w for w in adj[u] if w > u and len(adj[w]) == 3]
    return SpecialClassBreach("d", (u, min(bad))) if bad else None


def detect_at(inst: Instance, level: int, v: int) -> Violation | None:
    """Smallest violation of the given priority level anchored at ``v``."""
    if level == LEVEL_TRIANGLE:
        return _triangle_at(inst, v)
    if level == LEVEL_HIGH_DEGREE:
        return _high_degree_at(inst, v)
    if level == LEVEL_K23:
        return _k23_at(inst, v)
    if level <= LEVEL_C4_LOW:
        return _c4_at(inst, v, level)
    if level == LEVEL_RULE_A:
        return _rule_a_at(inst, v)
    if level == LEVEL_RULE_B:
        return _rule_b_at(inst, v)
    if level == LEVEL_RULE_C:
        return _rule_c_at(inst, v)
    return _rule_d_at(inst, v)


def find_violation(inst: Instance) -> Violation | None:
    """Highest-priority violation, or ``None`` iff ``inst`` is special.

    Priority: triangle, degree >= 4, K_{2,3}, 4-cycle with four, three, and
    at most two degree-3 vertices, then special-class rules a to d.  Ties
    go to the lexicographically smallest witness tuple.
    """
    order = sorted(inst.adj)
    for level in range(NUM_LEVELS):
        for v in order:
            hit = detect_at(inst, level, v)
            if hit is not None:
                return hit
    return None


def violation_level(v: Violation) -> int:
    if isinstance(v, Triangle):
        return LEVEL_TRIANGLE
    if isinstance(v, HighDegree):
        return LEVEL_HIGH_DEGREE
    if isinstance(v, K23):
        return LEVEL_K23
    if isinstance(v, C4):
        return LEVEL_C4_FOUR if v.deg3 == 4 else LEVEL_C4_THREE if v.deg3 == 3 else LEVEL_C4_LOW
    return LEVEL_RULE_A + "abcd".index(v.rule)


def ball(inst: Instance, centers: Iterable[int], radius: int = WITNESS_RADIUS) -> set[int]:
    """Vertices within ``radius`` hops of any present center."""
    frontier = {v for v in centers if v in inst.adj}
    seen = set(frontier)
    for _ in range(radius):
        nxt = set()
        for v in frontier:
            nxt |= inst.adj[v]
        nxt -= seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen
