"""Seeded instance generators.

All randomness comes from :class:`random.Random` (Mersenne Twister) seeded
with the caller's integer, so every generator is reproducible across
platforms and Python versions that keep that generator stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import UsageError
from .graph import (
    LEVEL_C4_FOUR,
    LEVEL_C4_LOW,
    LEVEL_C4_THREE,
    Instance,
    components,
    find_violation,
    pair,
    violation_level,
)

# ----------------------------------------------------------------------
# Planted, random and named instances


def gen_planted(
    n: int,
    seed: int,
    clique_size_max: int = 6,
    edit_density: float = 0.2,
    budget_p: float = 0.5,
) -> Instance:
    """A YES-instance built by undoing a hidden solution on a cluster graph.

    A random cluster graph ``H`` is perturbed by removing a matching ``A'``
    of intra-cluster edges and inserting a matching ``D'`` of
    inter-cluster pairs.  Endpoints of ``A'`` get ``a_star = 1``, endpoints
    of ``D'`` get ``d_star = 1``; other budgets are 1 with probability
    ``budget_p``.  About ``edit_density * n / 2`` edits of each kind are
    attempted.
    """
    if n < 1:
        raise UsageError("n must be at least 1")
    if clique_size_max < 1:
        raise UsageError("clique_size_max must be at least 1")
    if not 0.0 <= edit_density <= 1.0 or not 0.0 <= budget_p <= 1.0:
        raise UsageError("edit_density and budget_p must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    cluster = [0] * n
    members: list[list[int]] = []
    i = 0
    while i < n:
        size = rng.randint(1, clique_size_max)
        block = order[i : i + size]
        for v in block:
            cluster[v] = len(members)
        members.append(sorted(block))
        i += size
    edges = {pair(u, v) for block in members for u, v in combinations(block, 2)}

    target = round(edit_density * n / 2)
    used_a: set[int] = set()
    intra = sorted(edges)
    rng.shuffle(intra)
    removed = []
    for u, v in intra:
        if len(removed) >= target:
            break
        if u not in used_a and v not in used_a:
            used_a.update((u, v))
            removed.append((u, v))
    used_d: set[int] = set()
    inserted = []
    if len(members) > 1:
        for _ in range(20 * target):
            if len(inserted) >= target:
                break
            u, v = rng.sample(range(n), 2)
            if cluster[u] == cluster[v] or u in used_d or v in used_d:
                continue
            used_d.update((u, v))
            inserted.append(pair(u, v))
    edges.difference_update(removed)
    edges.update(inserted)
    a_star = {v: 1 if v in used_a or rng.random() < budget_p else 0 for v in range(n)}
    d_star = {v: 1 if v in used_d or rng.random() < budget_p else 0 for v in range(n)}
    return Instance.from_edges(n, sorted(edges), a_star, d_star)


def gen_random(n: int, p: float, seed: int, budget_p: float = 0.75) -> Instance:
    """``G(n, p)`` with every budget 1 independently with probability ``budget_p``."""
    if n < 0:
        raise UsageError("n must be non-negative")
    if not 0.0 <= p <= 1.0 or not 0.0 <= budget_p <= 1.0:
        raise UsageError("p and budget_p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    a_star = {v: int(rng.random() < budget_p) for v in range(n)}
    d_star = {v: int(rng.random() < budget_p) for v in range(n)}
    return Instance.from_edges(n, edges, a_star, d_star)


def _cycle(k: int) -> list[tuple[int, int]]:
    return [pair(i, (i + 1) % k) for i in range(k)]


NAMED: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "k23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    "petersen": (
        10,
        _cycle(5) + [(i, i + 5) for i in range(5)] + [pair(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    ),
    "c4": (4, _cycle(4)),
    "c5": (5, _cycle(5)),
    "k13": (4, [(0, 1), (0, 2), (0, 3)]),
    "k14": (5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
    "p4": (4, [(0, 1), (1, 2), (2, 3)]),
    "cube": (8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b]),
    "h-graph": (6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
}


def gen_named(spec: str) -> Instance:
    """A named graph, optionally with weights: ``name[:a=BITS][:d=BITS]``.

    ``BITS`` is a string of 0/1 characters, one per vertex in id order;
    weights default to 1.
    """
    name, *suffixes = spec.strip().lower().split(":")
    if name not in NAMED:
        raise UsageError(f"unknown graph name {name!r}; choose from {', '.join(sorted(NAMED))}")
    n, edges = NAMED[name]
    weights = {"a": [1] * n, "d": [1] * n}
    for suffix in suffixes:
        key, _, bits = suffix.partition("=")
        if key not in weights or len(bits) != n or set(bits) - {"0", "1"}:
            raise UsageError(f"weight suffix {suffix!r} must be a=<{n} bits> or d=<{n} bits>")
        weights[key] = [int(b) for b in bits]
    return Instance.from_edges(
        n,
        edges,
        dict(enumerate(weights["a"])),
        dict(enumerate(weights["d"])),
    )


# ----------------------------------------------------------------------
# Configurations for single reduction steps


STEP_KINDS = (
    "TriangleAbsorb",
    "RDeletable",
    "R2GPlus",
    "R2Star",
    "R3Gadget",
    "R4Shrink",
    "R4Gadget",
    "NormalizeEdgeCut",
    "ComponentSplit",
)


@dataclass(frozen=True)
class StepCase:
    """A pre-step instance together with the outcome of the step on it."""

    kind: str
    pre: Instance
    post: tuple[Instance, ...]
    step: object


def _grow(rng: random.Random, adj: dict[int, set[int]], budget: int) -> None:
    """Attach up to ``budget`` new vertices and a few extra edges.

    Keeps the maximum degree at 3 and creates no triangle.
    """
    for _ in range(budget):
        open_ = [v for v in adj if len(adj[v]) < 3]
        if not open_:
            break
        new = max(adj) + 1
        adj[new] = set()
        for u in rng.sample(open_, min(len(open_), rng.choice((1, 1, 2)))):
            if len(adj[new]) < 3 and not (adj[u] & adj[new]):
                adj[new].add(u)
                adj[u].add(new)
    for _ in range(rng.randint(0, 2)):
        open_ = [v for v in adj if len(adj[v]) < 3]
        if len(open_) < 2:
            break
        u, v = rng.sample(open_, 2)
        if v not in adj[u] and not (adj[u] & adj[v]):
            adj[u].add(v)
            adj[v].add(u)


def _weighted(rng: random.Random, adj: dict[int, set[int]], p_one: float) -> Instance:
    n = len(adj)
    edges = sorted({pair(u, v) for u in adj for v in adj[u]})
    a = {v: int(rng.random() < p_one) for v in range(n)}
    d = {v: int(rng.random() < p_one) for v in range(n)}
    return Instance.from_edges(n, edges, a, d)


def _core(kind: str, rng: random.Random) -> dict[int, set[int]]:
    c4 = [(0, 1), (1, 2), (2, 3), (3, 0)]
    if kind == "R4Shrink":
        edges = c4 + [(0, 4)]
    elif kind == "R4Gadget":
        edges = c4 + ([(0, 4), (1, 5)] if rng.random() < 0.5 else [(0, 4), (2, 5)])
    elif kind == "R3Gadget":
        edges = c4 + [(0, 4), (1, 5), (2, 6), (4, 5)]
    elif kind in ("R2Star", "R2GPlus"):
        edges = c4 + [(0, 4), (1, 5), (2, 6), (3, 7), (5, 6), (7, 4), (4, 8)]
        if kind == "R2GPlus":
            edges += [(7, 9), (8, 9), (6, 10)]
        elif rng.random() < 0.5:
            edges += [(rng.choice((5, 6)), 9)]
    else:
        raise UsageError(f"no core for {kind!r}")
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


_LEVEL_OF = {
    "R4Shrink": LEVEL_C4_LOW,
    "R4Gadget": LEVEL_C4_LOW,
    "R3Gadget": LEVEL_C4_THREE,
    "R2Star": LEVEL_C4_FOUR,
    "R2GPlus": LEVEL_C4_FOUR,
}


def _candidate(kind: str, rng: random.Random, max_vertices: int) -> Instance | None:
    if kind == "TriangleAbsorb":
        n = rng.randint(4, max_vertices)
        inst = gen_random(n, rng.choice((0.3, 0.4, 0.5, 0.6)), rng.randrange(2**32), 0.85)
        return inst if find_violation(inst).__class__.__name__ == "Triangle" else None
    if kind == "ComponentSplit":
        n = rng.randint(3, max_vertices)
        inst = gen_random(n, rng.choice((0.1, 0.2, 0.3)), rng.randrange(2**32), 0.85)
        return inst if len(components(inst)) > 1 else None
    if kind in ("RDeletable", "NormalizeEdgeCut"):
        n = rng.randint(4, max_vertices)
        adj: dict[int, set[int]] = {0: set()}
        _grow(rng, adj, n - 1)
        return _weighted(rng, adj, 0.85)
    adj = _core(kind, rng)
    room = max_vertices - len(adj)
    if room < 0:
        return None
    _grow(rng, adj, rng.randint(0, room))
    inst = _weighted(rng, adj, 0.9)
    hit = find_violation(inst)
    if hit is None or violation_level(hit) != _LEVEL_OF[kind]:
        return None
    return inst


def gen_step_case(kind: str, seed: int, max_vertices: int = 10, attempts: int = 20000) -> StepCase:
    """A configuration on which the highest-priority step is of type ``kind``.

    Candidates are drawn until applying the reduction for the first
    violation yields a rewrite recorded as ``kind``.  Raises
    :class:`UsageError` when ``attempts`` candidates all miss.
    """
    from .pipeline import _dispatch
    from .reductions import ComponentSplit, Rewritten

    if kind not in STEP_KINDS:
        raise UsageError(f"unknown step kind {kind!r}")
    rng = random.Random(seed)
    for _ in range(attempts):
        pre = _candidate(kind, rng, max_vertices)
        if pre is None or pre.n > max_vertices:
            continue
        if kind == "ComponentSplit":
            parts = components(pre)
            step = ComponentSplit(tuple(frozenset(p) for p in parts))
            return StepCase(kind, pre, tuple(pre.subgraph(p) for p in parts), step)
        hit = find_violation(pre)
        if hit is None:
            continue
        outcome = _dispatch(pre.copy(), hit)
        if isinstance(outcome, Rewritten) and type(outcome.step).__name__ == kind:
            return StepCase(kind, pre, (outcome.instance,), outcome.step)
    raise UsageError(f"no {kind} configuration with at most {max_vertices} vertices found")
