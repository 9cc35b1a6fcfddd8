"""End-to-end solver: reduce to the special class, decide, lift, verify.

The reduction loop always handles the highest-priority violation present
(see :func:`~cluster_editing.graph.find_violation`).  Instead of rescanning
the whole graph after every step, a scanner keeps one queue of candidate
anchor vertices per priority level.  A vertex leaves a queue once it
anchors nothing at that level, and re-enters every queue when a step
changes something within distance two of it, which is as far as any
witness reaches from its anchor.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvariantError
from .graph import (
    C4,
    K23,
    NUM_LEVELS,
    EditSolution,
    HighDegree,
    Instance,
    Pair,
    SpecialClassBreach,
    Triangle,
    Violation,
    ball,
    components,
    detect_at,
    is_cluster_graph,
    pair,
)
from .reductions import (
    ComponentSplit,
    Decided,
    ReductionStep,
    Rewritten,
    StepOutcome,
    normalize_special,
    reduce_c4_four_deg3,
    reduce_c4_general,
    reduce_c4_three_deg3,
    reduce_triangles,
)
from .special import decide_special, extract_solution_special


class Answer(enum.Enum):
    YES = "YES"
    NO = "NO"


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    certificate: EditSolution | None
    trace: tuple[ReductionStep, ...]
    stats: dict[str, int] = field(default_factory=dict, compare=False)
    reason: str = ""

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES


class _Scanner:
    """Per-level queues of anchors that may still carry a violation."""

    def __init__(self, inst: Instance) -> None:
        self.inst = inst
        order = sorted(inst.adj)
        self.heaps = [list(order) for _ in range(NUM_LEVELS)]
        self.pending = [set(order) for _ in range(NUM_LEVELS)]

    def next(self) -> Violation | None:
        inst = self.inst
        for level in range(NUM_LEVELS):
            heap, pend = self.heaps[level], self.pending[level]
            while heap:
                v = heap[0]
                if v in inst.adj:
                    hit = detect_at(inst, level, v)
                    if hit is not None:
                        return hit
                heapq.heappop(heap)
                pend.discard(v)
        return None

    def refresh(self, touched: set[int]) -> None:
        inst = self.inst
        live = {v for v in touched if v in inst.adj}
        if not live:
            return
        for v in ball(inst, live):
            for heap, pend in zip(self.heaps, self.pending):
                if v not in pend:
                    pend.add(v)
                    heapq.heappush(heap, v)


_STAGE_NAMES = {
    Triangle: "triangle",
    HighDegree: "high_degree",
    K23: "k23",
    C4: "c4",
    SpecialClassBreach: "normalize",
}


def _dispatch(inst: Instance, hit: Violation) -> StepOutcome:
    if isinstance(hit, (Triangle, HighDegree)):
        return reduce_triangles(inst, hit, in_place=True)
    if isinstance(hit, K23):
        return Decided(False, None, "K_{2,3} subgraph")
    if isinstance(hit, C4):
        if hit.deg3 == 4:
            return reduce_c4_four_deg3(inst, hit, in_place=True)
        if hit.deg3 == 3:
            return reduce_c4_three_deg3(inst, hit, in_place=True)
        return reduce_c4_general(inst, hit, in_place=True)
    return normalize_special(inst, hit, in_place=True)


def step_cap(n: int) -> int:
    return 64 * max(n, 1) ** 3


def solve(inst: Instance, want_certificate: bool = False) -> Verdict:
    """Decide ``inst``; with ``want_certificate`` also return a verified solution."""
    inst.validate()
    work = inst.copy()
    work.dirty = set()
    trace: list[ReductionStep] = []
    stats = {"steps": 0, "peak_vertices": work.n}
    parts = components(work)
    if len(parts) > 1:
        trace.append(ComponentSplit(tuple(frozenset(p) for p in parts)))
    scanner = _Scanner(work)
    cap = step_cap(inst.n)
    reduced_solution: EditSolution | None = None
    while True:
        hit = scanner.next()
        if hit is None:
            break
        if stats["steps"] >= cap:
            raise InvariantError(f"reduction loop exceeded the step cap of {cap}")
        stats["steps"] += 1
        stage = _STAGE_NAMES[type(hit)]
        stats[stage] = stats.get(stage, 0) + 1
        outcome = _dispatch(work, hit)
        if isinstance(outcome, Decided):
            if not outcome.yes:
                return Verdict(Answer.NO, None, tuple(trace), stats, outcome.reason)
            reduced_solution = outcome.solution
            break
        if outcome.instance is not work:
            raise InvariantError("reduction did not rewrite the working copy in place")
        trace.append(outcome.step)
        stats["peak_vertices"] = max(stats["peak_vertices"], work.n)
        touched = work.dirty
        work.dirty = set()
        scanner.refresh(touched)
    if reduced_solution is None:
        witness = decide_special(work)
        if witness is None:
            return Verdict(Answer.NO, None, tuple(trace), stats, "special-class matching query infeasible")
        if want_certificate:
            reduced_solution = extract_solution_special(work, witness)
    certificate = None
    if want_certificate:
        certificate = lift_solution(inst, trace, reduced_solution)  # type: ignore[arg-type]
        check = verify_solution(inst, certificate)
        if not check:
            raise InvariantError(f"lifted certificate fails verification: {check.message}")
    return Verdict(Answer.YES, certificate, tuple(trace), stats)


def lift_solution(
    original: Instance,
    trace: list[ReductionStep] | tuple[ReductionStep, ...],
    reduced_solution: EditSolution,
) -> EditSolution:
    """Map a solution of the reduced instance back to ``original``.

    Only the deletions are carried through the trace; the additions are
    then every missing pair inside a component of ``original - D``.
    """
    D = set(reduced_solution.deletions)
    for step in reversed(trace):
        D = step.lift(D)
    D = {pair(*e) for e in D}
    for u, v in D:
        if not original.has_edge(u, v):
            raise InvariantError(f"lifted deletion ({u}, {v}) is not an edge of the input")
    rest = original.copy()
    for u, v in D:
        rest.remove_edge(u, v)
    A: set[Pair] = set()
    for comp in components(rest):
        for u, v in combinations(sorted(comp), 2):
            if not rest.has_edge(u, v):
                A.add((u, v))
    covered: set[int] = set()
    for u, v in A:
        if original.a_star[u] != 1 or original.a_star[v] != 1:
            raise InvariantError(f"recomputed addition ({u}, {v}) is not addable")
        if u in covered or v in covered:
            raise InvariantError(f"recomputed additions are not a matching at ({u}, {v})")
        covered.update((u, v))
    return EditSolution(frozenset(D), frozenset(A))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    message: str = "OK"

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(inst: Instance, sol: EditSolution) -> VerifyResult:
    """Check every solution condition; the result names the first failure."""
    try:
        D = [pair(*e) for e in sol.deletions]
        A = [pair(*e) for e in sol.additions]
    except (TypeError, ValueError):
        return VerifyResult(False, "solution pairs are malformed")
    seen: set[int] = set()
    for u, v in sorted(D):
        if u == v or u not in inst.adj or v not in inst.adj:
            return VerifyResult(False, f"deletion ({u}, {v}) is not a vertex pair of the instance")
        if not inst.has_edge(u, v):
            return VerifyResult(False, f"deletion ({u}, {v}) is not an edge")
        if inst.d_star[u] != 1 or inst.d_star[v] != 1:
            return VerifyResult(False, f"deletion ({u}, {v}) is not deletable")
        if u in seen or v in seen:
            return VerifyResult(False, f"deletions are not a matching at ({u}, {v})")
        seen.update((u, v))
    seen.clear()
    for u, v in sorted(A):
        if u == v or u not in inst.adj or v not in inst.adj:
            return VerifyResult(False, f"addition ({u}, {v}) is not a vertex pair of the instance")
        if inst.has_edge(u, v):
            return VerifyResult(False, f"addition ({u}, {v}) is already an edge")
        if inst.a_star[u] != 1 or inst.a_star[v] != 1:
            return VerifyResult(False, f"addition ({u}, {v}) is not addable")
        if u in seen or v in seen:
            return VerifyResult(False, f"additions are not a matching at ({u}, {v})")
        seen.update((u, v))
    g = inst.copy()
    for u, v in D:
        g.remove_edge(u, v)
    for u, v in A:
        g.add_edge(u, v)
    if not is_cluster_graph(g):
        return VerifyResult(False, "edited graph is not a cluster graph")
    return VerifyResult(True)
