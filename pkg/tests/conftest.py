from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from cluster_editing.graph import Instance

ACCEPTANCE_LINES: list[str] = []


def record(name: str, ok: bool, detail: str) -> None:
    """Remember one acceptance line and print it immediately."""
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def graph_from_mask(n: int, mask: int, a: dict | None = None, d: dict | None = None) -> Instance:
    pairs = list(combinations(range(n), 2))
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Instance.from_edges(n, edges, a, d)


@st.composite
def instances(draw, min_n: int = 0, max_n: int = 9, weighted: bool = True):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())] if pairs else []
    if weighted:
        a = {v: draw(st.sampled_from((0, 1, 1, 1))) for v in range(n)}
        d = {v: draw(st.sampled_from((0, 1, 1, 1))) for v in range(n)}
    else:
        a = d = None
    return Instance.from_edges(n, edges, a, d)


@st.composite
def sparse_instances(draw, min_n: int = 4, max_n: int = 12):
    """Max-degree-3 graphs, which reach the deeper reduction stages."""
    n = draw(st.integers(min_n, max_n))
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    tries = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    for u, v in tries:
        if u != v and v not in adj[u] and len(adj[u]) < 3 and len(adj[v]) < 3:
            adj[u].add(v)
            adj[v].add(u)
    edges = sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})
    a = {v: draw(st.sampled_from((0, 1, 1, 1, 1))) for v in range(n)}
    d = {v: draw(st.sampled_from((0, 1, 1, 1, 1))) for v in range(n)}
    return Instance.from_edges(n, edges, a, d)


@pytest.fixture
def tmp_instance(tmp_path):
    def write(text: str, name: str = "g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write
