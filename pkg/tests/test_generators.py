from __future__ import annotations

import pytest

from cluster_editing.errors import UsageError
from cluster_editing.generators import NAMED, gen_named, gen_planted, gen_random
from cluster_editing.graph import is_cluster_graph
from cluster_editing.oracle import oracle_decide
from cluster_editing.pipeline import solve, verify_solution


def girth(inst) -> int:
    best = inst.n + 1
    for s in inst.vertices():
        dist, parent, queue = {s: 0}, {s: None}, [s]
        for v in queue:
            for u in inst.adj[v]:
                if u not in dist:
                    dist[u], parent[u] = dist[v] + 1, v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def test_petersen_structure():
    g = gen_named("petersen")
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert girth(g) == 5


def test_named_catalogue():
    assert gen_named("k23").m == 6 and gen_named("k23").n == 5
    assert gen_named("cube").m == 12
    assert set(NAMED) == {"k23", "petersen", "c4", "c5", "k13", "k14", "p4", "cube", "h-graph"}


def test_named_weight_suffix():
    g = gen_named("p4:a=0110:d=1001")
    assert g.a_star == {0: 0, 1: 1, 2: 1, 3: 0}
    assert g.d_star == {0: 1, 1: 0, 2: 0, 3: 1}


@pytest.mark.parametrize("spec", ["k33", "p4:a=01", "p4:z=0000", "p4:a=01x1"])
def test_named_errors(spec):
    with pytest.raises(UsageError):
        gen_named(spec)


def test_random_edgeless_and_reproducible():
    assert gen_random(5, 0.0, 9).m == 0
    assert gen_random(12, 0.4, 3) == gen_random(12, 0.4, 3)


def test_planted_without_edits_is_cluster_graph():
    assert is_cluster_graph(gen_planted(30, 2, edit_density=0.0))


def test_planted_small_is_yes():
    inst = gen_planted(8, 1)
    v = solve(inst, want_certificate=True)
    assert v.yes and verify_solution(inst, v.certificate)


@pytest.mark.parametrize("seed", range(100))
def test_planted_twelve_agrees_with_oracle(seed):
    assert oracle_decide(gen_planted(12, seed))


def test_generator_argument_checks():
    with pytest.raises(UsageError):
        gen_planted(0, 1)
    with pytest.raises(UsageError):
        gen_planted(5, 1, edit_density=2.0)
    with pytest.raises(UsageError):
        gen_random(5, 1.5, 1)
