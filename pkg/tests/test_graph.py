from __future__ import annotations

import pytest
from hypothesis import given, settings

from cluster_editing.errors import InputError, UsageError
from cluster_editing.graph import (
    C4,
    K23,
    EditSolution,
    HighDegree,
    Instance,
    SpecialClassBreach,
    Triangle,
    ball,
    classify_edge,
    classify_pair,
    component_of,
    components,
    detect_at,
    find_violation,
    is_cluster_graph,
    pair,
    violation_level,
)

from conftest import instances


def test_components_of_disjoint_union():
    inst = Instance.from_edges(3, [(0, 1)])
    assert components(inst) == [{0, 1}, {2}]


def test_components_of_c4_and_empty():
    assert components(Instance.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) == [{0, 1, 2, 3}]
    assert components(Instance.from_edges(0)) == []


def test_components_ordered_by_minimum_id():
    inst = Instance.from_edges([5, 2, 9, 1], [(5, 1), (2, 9)])
    assert components(inst) == [{1, 5}, {2, 9}]
    assert component_of(inst, 9) == {2, 9}


def test_is_cluster_graph_examples():
    assert is_cluster_graph(Instance.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]))
    assert not is_cluster_graph(Instance.from_edges(3, [(0, 1), (1, 2)]))
    assert is_cluster_graph(Instance.from_edges(0))


def test_from_edges_rejects_bad_input():
    with pytest.raises(InputError):
        Instance.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        Instance.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Instance.from_edges(2, [(0, 5)])
    with pytest.raises(InputError):
        Instance.from_edges(2, [], a_star={0: 2})


def test_ids_survive_removal():
    inst = Instance.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    inst.remove_vertex(1)
    assert inst.vertices() == [0, 2, 3]
    assert inst.edges() == [(2, 3)]
    assert inst.add_vertex() == 4


def test_dirty_log_records_touched_vertices():
    inst = Instance.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    inst.dirty = set()
    inst.remove_vertex(1)
    inst.set_weights(3, a=0)
    assert inst.dirty == {0, 2, 3}
    assert inst.copy().dirty is None


def test_mutator_misuse_raises():
    inst = Instance.from_edges(2, [(0, 1)])
    with pytest.raises(UsageError):
        inst.add_edge(0, 1)
    with pytest.raises(UsageError):
        Instance.from_edges(2).remove_edge(0, 1)


def test_classify_edge_and_pair():
    inst = Instance.from_edges(3, [(0, 1)], a_star={0: 1, 1: 1, 2: 0}, d_star={0: 1, 1: 0, 2: 1})
    assert classify_edge(inst, 0, 1) == "non-deletable"
    assert classify_pair(inst, 0, 2) == "non-addable"
    inst.set_weights(1, d=1)
    assert classify_edge(inst, 1, 0) == "deletable"
    with pytest.raises(UsageError):
        classify_edge(inst, 0, 2)
    with pytest.raises(UsageError):
        classify_pair(inst, 0, 1)


def test_edit_solution_normalises_pairs():
    sol = EditSolution.of([(3, 1)], [(5, 2)])
    assert sol.deletions == {(1, 3)} and sol.additions == {(2, 5)}


def test_violation_priorities():
    k4 = Instance.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert find_violation(k4) == Triangle((0, 1, 2))
    star = Instance.from_edges(5, [(0, i) for i in range(1, 5)])
    assert find_violation(star) == HighDegree(0)
    k23 = Instance.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    hit = find_violation(k23)
    assert isinstance(hit, K23) and set(hit.witness) == set(range(5))
    c4 = Instance.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert find_violation(c4) == C4((0, 1, 2, 3), 0)
    assert violation_level(find_violation(c4)) == 5


def test_cube_is_four_degree3_cycle():
    cube = Instance.from_edges(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
    hit = find_violation(cube)
    assert isinstance(hit, C4) and hit.deg3 == 4


def test_special_class_rules():
    path = Instance.from_edges(3, [(0, 1), (1, 2)], d_star={0: 1, 1: 0, 2: 1})
    assert find_violation(path) == SpecialClassBreach("b", (1,))
    h = Instance.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert find_violation(h) == SpecialClassBreach("d", (0, 1))
    star = Instance.from_edges(4, [(0, 1), (0, 2), (0, 3)], a_star={0: 1, 1: 1, 2: 0, 3: 1})
    assert find_violation(star) == SpecialClassBreach("c", (0, 2))
    star.set_weights(0, d=0)
    assert find_violation(star) == SpecialClassBreach("a", (0,))
    assert find_violation(Instance.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])) is None


def test_ball_radius():
    path = Instance.from_edges(6, [(i, i + 1) for i in range(5)])
    assert ball(path, [0]) == {0, 1, 2}
    assert ball(path, [0, 5], radius=1) == {0, 1, 4, 5}


@settings(max_examples=200, deadline=None)
@given(instances(max_n=8))
def test_find_violation_matches_anchored_scan(inst):
    hit = find_violation(inst)
    if hit is None:
        return
    level = violation_level(hit)
    assert min(hit.witness) in inst
    assert detect_at(inst, level, hit.witness[0]) == hit
    # Every witness vertex lies within two hops of the anchor.
    assert set(hit.witness) <= ball(inst, [hit.witness[0]])


@settings(max_examples=200, deadline=None)
@given(instances(max_n=8))
def test_copy_is_independent(inst):
    dup = inst.copy()
    assert dup == inst
    if dup.n:
        dup.remove_vertex(dup.vertices()[0])
        assert dup != inst
    inst.validate()


def test_pair_sorts():
    assert pair(4, 2) == (2, 4)
