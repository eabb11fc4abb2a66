import random

import pytest

from slee.canonical import are_isomorphic, canonical_form
from slee.errors import ArgumentError
from slee.families import make_cqs, make_cycle, make_g1, make_g2
from slee.graphs import Graph, is_connected, unique_cycle
from slee.semiwalk import Relation
from slee.spectral import slee
from slee.transforms import check_transfer_lemma, transfer
from testutil import random_unicyclic_graph

PAW = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def test_transfer_preserves_counts_and_builds_route():
    g = make_g2(6)
    plan = transfer(g, 1, 0, [5])  # move the lone pendant from v2 to v1
    assert plan.route == g.remove_edges([(1, 5)])
    assert plan.result.m == g.m and plan.result.n == g.n
    assert plan.source == g
    assert canonical_form(plan.result) == canonical_form(make_g1(6))


def test_empty_transfer_is_identity():
    g = make_cycle(5)
    plan = transfer(g, 0, 2, [])
    assert plan.result == g and plan.route == g


def test_square_contracts_to_triangle_with_pendant():
    c4 = make_cycle(4)
    plan = transfer(c4, 0, 1, [3])
    assert canonical_form(plan.result) == canonical_form(PAW)


def test_transfer_validation_messages():
    g = make_cycle(4)
    with pytest.raises(ArgumentError, match="not a neighbor"):
        transfer(g, 0, 1, [2])
    with pytest.raises(ArgumentError, match="transfer u"):
        transfer(g, 0, 2, [2])
    with pytest.raises(ArgumentError, match="common-neighbor clash"):
        transfer(g, 0, 2, [1])
    with pytest.raises(ArgumentError, match="coincide"):
        transfer(g, 0, 0, [1])


def test_transfer_involution():
    rng = random.Random(11)
    for _ in range(20):
        g = random_unicyclic_graph(rng, rng.randint(5, 9))
        cycle = set(unique_cycle(g))
        candidates = [
            (v, u)
            for u in cycle
            for v in g.neighbors(u)
            if v not in cycle and g.degree(v) > 1
        ]
        if not candidates:
            continue
        v, u = candidates[0]
        moved = tuple(w for w in g.neighbors(v) if w != u)
        there = transfer(g, v, u, moved)
        back = transfer(there.result, u, v, moved)
        assert are_isomorphic(back.result, g)


def test_check_transfer_lemma_on_runner_up_move():
    g = make_g2(7)
    plan = transfer(g, 1, 0, [6])
    check = check_transfer_lemma(plan.route, 1, 0, [6], 20)
    assert check.hypotheses_hold
    assert check.vertex_verdict.relation is Relation.STRICTLY_LESS
    assert check.slee_gap > 1e-9
    assert check.slee_with_v == pytest.approx(slee(g), rel=1e-12)
    assert check.slee_with_u == pytest.approx(slee(make_g1(7)), rel=1e-9)
    assert check.conclusion_holds


def test_check_transfer_lemma_symmetric_route_makes_no_claim():
    # both endpoints of a bare path are automorphic: no strict witness
    route = Graph(4, [(0, 1), (1, 2)])
    check = check_transfer_lemma(route, 0, 2, [3], 20)
    assert check.vertex_verdict.relation is Relation.EQUAL
    assert not check.hypotheses_hold


def test_check_transfer_lemma_cycle_shrink():
    g = make_cqs(5, [2, 0, 1, 0, 0])
    cycle = unique_cycle(g)
    v, u = cycle[0], cycle[1]
    moved = tuple(w for w in g.neighbors(v) if w != u)
    plan = transfer(g, v, u, moved)
    check = check_transfer_lemma(plan.route, v, u, moved, 20)
    assert check.hypotheses_hold and check.slee_gap > 1e-9
    assert len(unique_cycle(plan.result)) == 4


def test_check_transfer_lemma_validates_route_attachments():
    g = make_cycle(4)
    with pytest.raises(ArgumentError):
        check_transfer_lemma(g, 0, 2, [1], 10)  # 1 is already attached to both


def test_transfer_result_connectivity_is_not_assumed():
    g = Graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    plan = transfer(g, 1, 2, [0])
    assert is_connected(plan.result)
    # moving the lone neighbor away strands the giver: transfer permits it,
    # so downstream users must re-check connectivity themselves
    lonely = Graph(3, [(0, 1)])
    plan = transfer(lonely, 0, 2, [1])
    assert not is_connected(plan.result)
