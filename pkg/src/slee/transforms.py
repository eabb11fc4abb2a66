"""Neighbor-transfer surgery and the monotonicity check behind it.

A transfer detaches a set W of neighbors from a vertex v and reattaches
them to a vertex u.  The common graph without either attachment (the
route) is where the dominance hypotheses live: when closed walks at v
are strictly dominated by closed walks at u, and walks from each
transferred w to v are dominated by walks to u, the reattached-at-u
graph has strictly larger SLEE than the reattached-at-v one.
check_transfer_lemma verifies those hypotheses numerically up to a
bounded walk length and reports the SLEE gap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, TransferMonotonicityError
from .graphs import Graph
from .semiwalk import (
    DEFAULT_MAX_K,
    DominanceVerdict,
    Relation,
    compare_s_from_table,
    compare_s_pair_from_table,
    walk_counts,
)
from .spectral import slee


@dataclass(frozen=True)
class TransferPlan:
    """A validated transfer: route = source minus the v-attachments,
    result = route plus the u-attachments."""

    v: int
    u: int
    transferred: tuple[int, ...]
    route: Graph
    result: Graph

    @property
    def source(self) -> Graph:
        return self.route.add_edges((self.v, w) for w in self.transferred)


@dataclass(frozen=True)
class TransferCheck:
    """Outcome of a bounded hypothesis check on a transfer route."""

    v: int
    u: int
    transferred: tuple[int, ...]
    vertex_verdict: DominanceVerdict
    pair_verdicts: dict[int, DominanceVerdict]
    hypotheses_hold: bool
    slee_with_v: float
    slee_with_u: float
    checked_up_to: int

    @property
    def slee_gap(self) -> float:
        return self.slee_with_u - self.slee_with_v

    @property
    def conclusion_holds(self) -> bool:
        return self.slee_gap > 0.0


def transfer(graph: Graph, v: int, u: int, transferred) -> TransferPlan:
    """Move the neighbors in `transferred` from v to u.

    Every w must be a neighbor of v other than u, must not already be
    adjacent to u, and must differ from u; violations are reported
    individually.
    """
    graph._check_vertex(v)
    graph._check_vertex(u)
    w_list = sorted(set(transferred))
    if v == u:
        raise ArgumentError("transfer source and target coincide")
    n_v = set(graph.neighbors(v))
    n_u = set(graph.neighbors(u))
    for w in w_list:
        graph._check_vertex(w)
        if w == u:
            raise ArgumentError(f"cannot transfer u={u} itself")
        if w not in n_v:
            raise ArgumentError(f"vertex {w} is not a neighbor of v={v}")
        if w in n_u:
            raise ArgumentError(f"common-neighbor clash: {w} is already adjacent to u={u}")
    route = graph.remove_edges((v, w) for w in w_list)
    result = route.add_edges((u, w) for w in w_list)
    return TransferPlan(v, u, tuple(w_list), route, result)


def check_transfer_lemma(
    route: Graph, v: int, u: int, transferred, max_k: int = DEFAULT_MAX_K
) -> TransferCheck:
    """Check the transfer hypotheses on a route graph, bounded at max_k.

    Hypotheses: closed walks at v strictly dominated by closed walks at
    u, and for every transferred w, walks w->v dominated by walks w->u.
    When they verify, SLEE(route + edges at v) < SLEE(route + edges at u)
    must hold; a wrong sign raises TransferMonotonicityError.
    """
    route._check_vertex(v)
    route._check_vertex(u)
    w_list = sorted(set(transferred))
    if v == u:
        raise ArgumentError("transfer source and target coincide")
    n_v = set(route.neighbors(v))
    n_u = set(route.neighbors(u))
    for w in w_list:
        route._check_vertex(w)
        if w in (u, v):
            raise ArgumentError(f"transferred vertex {w} coincides with an endpoint")
        if w in n_v or w in n_u:
            raise ArgumentError(f"vertex {w} is already attached in the route")
    table = walk_counts(route, max_k)
    vertex_verdict = compare_s_from_table(table, v, u)
    pair_verdicts = {w: compare_s_pair_from_table(table, w, v, u) for w in w_list}
    hypotheses = vertex_verdict.relation is Relation.STRICTLY_LESS and all(
        verdict.is_less_or_equal for verdict in pair_verdicts.values()
    )
    graph_v = route.add_edges((v, w) for w in w_list)
    graph_u = route.add_edges((u, w) for w in w_list)
    check = TransferCheck(
        v=v,
        u=u,
        transferred=tuple(w_list),
        vertex_verdict=vertex_verdict,
        pair_verdicts=pair_verdicts,
        hypotheses_hold=hypotheses,
        slee_with_v=slee(graph_v),
        slee_with_u=slee(graph_u),
        checked_up_to=max_k,
    )
    if hypotheses and not check.conclusion_holds:
        raise TransferMonotonicityError(
            f"hypotheses verified up to K={max_k} but SLEE gap is {check.slee_gap}"
        )
    return check
