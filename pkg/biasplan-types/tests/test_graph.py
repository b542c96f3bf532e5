from fractions import Fraction

import pytest

from biasplan_types import Edge, TaskGraph


def test_out_edges_keep_positions(gym_graph):
    graph = gym_graph
    assert [(pos, e.head) for pos, e in graph.out_edges("s")] == [(0, "v"), (2, "w")]
    assert graph.out_edges("t") == []


def test_costs_accept_literals():
    edge = Edge(id="a", tail="s", head="t", cost="17.5")
    assert edge.cost == Fraction(35, 2)


def test_lookup_helpers(gym_graph):
    graph = gym_graph
    assert graph.edge("e3").cost == 10
    assert graph.has_edge("e1")
    assert not graph.has_edge("e9")
    assert graph.node_position("w") == 2
    assert graph.total_cost == 27
    assert graph.has_integer_costs


def test_identifiers_are_checked():
    with pytest.raises(Exception) as e_info:
        Edge(id="bad id", tail="s", head="t", cost=1)
    assert "Invalid identifier" in str(e_info.value)


def test_equal_graphs_compare_equal(gym_graph):
    assert gym_graph == gym_graph.model_copy(deep=True)


def test_json_round_trip_keeps_fractions():
    graph = TaskGraph(
        nodes=("s", "t"),
        edges=(Edge(id="e0", tail="s", head="t", cost=Fraction(1, 3)),),
        source="s",
        target="t",
    )
    dumped = graph.model_dump_json()
    assert '"1/3"' in dumped
    assert TaskGraph.model_validate_json(dumped) == graph
