from fractions import Fraction

import pytest

from biasplan_core.core.errors import GraphParseError, GraphValidationError
from biasplan_core.imports import parse_graph, serialize_graph

GYM = """\
# gym membership
reward 19
bias 2
sunk 1/2
source s
target t
node s
node v
node w
node t
edge s v 1
edge v t 12
edge s w 4
edge w t 10
"""


def test_parse_gym_file():
    instance = parse_graph(GYM)

    assert instance.reward == 19
    assert instance.params.b == 2
    assert instance.params.lam == Fraction(1, 2)
    assert instance.declared == ("bias", "sunk")
    assert instance.graph.nodes == ("s", "v", "w", "t")
    assert [edge.id for edge in instance.graph.edges] == ["e0", "e1", "e2", "e3"]
    assert instance.graph.edge("e1").cost == 12


def test_degenerate_single_edge_file():
    instance = parse_graph("reward 0\nsource s\ntarget t\nnode s\nnode t\nedge s t 0\n")
    assert instance.reward == 0
    assert instance.declared == ()
    assert instance.params.b == 1 and instance.params.lam == 0


def test_decimals_and_explicit_edge_ids():
    instance = parse_graph(
        "reward 2.5\nsource s\ntarget t\nnode s\nnode t\nedge s t 0.25 task\n"
    )
    assert instance.reward == Fraction(5, 2)
    assert instance.graph.edge("task").cost == Fraction(1, 4)


def test_label_and_metadata():
    instance = parse_graph(
        "label small example\nmeta family fixture\n" + GYM
    )
    assert instance.label == "small example"
    assert instance.metadata == {"family": "fixture"}


def test_round_trip_is_identity(gym):
    assert parse_graph(serialize_graph(gym)) == gym


def test_serialize_only_declared_parameters(build_instance):
    instance = build_instance([("s", "t", 1)], reward=3).model_copy(
        update={"declared": ()}
    )
    text = serialize_graph(instance)
    assert "bias" not in text and "sunk" not in text


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("reward 1\nreward 2\n", 2, "duplicate 'reward'"),
        ("bogus 1\n", 1, "unknown directive 'bogus'"),
        ("node s\nnode s\n", 2, "duplicate node id 's'"),
        ("node s\nedge s t 1\n", 2, "unknown node 't'"),
        ("node s\nnode t\nedge s t -1\n", 3, "negative cost"),
        ("node s\nnode t\nedge s t 1 a\nedge s t 2 a\n", 4, "duplicate edge id 'a'"),
        ("reward x\n", 1, "Invalid rational"),
        ("bias 1/2\n", 1, "at least 1"),
        ("sunk -1\n", 1, "non-negative"),
        ("edge s\n", 1, "takes 3 or 4 argument(s)"),
    ],
)
def test_syntax_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphParseError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}: ")
    assert fragment in str(excinfo.value)


@pytest.mark.parametrize("missing", ["source", "target", "reward"])
def test_missing_required_line(missing):
    lines = [line for line in GYM.splitlines() if not line.startswith(missing)]
    with pytest.raises(GraphParseError, match=f"missing '{missing}'"):
        parse_graph("\n".join(lines))


def test_structural_errors_come_from_validation():
    with pytest.raises(GraphValidationError, match="cycle detected"):
        parse_graph(
            "reward 1\nsource s\ntarget t\nnode s\nnode a\nnode t\n"
            "edge s a 1\nedge a s 1\nedge a t 1\n"
        )
