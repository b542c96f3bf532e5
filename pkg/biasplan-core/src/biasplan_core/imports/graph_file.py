"""
Line-oriented task graph format.

    # comment
    label gym
    meta family fixture
    reward 19
    bias 2
    sunk 1/2
    source s
    target t
    node s
    node v
    edge s v 1 e0

Numbers are integers, `p/q` fractions or finite decimals. The edge id is
optional and defaults to `e<k>` for the k-th edge (counting from 0).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from biasplan_types import (
    AgentParams,
    Edge,
    Instance,
    TaskGraph,
    format_rational,
    parse_rational,
)
from biasplan_types.graph import check_identifier

from ..core.errors import GraphParseError
from ..core.graph import validate


@dataclass
class GraphFileContent:
    """Directives collected while reading a graph file."""

    nodes: List[str] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    scalars: Dict[str, object] = field(default_factory=dict)
    metadata: Dict[str, str] = field(default_factory=dict)


def _number(token: str, line: int) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError as e:
        raise GraphParseError(str(e), line)


def _identifier(token: str, line: int) -> str:
    try:
        return check_identifier(token)
    except ValueError as e:
        raise GraphParseError(str(e), line)


def _expect(tokens: List[str], counts: tuple, line: int) -> None:
    if len(tokens) - 1 not in counts:
        expected = " or ".join(str(count) for count in counts)
        raise GraphParseError(
            f"'{tokens[0]}' takes {expected} argument(s), got {len(tokens) - 1}", line
        )


def _read_directive(content: GraphFileContent, raw: str, line: int) -> None:
    tokens = raw.split()
    keyword = tokens[0]

    if keyword == "label":
        if "label" in content.scalars:
            raise GraphParseError("duplicate 'label' line", line)
        content.scalars["label"] = raw.split(None, 1)[1].strip() if len(tokens) > 1 else ""
        return
    if keyword == "meta":
        if len(tokens) < 2:
            raise GraphParseError("'meta' needs a key", line)
        key = _identifier(tokens[1], line)
        parts = raw.split(None, 2)
        content.metadata[key] = parts[2].strip() if len(parts) > 2 else ""
        return

    if keyword in ("reward", "bias", "sunk"):
        _expect(tokens, (1,), line)
        if keyword in content.scalars:
            raise GraphParseError(f"duplicate '{keyword}' line", line)
        value = _number(tokens[1], line)
        if keyword == "bias" and value < 1:
            raise GraphParseError(f"present bias must be at least 1, got {value}", line)
        if keyword != "bias" and value < 0:
            raise GraphParseError(f"'{keyword}' must be non-negative, got {value}", line)
        content.scalars[keyword] = value
    elif keyword in ("source", "target"):
        _expect(tokens, (1,), line)
        if keyword in content.scalars:
            raise GraphParseError(f"duplicate '{keyword}' line", line)
        content.scalars[keyword] = _identifier(tokens[1], line)
    elif keyword == "node":
        _expect(tokens, (1,), line)
        node = _identifier(tokens[1], line)
        if node in content.nodes:
            raise GraphParseError(f"duplicate node id '{node}'", line)
        content.nodes.append(node)
    elif keyword == "edge":
        _expect(tokens, (3, 4), line)
        tail, head = _identifier(tokens[1], line), _identifier(tokens[2], line)
        for end in (tail, head):
            if end not in content.nodes:
                raise GraphParseError(f"edge references unknown node '{end}'", line)
        cost = _number(tokens[3], line)
        if cost < 0:
            raise GraphParseError(f"negative cost {tokens[3]}", line)
        edge_id = (
            _identifier(tokens[4], line) if len(tokens) == 5 else f"e{len(content.edges)}"
        )
        if any(edge.id == edge_id for edge in content.edges):
            raise GraphParseError(f"duplicate edge id '{edge_id}'", line)
        content.edges.append(Edge(id=edge_id, tail=tail, head=head, cost=cost))
    else:
        raise GraphParseError(f"unknown directive '{keyword}'", line)


def parse_graph(text: str) -> Instance:
    """Parse the line format into a validated Instance."""
    content = GraphFileContent()
    for line, raw in enumerate(text.splitlines(), start=1):
        raw = raw.split("#", 1)[0].strip()
        if raw:
            _read_directive(content, raw, line)

    for required in ("source", "target", "reward"):
        if required not in content.scalars:
            raise GraphParseError(f"missing '{required}' line")

    graph = TaskGraph(
        nodes=tuple(content.nodes),
        edges=tuple(content.edges),
        source=content.scalars["source"],
        target=content.scalars["target"],
    )
    validate(graph)

    declared = tuple(name for name in ("bias", "sunk") if name in content.scalars)
    return Instance(
        graph=graph,
        reward=content.scalars["reward"],
        params=AgentParams(
            b=content.scalars.get("bias", Fraction(1)),
            lam=content.scalars.get("sunk", Fraction(0)),
        ),
        declared=declared,
        label=content.scalars.get("label", ""),
        metadata=content.metadata,
    )


def serialize_graph(instance: Instance) -> str:
    """Render an Instance in the line format; `parse_graph` inverts it exactly."""
    graph = instance.graph
    lines: List[str] = []
    if instance.label:
        lines.append(f"label {instance.label}")
    for key, value in instance.metadata.items():
        lines.append(f"meta {key} {value}".rstrip())
    lines.append(f"reward {format_rational(instance.reward)}")
    if "bias" in instance.declared:
        lines.append(f"bias {format_rational(instance.params.b)}")
    if "sunk" in instance.declared:
        lines.append(f"sunk {format_rational(instance.params.lam)}")
    lines.append(f"source {graph.source}")
    lines.append(f"target {graph.target}")
    lines.extend(f"node {node}" for node in graph.nodes)
    lines.extend(
        f"edge {edge.tail} {edge.head} {format_rational(edge.cost)} {edge.id}"
        for edge in graph.edges
    )
    return "\n".join(lines) + "\n"
