"""Criticality checks for small Ramsey graphs."""

import json

from ._core import (
    Graph,
    Graph6Error,
    GraphError,
    audit_json,
    clique_number,
    degseq_solutions,
    diam2_deg6_sequences,
    edge_connectivity,
    independence_number,
    is_ramsey_graph,
    parse_graph6,
    partition_triples,
    report_json,
    summary_json,
    to_graph6,
    vertex_connectivity,
)

__version__ = "0.1.0"


def full_report(graph, profile="gamma41", **options):
    """Evaluate every clause of `profile` and return the report as a dict."""
    return json.loads(report_json(graph, profile, **options))


def summarize(graph):
    return json.loads(summary_json(graph))


def audit():
    """Printed table rows that contradict the regenerated tables."""
    return json.loads(audit_json())


__all__ = [
    "Graph",
    "Graph6Error",
    "GraphError",
    "audit",
    "clique_number",
    "degseq_solutions",
    "diam2_deg6_sequences",
    "edge_connectivity",
    "full_report",
    "independence_number",
    "is_ramsey_graph",
    "parse_graph6",
    "partition_triples",
    "summarize",
    "to_graph6",
    "vertex_connectivity",
]
