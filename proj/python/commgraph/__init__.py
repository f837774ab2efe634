"""Commuting graphs and prime graphs of finite permutation groups."""

import json

from ._core import (
    CatalogError,
    CommutingGraph,
    GroupTooLarge,
    ParseError,
    default_corpus,
    fixed_group_names,
    format_cycles,
    group_order,
    parse_cycles,
    table,
)

__all__ = [
    "CatalogError",
    "CommutingGraph",
    "GroupTooLarge",
    "ParseError",
    "analyze",
    "default_corpus",
    "fixed_group_names",
    "format_cycles",
    "group_order",
    "parse_cycles",
    "table",
]


def analyze(spec, engine=None):
    """Full analysis report as a dict (timing omitted)."""
    return json.loads(CommutingGraph(spec).report_json(engine))
