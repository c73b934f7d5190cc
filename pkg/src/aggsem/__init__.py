"""Aggregative gradual semantics for acyclic quantitative bipolar argumentation frameworks."""

from .aggregators import Aggregator, Combiner, aggregate, catalog, final_from, get_aggregator, get_combiner
from .graph import Qbaf, parse_qbaf, serialize_qbaf, topological_order, validate

__all__ = [
    "Aggregator",
    "Combiner",
    "Qbaf",
    "aggregate",
    "catalog",
    "final_from",
    "get_aggregator",
    "get_combiner",
    "parse_qbaf",
    "serialize_qbaf",
    "topological_order",
    "validate",
]

__version__ = "0.1.0"
