"""Immutable QBAF data model: parsing, validation, structural operations."""

from __future__ import annotations

import heapq
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Any, Union

Edge = tuple[str, str]
Document = Union[str, bytes, Mapping[str, Any]]


class QbafError(ValueError):
    """Base class for graph-level errors."""


class ParseError(QbafError):
    """The document does not follow the QBAF file format."""


class InvalidGraphError(QbafError):
    """A parsed graph breaks one of the QBAF invariants."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnknownArgumentError(QbafError, KeyError):
    def __str__(self) -> str:
        return f"unknown argument: {self.args[0]!r}"


class CycleError(QbafError):
    """Raised when an acyclic graph is required. ``cycle`` lists the nodes of one
    directed cycle with the first node repeated at the end, e.g. ``['a', 'b', 'a']``."""

    def __init__(self, cycle: list[str]):
        self.cycle = list(cycle)
        super().__init__("graph has a cycle: " + " -> ".join(self.cycle))

    @property
    def edges(self) -> list[Edge]:
        return list(zip(self.cycle, self.cycle[1:]))


@dataclass(frozen=True)
class Qbaf:
    """Arguments with intrinsic weights, an attack relation and a support relation.

    Construction does not validate; use :func:`validate` or :func:`parse_qbaf`.
    ``order`` optionally ranks edges (lower rank first) for ordered aggregators.
    """

    arguments: frozenset[str]
    attacks: frozenset[Edge]
    supports: frozenset[Edge]
    weights: Mapping[str, float]
    order: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset(tuple(e) for e in self.attacks))
        object.__setattr__(self, "supports", frozenset(tuple(e) for e in self.supports))
        object.__setattr__(self, "weights", MappingProxyType(dict(self.weights)))
        object.__setattr__(self, "order", MappingProxyType({tuple(k): v for k, v in self.order.items()}))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def build(
        cls,
        weights: Mapping[str, float],
        attacks: Iterable[Edge] = (),
        supports: Iterable[Edge] = (),
        order: Mapping[Edge, int] | None = None,
    ) -> Qbaf:
        return cls(frozenset(weights), frozenset(attacks), frozenset(supports), weights, order or {})

    @cached_property
    def _att_index(self) -> dict[str, tuple[str, ...]]:
        return _index(self.arguments, self.attacks)

    @cached_property
    def _supp_index(self) -> dict[str, tuple[str, ...]]:
        return _index(self.arguments, self.supports)

    @cached_property
    def _children(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {a: [] for a in self.arguments}
        for src, dst in self.attacks | self.supports:
            out.setdefault(src, []).append(dst)
        return {k: tuple(sorted(set(v))) for k, v in out.items()}

    @cached_property
    def _violations(self) -> tuple[str, ...]:
        return tuple(_violations(self))

    @cached_property
    def _topological(self) -> tuple[str, ...]:
        return tuple(_kahn(self))

    def attackers_of(self, a: str) -> tuple[str, ...]:
        """Attackers of ``a`` sorted by id (no membership check)."""
        return self._att_index.get(a, ())

    def supporters_of(self, a: str) -> tuple[str, ...]:
        return self._supp_index.get(a, ())

    def children_of(self, a: str) -> tuple[str, ...]:
        return self._children.get(a, ())

    def is_leaf(self, a: str) -> bool:
        return not self.attackers_of(a) and not self.supporters_of(a)

    @property
    def leaves(self) -> list[str]:
        return [a for a in sorted(self.arguments) if self.is_leaf(a)]

    def __len__(self) -> int:
        return len(self.arguments)

    def with_edges(
        self, attacks: Iterable[Edge] = (), supports: Iterable[Edge] = (), weights: Mapping[str, float] | None = None
    ) -> Qbaf:
        """Copy with extra arguments/edges added (weights of new arguments via ``weights``)."""
        new_w = dict(self.weights)
        new_w.update(weights or {})
        return Qbaf(
            frozenset(new_w),
            self.attacks | frozenset(attacks),
            self.supports | frozenset(supports),
            new_w,
            self.order,
        )

    def to_document(self) -> dict[str, Any]:
        return to_document(self)


def _index(arguments: Iterable[str], edges: Iterable[Edge]) -> dict[str, tuple[str, ...]]:
    out: dict[str, list[str]] = {}
    for src, dst in edges:
        out.setdefault(dst, []).append(src)
    return {k: tuple(sorted(v)) for k, v in out.items()}


# ---------------------------------------------------------------------------
# Parsing and serialization


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _load(document: Document) -> Mapping[str, Any]:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise ParseError("top-level value must be an object")
    return document


def _edge(item: Any, key: str) -> tuple[Edge, int | None]:
    if isinstance(item, Mapping):
        try:
            src, dst = item["from"], item["to"]
        except KeyError as exc:
            raise ParseError(f"{key}: edge object needs 'from' and 'to'") from exc
        rank = item.get("order")
    elif isinstance(item, (list, tuple)) and len(item) == 2:
        (src, dst), rank = item, None
    else:
        raise ParseError(f"{key}: edge must be a [from, to] pair, got {item!r}")
    if not isinstance(src, str) or not isinstance(dst, str):
        raise ParseError(f"{key}: edge endpoints must be strings, got {item!r}")
    if rank is not None and (isinstance(rank, bool) or not isinstance(rank, int)):
        raise ParseError(f"{key}: edge order must be an integer, got {rank!r}")
    return (src, dst), rank


def read_document(document: Document) -> tuple[Qbaf, list[str]]:
    """Build a Qbaf from a document without checking the graph invariants.

    Returns the graph and a list of warnings (duplicate edges). Raises
    :class:`ParseError` for structural problems that cannot be represented.
    """
    doc = _load(document)
    unknown = set(doc) - {"arguments", "attacks", "supports"}
    if unknown:
        raise ParseError(f"unexpected keys: {sorted(unknown)}")
    args = doc.get("arguments", [])
    if not isinstance(args, list):
        raise ParseError("'arguments' must be an array")
    weights: dict[str, float] = {}
    for item in args:
        if not isinstance(item, Mapping) or "id" not in item or "weight" not in item:
            raise ParseError(f"argument entries need 'id' and 'weight': {item!r}")
        aid, w = item["id"], item["weight"]
        if not isinstance(aid, str) or not aid:
            raise ParseError(f"argument id must be a non-empty string: {aid!r}")
        if isinstance(w, bool) or not isinstance(w, (int, float)):
            raise ParseError(f"weight of {aid!r} must be a number")
        if aid in weights:
            raise ParseError(f"duplicate argument id {aid!r}")
        weights[aid] = float(w)

    warnings: list[str] = []
    order: dict[Edge, int] = {}
    relations: dict[str, set[Edge]] = {}
    for key in ("attacks", "supports"):
        items = doc.get(key, [])
        if not isinstance(items, list):
            raise ParseError(f"{key!r} must be an array")
        seen: set[Edge] = set()
        for item in items:
            edge, rank = _edge(item, key)
            if edge in seen:
                warnings.append(f"duplicate {key[:-1]} edge {edge[0]}->{edge[1]} collapsed")
            seen.add(edge)
            if rank is not None:
                order[edge] = rank
        relations[key] = seen
    g = Qbaf(frozenset(weights), frozenset(relations["attacks"]), frozenset(relations["supports"]), weights, order)
    return g, warnings


def validate(g: Qbaf) -> ValidationReport:
    """Collect violations of the QBAF invariants; never raises."""
    return ValidationReport(list(g._violations))


def _violations(g: Qbaf) -> list[str]:
    report = ValidationReport()
    for a in sorted(g.arguments):
        if not a:
            report.violations.append("empty argument id")
        if a not in g.weights:
            report.violations.append(f"argument {a!r} has no weight")
    for a in sorted(g.weights):
        w = g.weights[a]
        if a not in g.arguments:
            report.violations.append(f"weight given for unknown argument {a!r}")
        if not (isinstance(w, (int, float)) and 0.0 <= w <= 1.0):
            report.violations.append(f"weight of {a!r} is {w!r}, outside [0, 1]")
    for key, edges in (("attack", g.attacks), ("support", g.supports)):
        for src, dst in sorted(edges):
            for end in (src, dst):
                if end not in g.arguments:
                    report.violations.append(f"{key} edge {src}->{dst} references unknown argument {end!r}")
    for src, dst in sorted(g.attacks & g.supports):
        report.violations.append(f"edge {src}->{dst} is both an attack and a support")
    for edge in sorted(g.order):
        if edge not in g.attacks and edge not in g.supports:
            report.violations.append(f"order given for missing edge {edge[0]}->{edge[1]}")
    return report.violations


def parse_qbaf(document: Document) -> Qbaf:
    """Parse a QBAF document and reject it unless every invariant holds."""
    g, _ = read_document(document)
    report = validate(g)
    if not report.ok:
        raise InvalidGraphError(report.violations)
    return g


def _edge_out(edge: Edge, g: Qbaf) -> Any:
    if edge in g.order:
        return {"from": edge[0], "to": edge[1], "order": g.order[edge]}
    return [edge[0], edge[1]]


def to_document(g: Qbaf) -> dict[str, Any]:
    return {
        "arguments": [{"id": a, "weight": g.weights[a]} for a in sorted(g.arguments)],
        "attacks": [_edge_out(e, g) for e in sorted(g.attacks)],
        "supports": [_edge_out(e, g) for e in sorted(g.supports)],
    }


def serialize_qbaf(g: Qbaf) -> str:
    """Byte-stable JSON: arguments sorted by id, edges lexicographically."""
    return json.dumps(to_document(g), indent=2) + "\n"


# ---------------------------------------------------------------------------
# Structure


def _check(g: Qbaf, a: str) -> None:
    if a not in g.arguments:
        raise UnknownArgumentError(a)


def attackers(g: Qbaf, a: str) -> set[str]:
    _check(g, a)
    return set(g.attackers_of(a))


def supporters(g: Qbaf, a: str) -> set[str]:
    _check(g, a)
    return set(g.supporters_of(a))


def _find_cycle(g: Qbaf) -> list[str]:
    color: dict[str, int] = {}
    for root in sorted(g.arguments):
        if root in color:
            continue
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(g.children_of(root)))]
        path = [root]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                color[node] = 2
            elif color.get(nxt) == 1:
                return path[path.index(nxt):] + [nxt]
            elif nxt not in color:
                color[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(g.children_of(nxt))))
    return []


def topological_order(g: Qbaf) -> list[str]:
    """Kahn's algorithm, smallest id first among ready arguments (deterministic).

    Raises :class:`CycleError` carrying one directed cycle.
    """
    return list(g._topological)


def _kahn(g: Qbaf) -> list[str]:
    indeg = {a: 0 for a in g.arguments}
    for _, dst in g.attacks | g.supports:
        if dst in indeg:
            indeg[dst] += 1
    ready = [a for a, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    out: list[str] = []
    while ready:
        a = heapq.heappop(ready)
        out.append(a)
        for child in g.children_of(a):
            indeg[child] -= 1
            if indeg[child] == 0:
                heapq.heappush(ready, child)
    if len(out) != len(g.arguments):
        raise CycleError(_find_cycle(g))
    return out


def is_acyclic(g: Qbaf) -> bool:
    try:
        topological_order(g)
    except CycleError:
        return False
    return True


def descendants(g: Qbaf, a: str) -> set[str]:
    """Arguments reachable from ``a`` by a non-empty path."""
    seen: set[str] = set()
    todo = list(g.children_of(a))
    while todo:
        x = todo.pop()
        if x not in seen:
            seen.add(x)
            todo.extend(g.children_of(x))
    return seen


def union(g: Qbaf, h: Qbaf) -> Qbaf:
    """Disjoint union of two QBAFs."""
    shared = g.arguments & h.arguments
    if shared:
        raise QbafError(f"argument sets overlap: {sorted(shared)}")
    return Qbaf(
        g.arguments | h.arguments,
        g.attacks | h.attacks,
        g.supports | h.supports,
        {**g.weights, **h.weights},
        {**g.order, **h.order},
    )


def relabel(g: Qbaf, mapping: Mapping[str, str]) -> Qbaf:
    """Rename arguments through a bijection defined on every argument of ``g``."""
    missing = g.arguments - set(mapping)
    if missing:
        raise QbafError(f"mapping is not total, missing {sorted(missing)}")
    images = [mapping[a] for a in g.arguments]
    if len(set(images)) != len(images):
        raise QbafError("mapping is not injective on the arguments")

    def f(e: Edge) -> Edge:
        return mapping[e[0]], mapping[e[1]]

    return Qbaf(
        frozenset(images),
        frozenset(f(e) for e in g.attacks),
        frozenset(f(e) for e in g.supports),
        {mapping[a]: g.weights[a] for a in g.arguments},
        {f(e): r for e, r in g.order.items()},
    )


def empty_qbaf() -> Qbaf:
    return Qbaf.build({})
