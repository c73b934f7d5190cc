"""Evaluate aggregative semantics on acyclic QBAFs by topological propagation."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from .aggregators import (
    COMPLEMENT_PRODUCT,
    DFQUAD,
    EBS,
    QE,
    SUM,
    Aggregator,
    AggregatorDomainError,
    Combiner,
    covers,
    aggregate,
    apply_sequence,
    get_aggregator,
    get_combiner,
)
from .graph import InvalidGraphError, Qbaf, QbafError, UnknownArgumentError, topological_order, validate
from .rounding import format_value

LITERATURE = ("dfquad", "ebs", "qe")


class EvaluationError(QbafError):
    """An aggregator could not be applied at a given argument."""

    def __init__(self, argument: str, cause: Exception):
        self.argument = argument
        self.cause = cause
        super().__init__(f"at argument {argument!r}: {cause}")


@dataclass(frozen=True)
class AggregativeSemantics:
    """A triple (attack aggregator, support aggregator, combiner).

    Raises:
        ValueError: the combiner cannot accept what the aggregators produce.
    """

    phi_r: Aggregator
    phi_s: Aggregator
    phi_f: Combiner
    name: str | None = None

    def __post_init__(self) -> None:
        if not covers(self.phi_f.x_domain, self.phi_r.codomain):
            raise ValueError(
                f"combiner {self.phi_f.name} accepts x in {list(self.phi_f.x_domain)} "
                f"but {self.phi_r.name} yields {list(self.phi_r.codomain)}"
            )
        if not covers(self.phi_f.y_domain, self.phi_s.codomain):
            raise ValueError(
                f"combiner {self.phi_f.name} accepts y in {list(self.phi_f.y_domain)} "
                f"but {self.phi_s.name} yields {list(self.phi_s.codomain)}"
            )

    @property
    def label(self) -> str:
        return self.name or f"{self.phi_r.name},{self.phi_s.name},{self.phi_f.name}"

    @classmethod
    def from_names(cls, phi_r: str, phi_s: str, phi_f: str) -> AggregativeSemantics:
        """Build from catalog names; ``phi_f`` may name a combiner or an aggregator."""
        return cls(get_aggregator(phi_r), get_aggregator(phi_s), get_combiner(phi_f))


@dataclass(frozen=True)
class DegreeMap:
    """Degrees and intermediate global weights of every argument."""

    deg: Mapping[str, float]
    pi_r: Mapping[str, float]
    pi_s: Mapping[str, float]
    weights: Mapping[str, float]

    def __getitem__(self, a: str) -> float:
        return self.deg[a]

    def __len__(self) -> int:
        return len(self.deg)

    def rows(self) -> list[tuple[str, float, float, float, float]]:
        return [(a, self.weights[a], self.pi_r[a], self.pi_s[a], self.deg[a]) for a in sorted(self.deg)]

    def to_csv(self, digits: int | None = None) -> str:
        """CSV with columns ``argument, weight, pi_r, pi_s, degree`` sorted by argument."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["argument", "weight", "pi_r", "pi_s", "degree"])
        for a, *vals in self.rows():
            writer.writerow([a, *(format_value(v, digits) for v in vals)])
        return buf.getvalue()


def _freeze(deg: dict, pi_r: dict, pi_s: dict, g: Qbaf) -> DegreeMap:
    return DegreeMap(MappingProxyType(deg), MappingProxyType(pi_r), MappingProxyType(pi_s), g.weights)


def _parents(g: Qbaf, a: str, agg: Aggregator, attack: bool) -> tuple[str, ...]:
    ids = g.attackers_of(a) if attack else g.supporters_of(a)
    if agg.ordered and len(ids) > 1:
        big = math.inf
        return tuple(sorted(ids, key=lambda b: (g.order.get((b, a), big), b)))
    return ids


def combine(s: AggregativeSemantics, att: Sequence[float], supp: Sequence[float], w: float) -> float:
    """Degree of an argument from its parents' degrees, including the leaf rule."""
    if not att and not supp:
        return w
    return s.phi_f(aggregate(s.phi_r, att), aggregate(s.phi_s, supp), w)


def _ensure_valid(g: Qbaf) -> None:
    report = validate(g)
    if not report.ok:
        raise InvalidGraphError(report.violations)


def _check_order(g: Qbaf, order: Sequence[str]) -> list[str]:
    order = list(order)
    if sorted(order) != sorted(g.arguments):
        raise ValueError("order must list every argument exactly once")
    pos = {a: i for i, a in enumerate(order)}
    for src, dst in g.attacks | g.supports:
        if pos[src] >= pos[dst]:
            raise ValueError(f"order places {dst!r} before its parent {src!r}")
    return order


def evaluate(s: AggregativeSemantics, g: Qbaf, order: Sequence[str] | None = None) -> DegreeMap:
    """Degrees of every argument of an acyclic QBAF.

    Arguments are visited in topological order. An argument with neither
    attackers nor supporters keeps its weight. Otherwise the attackers' and
    supporters' degrees are aggregated (an empty side yields the aggregator's
    ``empty_value``) and combined with the weight.

    Args:
        s: The semantics.
        g: A valid QBAF.
        order: Optional topological order to follow instead of the default one.

    Raises:
        InvalidGraphError: ``g`` breaks a QBAF invariant.
        CycleError: ``g`` has a directed cycle.
        EvaluationError: an aggregator rejected its input at some argument.
    """
    _ensure_valid(g)
    seq = _check_order(g, order) if order is not None else topological_order(g)
    deg: dict[str, float] = {}
    pi_r: dict[str, float] = {}
    pi_s: dict[str, float] = {}
    w = g.weights
    for a in seq:
        att = _parents(g, a, s.phi_r, attack=True)
        supp = _parents(g, a, s.phi_s, attack=False)
        try:
            x = apply_sequence(s.phi_r, [deg[b] for b in att])
            y = apply_sequence(s.phi_s, [deg[c] for c in supp])
            d = float(w[a]) if not att and not supp else s.phi_f(x, y, w[a])
        except (AggregatorDomainError, ValueError, ZeroDivisionError, OverflowError) as exc:
            raise EvaluationError(a, exc) from exc
        pi_r[a], pi_s[a], deg[a] = x, y, d
    return _freeze(deg, pi_r, pi_s, g)


# ---------------------------------------------------------------------------
# Literature semantics, written directly from their closed forms


def _direct(g: Qbaf, step) -> DegreeMap:
    _ensure_valid(g)
    deg: dict[str, float] = {}
    pi_r: dict[str, float] = {}
    pi_s: dict[str, float] = {}
    for a in topological_order(g):
        att = [deg[b] for b in g.attackers_of(a)]
        supp = [deg[c] for c in g.supporters_of(a)]
        pi_r[a], pi_s[a], deg[a] = step(att, supp, g.weights[a])
    return _freeze(deg, pi_r, pi_s, g)


def evaluate_dfquad(g: Qbaf) -> DegreeMap:
    """DF-Quad degrees. ``pi_r`` and ``pi_s`` hold the products of complemented degrees."""

    def step(att, supp, w):
        pa = math.prod(1.0 - d for d in att)
        ps = math.prod(1.0 - d for d in supp)
        s = pa - ps
        return pa, ps, w - w * max(0.0, -s) + (1.0 - w) * max(0.0, s)

    return _direct(g, step)


def evaluate_ebs(g: Qbaf) -> DegreeMap:
    """Euler-based degrees. ``pi_r`` and ``pi_s`` hold plain sums of degrees."""

    def step(att, supp, w):
        sa, ss = math.fsum(att), math.fsum(supp)
        return sa, ss, 1.0 - (1.0 - w * w) / (1.0 + w * math.exp(ss - sa))

    return _direct(g, step)


def evaluate_qe(g: Qbaf) -> DegreeMap:
    """Quadratic-energy degrees. ``pi_r`` and ``pi_s`` hold plain sums of degrees."""

    def h(t: float) -> float:
        return t * t / (1.0 + t * t) if t > 0 else 0.0

    def step(att, supp, w):
        sa, ss = math.fsum(att), math.fsum(supp)
        e = ss - sa
        return sa, ss, w - w * h(-e) + (1.0 - w) * h(e)

    return _direct(g, step)


DIRECT_EVALUATORS = {"dfquad": evaluate_dfquad, "ebs": evaluate_ebs, "qe": evaluate_qe}


def as_aggregative(name: str) -> AggregativeSemantics:
    """The literature semantics ``name`` written as an aggregator/combiner triple."""
    if name == "dfquad":
        return AggregativeSemantics(COMPLEMENT_PRODUCT, COMPLEMENT_PRODUCT, DFQUAD, "dfquad")
    if name == "ebs":
        return AggregativeSemantics(SUM, SUM, EBS, "ebs")
    if name == "qe":
        return AggregativeSemantics(SUM, SUM, QE, "qe")
    raise KeyError(f"unknown literature semantics {name!r}; choose from {list(LITERATURE)}")


def evaluate_literature(name: str, g: Qbaf) -> DegreeMap:
    try:
        fn = DIRECT_EVALUATORS[name]
    except KeyError:
        raise KeyError(f"unknown literature semantics {name!r}; choose from {list(LITERATURE)}") from None
    return fn(g)


@dataclass(frozen=True)
class StrongSets:
    s_att: frozenset[str]
    s_supp: frozenset[str]


def strong_sets(g: Qbaf, d: DegreeMap, a: str) -> StrongSets:
    """Attackers and supporters of ``a`` whose degree is not exactly 0."""
    if a not in g.arguments:
        raise UnknownArgumentError(a)
    return StrongSets(
        frozenset(b for b in g.attackers_of(a) if d.deg[b] != 0.0),
        frozenset(c for c in g.supporters_of(a) if d.deg[c] != 0.0),
    )
