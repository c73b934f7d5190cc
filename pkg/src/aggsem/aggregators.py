"""Aggregation functions for attacker/supporter weights and ternary combiners.

An :class:`Aggregator` maps a multiset (or, for ordered aggregators, a
sequence) of degrees to a global weight. A :class:`Combiner` maps the pair of
global weights plus the intrinsic weight of an argument to its degree.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Collection, Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

INF = math.inf
UNIT = (0.0, 1.0)
NONNEG = (0.0, INF)

Interval = tuple[float, float]


class AggregatorDomainError(ValueError):
    """An input lies outside the domain where the function is defined."""


def covers(outer: Interval, inner: Interval) -> bool:
    return outer[0] <= inner[0] and inner[1] <= outer[1]


@dataclass(frozen=True)
class Aggregator:
    """Named n-ary aggregation function.

    Attributes:
        name: Stable identifier used by the CLI and the sweep.
        fn: Evaluates a non-empty tuple of values.
        codomain: Closed interval containing every output for inputs in ``domain``.
        empty_value: Result on the empty multiset.
        ordered: True when the result depends on input order (edge rank).
        domain: Accepted interval for each input value.
    """

    name: str
    fn: Callable[[tuple[float, ...]], float] = field(repr=False, compare=False)
    codomain: Interval = UNIT
    empty_value: float = 0.0
    ordered: bool = False
    domain: Interval = UNIT

    def __call__(self, values: Iterable[float] | Collection[float]) -> float:
        return aggregate(self, values)


@dataclass(frozen=True)
class Combiner:
    """Ternary function ``(attack weight, support weight, intrinsic weight) -> degree``."""

    name: str
    fn: Callable[[float, float, float], float] = field(repr=False, compare=False)
    x_domain: Interval = UNIT
    y_domain: Interval = UNIT

    def __call__(self, x: float, y: float, z: float) -> float:
        return self.fn(x, y, z)


def _as_tuple(agg: Aggregator, values: Iterable[float] | Collection[float]) -> tuple[float, ...]:
    if isinstance(values, Counter):
        items = tuple(float(v) for v in values.elements())
        unordered = True
    elif isinstance(values, (set, frozenset)):
        items = tuple(float(v) for v in values)
        unordered = True
    else:
        items = tuple(float(v) for v in values)
        unordered = False
    if agg.ordered and unordered and len(items) > 1:
        raise AggregatorDomainError(f"{agg.name} is order-sensitive and needs a sequence, not a multiset")
    return items


def aggregate(agg: Aggregator, values: Iterable[float] | Collection[float]) -> float:
    """Apply ``agg`` to ``values``.

    Sets and ``collections.Counter`` objects are treated as unordered
    multisets; lists, tuples and other iterables are sequences.

    Raises:
        AggregatorDomainError: a value lies outside ``agg.domain``, the function
            is undefined on the input, or an ordered aggregator received an
            unordered multiset with more than one element.
    """
    return apply_sequence(agg, _as_tuple(agg, values))


def apply_sequence(agg: Aggregator, items: Sequence[float]) -> float:
    """Fast path of :func:`aggregate` for an already ordered sequence of floats."""
    lo, hi = agg.domain
    for v in items:
        if not lo <= v <= hi:
            raise AggregatorDomainError(f"{agg.name}: value {v!r} outside domain {list(agg.domain)}")
    if not items:
        return agg.empty_value
    return agg.fn(tuple(items))


def _fold(op: Callable[[float, float], float]) -> Callable[[tuple[float, ...]], float]:
    return lambda xs: reduce(op, xs)


# ---------------------------------------------------------------------------
# Closed forms


def _avg_am(xs: tuple[float, ...]) -> float:
    return math.fsum(xs) / len(xs)


def _avg_gm(xs: tuple[float, ...]) -> float:
    p = math.prod(xs)
    return 0.0 if p == 0.0 else p ** (1.0 / len(xs))


def _algebraic_sum(xs: tuple[float, ...]) -> float:
    return 1.0 - math.prod(1.0 - x for x in xs)


def _lukasiewicz(a: float, b: float) -> float:
    return max(0.0, a + b - 1.0)


def _bounded_sum(a: float, b: float) -> float:
    return min(1.0, a + b)


def _drastic_tnorm(a: float, b: float) -> float:
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    return 0.0


def _drastic_tconorm(a: float, b: float) -> float:
    if a == 0.0:
        return b
    if b == 0.0:
        return a
    return 1.0


def symmetric_sum_pair(a: float, b: float) -> float:
    """Binary symmetric sum ``ab / (1 - a - b + 2ab)``."""
    den = 1.0 - a - b + 2.0 * a * b
    if den == 0.0:
        raise AggregatorDomainError(f"symmetric_sum undefined at ({a}, {b})")
    return a * b / den


def _symmetric_sum(xs: tuple[float, ...]) -> float:
    # Closed form of the binary fold; avoids rounding drift into the singularity.
    p = math.prod(xs)
    q = math.prod(1.0 - x for x in xs)
    if p + q == 0.0:
        raise AggregatorDomainError(f"symmetric_sum undefined on {list(xs)} (contains both 0 and 1)")
    return p / (p + q)


def owa_weights(n: int) -> list[float]:
    """Positional weights for the ordered average: ``0.1 ** min(i, n + 1 - i)``, 1-based ``i``.

    Both ends of the sequence weigh ten times more than the next position inward.
    """
    return [0.1 ** min(i, n + 1 - i) for i in range(1, n + 1)]


def _ordered_weighted_avg(xs: tuple[float, ...]) -> float:
    alphas = owa_weights(len(xs))
    return math.fsum(a * x for a, x in zip(alphas, xs)) / math.fsum(alphas)


def _complement_product(xs: tuple[float, ...]) -> float:
    return math.prod(1.0 - x for x in xs)


AVG_AM = Aggregator("avg_am", _avg_am)
AVG_GM = Aggregator("avg_gm", _avg_gm)
TNORM_PRODUCT = Aggregator("tnorm_product", math.prod)
TCONORM_ALGEBRAIC = Aggregator("tconorm_algebraic", _algebraic_sum)
MIN = Aggregator("min", min)
MAX = Aggregator("max", max)
TNORM_LUKASIEWICZ = Aggregator("tnorm_lukasiewicz", _fold(_lukasiewicz))
TCONORM_BOUNDED_SUM = Aggregator("tconorm_bounded_sum", _fold(_bounded_sum))
TNORM_DRASTIC = Aggregator("tnorm_drastic", _fold(_drastic_tnorm))
TCONORM_DRASTIC = Aggregator("tconorm_drastic", _fold(_drastic_tconorm))
SUM = Aggregator("sum", math.fsum, codomain=NONNEG, domain=NONNEG)
SYMMETRIC_SUM = Aggregator("symmetric_sum", _symmetric_sum)
ORDERED_WEIGHTED_AVG = Aggregator("ordered_weighted_avg", _ordered_weighted_avg, ordered=True)

# Global weight used by DF-Quad: product of complements, neutral on the empty set.
COMPLEMENT_PRODUCT = Aggregator("complement_product", _complement_product, empty_value=1.0)

CLASSIC_NAMES = (
    "avg_am",
    "avg_gm",
    "tnorm_product",
    "tconorm_algebraic",
    "min",
    "max",
    "tnorm_lukasiewicz",
    "tconorm_bounded_sum",
    "tnorm_drastic",
    "tconorm_drastic",
)

# The sweep leaves out the two drastic operators.
SWEEP_NAMES = CLASSIC_NAMES[:8]

_CATALOG: tuple[Aggregator, ...] = (
    AVG_AM,
    AVG_GM,
    TNORM_PRODUCT,
    TCONORM_ALGEBRAIC,
    MIN,
    MAX,
    TNORM_LUKASIEWICZ,
    TCONORM_BOUNDED_SUM,
    TNORM_DRASTIC,
    TCONORM_DRASTIC,
    SUM,
    SYMMETRIC_SUM,
    ORDERED_WEIGHTED_AVG,
)
_BY_NAME = {a.name: a for a in _CATALOG}


def catalog() -> list[Aggregator]:
    """The ten classic operators followed by ``sum``, ``symmetric_sum`` and ``ordered_weighted_avg``."""
    return list(_CATALOG)


def classic_operators() -> list[Aggregator]:
    return [_BY_NAME[n] for n in CLASSIC_NAMES]


def get_aggregator(name: str) -> Aggregator:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown aggregator {name!r}; choose from {sorted(_BY_NAME)}") from None


def aggregator_names() -> list[str]:
    return [a.name for a in _CATALOG]


# ---------------------------------------------------------------------------
# Combiners


def final_from(agg: Aggregator) -> Combiner:
    """Turn an aggregator into a combiner by flipping the attack weight: ``agg((1 - x, y, z))``.

    Raises:
        ValueError: ``agg`` can produce values outside [0, 1].
    """
    if not covers(UNIT, agg.codomain):
        raise ValueError(f"{agg.name} has codomain {list(agg.codomain)}; a combiner must map into [0, 1]")

    def fn(x: float, y: float, z: float) -> float:
        return agg.fn((1.0 - x, y, z))

    return Combiner(agg.name, fn)


def _dfquad(x: float, y: float, z: float) -> float:
    # x, y are products of complemented degrees; a smaller product means a stronger side.
    return z - z * max(0.0, y - x) + (1.0 - z) * max(0.0, x - y)


def _ebs(x: float, y: float, z: float) -> float:
    return 1.0 - (1.0 - z * z) / (1.0 + z * math.exp(y - x))


def _qe_h(t: float) -> float:
    t = max(0.0, t)
    return t * t / (1.0 + t * t)


def _qe(x: float, y: float, z: float) -> float:
    s = y - x
    return z - z * _qe_h(-s) + (1.0 - z) * _qe_h(s)


DFQUAD = Combiner("dfquad", _dfquad)
EBS = Combiner("ebs", _ebs, NONNEG, NONNEG)
QE = Combiner("qe", _qe, NONNEG, NONNEG)


def _example3(x: float, y: float, z: float) -> float:
    return ((1.0 - x + y) / 2.0 + z) / 2.0


def _fig8(x: float, y: float, z: float) -> float:
    return min(1.0, (1.0 + y) * max(0.0, z - x))


def _saturation(x: float, y: float, z: float) -> float:
    if x < 0.5:
        return min(y + z, 1.0)
    return max(0.0, (-x + y + z) / 3.0)


def _min3(x: float, y: float, z: float) -> float:
    return min(1.0 - x, y, z)


def _max3(x: float, y: float, z: float) -> float:
    return max(1.0 - x, y, z)


def _hybrid_minmax(x: float, y: float, z: float) -> float:
    if x < 0.2 and y > 0.8 and z > 0.8:
        return _max3(x, y, z)
    if x > 0.8 and y < 0.2 and z < 0.2:
        return _min3(x, y, z)
    return (1.0 - x + y + z) / 3.0


EXAMPLE3 = Combiner("example3", _example3)
FIG8 = Combiner("fig8", _fig8)
SATURATION = Combiner("saturation", _saturation)
MIN3 = Combiner("min3", _min3)
MAX3 = Combiner("max3", _max3)
HYBRID_MINMAX = Combiner("hybrid_minmax", _hybrid_minmax)

_LITERATURE = (DFQUAD, EBS, QE)
_EXAMPLES = (EXAMPLE3, FIG8, SATURATION, MIN3, MAX3, HYBRID_MINMAX)
_COMBINERS = {c.name: c for c in _LITERATURE + _EXAMPLES}


def literature_combiners() -> dict[str, Combiner]:
    return {c.name: c for c in _LITERATURE}


def example_combiners() -> dict[str, Combiner]:
    return {c.name: c for c in _EXAMPLES}


def get_combiner(name: str) -> Combiner:
    """Resolve a combiner name.

    Dedicated combiners win; otherwise a catalog aggregator name is wrapped
    with :func:`final_from`.
    """
    if name in _COMBINERS:
        return _COMBINERS[name]
    if name in _BY_NAME:
        return final_from(_BY_NAME[name])
    raise KeyError(f"unknown combiner {name!r}; choose from {sorted(set(_COMBINERS) | set(_BY_NAME))}")


def combiner_names() -> list[str]:
    return list(_COMBINERS)


# ---------------------------------------------------------------------------
# Piecewise aggregators used in the composition and decomposition examples


def _composition_example(xs: tuple[float, ...]) -> float:
    m = _avg_am(xs)
    return m if m > 0.5 else min(xs)


def _decomposition_example(xs: tuple[float, ...]) -> float:
    m = _avg_am(xs)
    return max(xs) if m > 0.5 else m


COMPOSITION_EXAMPLE = Aggregator("composition_example", _composition_example)
DECOMPOSITION_EXAMPLE = Aggregator("decomposition_example", _decomposition_example)


def monotone_on_grid(c: Combiner, step: float = 0.05, x_hi: float | None = None, y_hi: float | None = None) -> bool:
    """True when ``c`` is non-increasing in x and non-decreasing in y and z on a grid.

    Unbounded domains are sampled on [0, 4].
    """
    x_hi = x_hi if x_hi is not None else min(c.x_domain[1], 4.0)
    y_hi = y_hi if y_hi is not None else min(c.y_domain[1], 4.0)
    xs = _grid(0.0, x_hi, step)
    ys = _grid(0.0, y_hi, step)
    zs = _grid(0.0, 1.0, step)
    tol = 1e-12
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            for k, z in enumerate(zs):
                v = c(x, y, z)
                if i + 1 < len(xs) and c(xs[i + 1], y, z) > v + tol:
                    return False
                if j + 1 < len(ys) and c(x, ys[j + 1], z) < v - tol:
                    return False
                if k + 1 < len(zs) and c(x, y, zs[k + 1]) < v - tol:
                    return False
    return True


def _grid(lo: float, hi: float, step: float) -> list[float]:
    n = int(round((hi - lo) / step))
    return [round(lo + i * step, 12) for i in range(n + 1)]

