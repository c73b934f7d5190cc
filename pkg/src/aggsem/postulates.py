"""Sampling-based checker for the twelve aggregation postulates.

Each check either finds a concrete counterexample among sampled inputs or
reports that none was found. Continuity can only be probed, so it yields
``heuristic-holds`` instead of ``holds-on-sample``.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .aggregators import Aggregator, AggregatorDomainError

POSTULATES = tuple(f"P{i}" for i in range(1, 13))

HOLDS = "holds-on-sample"
VIOLATED = "violated"
HEURISTIC = "heuristic-holds"

Tup = tuple[float, ...]


@dataclass(frozen=True)
class SamplingConfig:
    """Sampling budget for postulate checks.

    Attributes:
        seed: Seed for the random tuples.
        step: Grid spacing on [0, 1].
        grid_arity: Largest arity enumerated exhaustively on the grid.
        random_tuples: Number of uniform random tuples.
        random_arity: Inclusive arity range of the random tuples.
        tol: Slack for equalities and for the conclusion side of inequalities.
    """

    seed: int = 0
    step: float = 0.1
    grid_arity: int = 3
    random_tuples: int = 10_000
    random_arity: tuple[int, int] = (4, 5)
    tol: float = 1e-9


@dataclass
class PostulateVerdict:
    postulate: str
    status: str
    witness: dict[str, Any] | None = None
    samples_used: int = 0
    element: float | None = None

    @property
    def holds(self) -> bool:
        return self.status != VIOLATED

    def cell(self) -> str:
        """Compact table cell: ``yes``, ``no``, or ``e1=<v>`` / ``e0=<v>`` for element postulates."""
        if self.status == VIOLATED:
            return "no"
        if self.element is not None:
            label = "e1" if self.postulate == "P9" else "e0"
            return f"{label}={_fmt(self.element)}"
        return "yes"


def _fmt(v: float) -> str:
    return f"{v:g}"


class _Sampler:
    """Caches the sampled tuples and evaluations for one aggregator."""

    def __init__(self, agg: Aggregator, cfg: SamplingConfig):
        self.agg = agg
        self.cfg = cfg
        n = int(round(1.0 / cfg.step))
        self.grid: list[float] = [round(i * cfg.step, 12) for i in range(n + 1)]
        self.grid_tuples: dict[int, list[Tup]] = {
            k: list(itertools.product(self.grid, repeat=k)) for k in range(1, cfg.grid_arity + 1)
        }
        rng = np.random.default_rng(cfg.seed)
        lo, hi = cfg.random_arity
        arities = rng.integers(lo, hi + 1, size=cfg.random_tuples)
        raw = rng.random((cfg.random_tuples, hi))
        self.random_tuples: list[Tup] = [tuple(float(v) for v in raw[i, : arities[i]]) for i in range(cfg.random_tuples)]
        self.rng = rng
        self._cache: dict[Tup, float] = {}

    def all_tuples(self) -> Iterable[Tup]:
        for k in sorted(self.grid_tuples):
            yield from self.grid_tuples[k]
        yield from self.random_tuples

    def f(self, t: Tup) -> float:
        """Aggregate ``t``; NaN where the function is undefined."""
        v = self._cache.get(t)
        if v is None:
            try:
                v = float(self.agg.fn(t)) if t else self.agg.empty_value
            except (AggregatorDomainError, ZeroDivisionError):
                v = math.nan
            self._cache[t] = v
        return v

    def insertions(self, t: Tup, z: float) -> list[Tup]:
        if not self.agg.ordered:
            return [t + (z,)]
        return [t[:i] + (z,) + t[i:] for i in range(len(t) + 1)]


def _verdict(p: str, witness: dict[str, Any] | None, n: int, ok_status: str = HOLDS, element: float | None = None):
    if witness is not None:
        return PostulateVerdict(p, VIOLATED, witness, n)
    return PostulateVerdict(p, ok_status, None, n, element)


def _p1(s: _Sampler) -> PostulateVerdict:
    n = 0
    for k in range(1, 6):
        for target in (0.0, 1.0):
            t = (target,) * k
            n += 1
            v = s.f(t)
            if not abs(v - target) <= s.cfg.tol:
                return _verdict("P1", {"input": list(t), "output": v, "expected": target}, n)
    return _verdict("P1", None, n)


def _p2(s: _Sampler) -> PostulateVerdict:
    n, tol, step = 0, s.cfg.tol, s.cfg.step
    for t in s.all_tuples():
        base = s.f(t)
        if math.isnan(base):
            continue
        for i, v in enumerate(t):
            if v >= 1.0:
                continue
            up = min(1.0, round(v + step, 12)) if len(t) <= s.cfg.grid_arity else float(s.rng.uniform(v, 1.0))
            bumped = t[:i] + (up,) + t[i + 1 :]
            out = s.f(bumped)
            n += 1
            if out < base - tol:
                return _verdict("P2", {"lower": list(t), "higher": list(bumped), "outputs": [base, out]}, n)
    return _verdict("P2", None, n)


JUMP_DELTAS = (1e-4, 1e-6, 1e-8)


def _p3(s: _Sampler) -> PostulateVerdict:
    # A jump that does not shrink as the perturbation shrinks is a discontinuity.
    n = 0
    for k in sorted(s.grid_tuples):
        for t in s.grid_tuples[k]:
            base = s.f(t)
            if math.isnan(base):
                continue
            for i, v in enumerate(t):
                for sign in (-1.0, 1.0):
                    jumps = []
                    for d in JUMP_DELTAS:
                        moved = v + sign * d
                        if not 0.0 <= moved <= 1.0:
                            break
                        out = s.f(t[:i] + (moved,) + t[i + 1 :])
                        jumps.append(abs(out - base))
                    if len(jumps) < len(JUMP_DELTAS) or any(math.isnan(j) for j in jumps):
                        continue
                    n += 1
                    if jumps[0] > 0.01 and jumps[-1] > 0.5 * jumps[0]:
                        moved = v + sign * JUMP_DELTAS[-1]
                        return _verdict(
                            "P3",
                            {
                                "point": list(t),
                                "perturbed": list(t[:i] + (moved,) + t[i + 1 :]),
                                "jumps": dict(zip(map(str, JUMP_DELTAS), jumps)),
                            },
                            n,
                        )
    return _verdict("P3", None, n, ok_status=HEURISTIC)


def _p4(s: _Sampler) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    for t in s.all_tuples():
        base = s.f(t)
        if math.isnan(base) or len(t) < 2:
            continue
        if len(t) <= s.cfg.grid_arity:
            perms: Iterable[Tup] = sorted(set(itertools.permutations(t)))
        else:
            perms = [t[::-1]] + [tuple(s.rng.permutation(t).tolist()) for _ in range(2)]
        for q in perms:
            n += 1
            out = s.f(q)
            if not abs(out - base) <= tol:
                return _verdict("P4", {"input": list(t), "permuted": list(q), "outputs": [base, out]}, n)
    return _verdict("P4", None, n)


def _p5(s: _Sampler) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    values = s.grid + [float(v) for v in s.rng.random(200)]
    for x in values:
        for k in range(1, 6):
            t = (x,) * k
            n += 1
            out = s.f(t)
            if not abs(out - x) <= tol:
                return _verdict("P5", {"input": list(t), "output": out}, n)
    return _verdict("P5", None, n)


def _p6(s: _Sampler) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    small = [t for k in (1, 2) for t in s.grid_tuples.get(k, [])]
    pairs: Iterable[tuple[Tup, Tup]] = itertools.product(small, small)
    cuts = [(t[:c], t[c:]) for t in s.random_tuples for c in [int(s.rng.integers(1, len(t)))]]
    for x, y in itertools.chain(pairs, cuts):
        fx, fy, fxy = s.f(x), s.f(y), s.f(x + y)
        if any(math.isnan(v) for v in (fx, fy, fxy)):
            continue
        nested = s.f((fx, fy)) if s.agg.domain[0] <= min(fx, fy) and max(fx, fy) <= s.agg.domain[1] else math.nan
        if math.isnan(nested):
            continue
        n += 1
        if not abs(nested - fxy) <= tol:
            return _verdict("P6", {"left": list(x), "right": list(y), "nested": nested, "flat": fxy}, n)
    return _verdict("P6", None, n)


def _bound(s: _Sampler, p: str, ref: Callable[[Tup], float], below: bool) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    for t in s.all_tuples():
        out = s.f(t)
        if math.isnan(out):
            continue
        n += 1
        r = ref(t)
        if (below and out > r + tol) or (not below and out < r - tol):
            return _verdict(p, {"input": list(t), "output": out, "bound": r}, n)
    return _verdict(p, None, n)


def _element_contexts(s: _Sampler, include_empty: bool) -> list[Tup]:
    ctx = [t for k in (1, 2) for t in s.grid_tuples.get(k, [])]
    ctx += s.random_tuples[:2000]
    return ([()] if include_empty else []) + ctx


def _p9(s: _Sampler) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    contexts = _element_contexts(s, include_empty=False)
    refutations: dict[str, Any] = {}
    for c in s.grid:
        found = None
        for m in contexts:
            base = s.f(m)
            if math.isnan(base):
                continue
            for t in s.insertions(m, c):
                n += 1
                out = s.f(t)
                if math.isnan(out) or not abs(out - base) <= tol:
                    found = {"candidate": c, "without": list(m), "with": list(t), "outputs": [base, out]}
                    break
            if found:
                break
        if found is None:
            return _verdict("P9", None, n, element=c)
        refutations[_fmt(c)] = found
    return _verdict("P9", {"candidates_refuted": refutations}, n)


def _p10(s: _Sampler) -> PostulateVerdict:
    n, tol = 0, s.cfg.tol
    contexts = _element_contexts(s, include_empty=True)
    refutations: dict[str, Any] = {}
    for c in s.grid:
        found = None
        for m in contexts:
            for t in s.insertions(m, c):
                n += 1
                out = s.f(t)
                if math.isnan(out) or not abs(out - c) <= tol:
                    found = {"candidate": c, "input": list(t), "output": out}
                    break
            if found:
                break
        if found is None:
            return _verdict("P10", None, n, element=c)
        refutations[_fmt(c)] = found
    return _verdict("P10", {"candidates_refuted": refutations}, n)


def _order_tables(s: _Sampler, tuples: Sequence[Tup]) -> tuple[np.ndarray, np.ndarray]:
    """Values without and with each grid ``z`` inserted at each position (shape tuples × z × positions)."""
    base = np.array([s.f(t) for t in tuples])
    npos = len(s.insertions(tuples[0], 0.0))
    ext = np.empty((len(tuples), len(s.grid), npos))
    for i, t in enumerate(tuples):
        for j, z in enumerate(s.grid):
            ext[i, j, :] = [s.f(u) for u in s.insertions(t, z)]
    return base, ext


def _p11_p12(s: _Sampler, p: str) -> PostulateVerdict:
    # Only tuples of equal arity are compared.
    tol, n = s.cfg.tol, 0
    for k in (1, 2):
        tuples = s.grid_tuples.get(k)
        if not tuples:
            continue
        base, ext = _order_tables(s, tuples)
        bx, by = base[:, None, None, None], base[None, :, None, None]
        ex, ey = ext[:, None, :, :], ext[None, :, :, :]
        with np.errstate(invalid="ignore"):
            if p == "P11":
                bad = (bx <= by) & (ex > ey + tol)
            else:
                bad = (ex < ey - tol) & (bx > by + tol)
        n += bad.size
        hit = np.argwhere(bad)
        if hit.size:
            i, j, zi, pos = (int(v) for v in hit[0])
            return _verdict(p, _order_witness(s, tuples[i], tuples[j], s.grid[zi], pos), n)
    # Random pairs of equal arity with random z.
    rt = s.random_tuples
    for _ in range(min(len(rt), 5000)):
        x = rt[int(s.rng.integers(len(rt)))]
        y = tuple(float(v) for v in s.rng.random(len(x)))
        z = float(s.rng.random())
        for pos, (xz, yz) in enumerate(zip(s.insertions(x, z), s.insertions(y, z))):
            fx, fy, fxz, fyz = s.f(x), s.f(y), s.f(xz), s.f(yz)
            n += 1
            if p == "P11":
                bad_pair = fx <= fy and fxz > fyz + tol
                bad_swap = fy <= fx and fyz > fxz + tol
            else:
                bad_pair = fxz < fyz - tol and fx > fy + tol
                bad_swap = fyz < fxz - tol and fy > fx + tol
            if bad_pair:
                return _verdict(p, _order_witness(s, x, y, z, pos), n)
            if bad_swap:
                return _verdict(p, _order_witness(s, y, x, z, pos), n)
    return _verdict(p, None, n)


def _order_witness(s: _Sampler, x: Tup, y: Tup, z: float, pos: int) -> dict[str, Any]:
    xz, yz = s.insertions(x, z)[pos], s.insertions(y, z)[pos]
    return {
        "x": list(x),
        "y": list(y),
        "z": z,
        "position": pos,
        "phi_x": s.f(x),
        "phi_y": s.f(y),
        "phi_xz": s.f(xz),
        "phi_yz": s.f(yz),
    }


def check_postulate(agg: Aggregator, p: str, cfg: SamplingConfig | None = None) -> PostulateVerdict:
    """Check one postulate on sampled inputs.

    Args:
        agg: Aggregator under test. Inputs are drawn from [0, 1].
        p: Postulate id, ``"P1"`` to ``"P12"``.
        cfg: Sampling budget; defaults to :class:`SamplingConfig`.

    Returns:
        A verdict. ``violated`` verdicts carry a witness that :func:`replay`
        can re-evaluate.
    """
    return _check(_Sampler(agg, cfg or SamplingConfig()), p)


def _check(s: _Sampler, p: str) -> PostulateVerdict:
    if p not in POSTULATES:
        raise ValueError(f"unknown postulate {p!r}; expected one of {', '.join(POSTULATES)}")
    # Per-postulate stream so a single check matches the same cell of a full matrix.
    s.rng = np.random.default_rng((s.cfg.seed, POSTULATES.index(p)))
    if p == "P1":
        return _p1(s)
    if p == "P2":
        return _p2(s)
    if p == "P3":
        return _p3(s)
    if p == "P4":
        return _p4(s)
    if p == "P5":
        return _p5(s)
    if p == "P6":
        return _p6(s)
    if p == "P7":
        return _bound(s, "P7", min, below=True)
    if p == "P8":
        return _bound(s, "P8", max, below=False)
    if p == "P9":
        return _p9(s)
    if p == "P10":
        return _p10(s)
    return _p11_p12(s, p)


def replay(agg: Aggregator, v: PostulateVerdict, tol: float = 1e-9) -> bool:
    """Re-evaluate a violation witness and confirm it still breaks the postulate."""
    if v.status != VIOLATED or v.witness is None:
        return False
    w = v.witness

    def f(t: Sequence[float]) -> float:
        # Undefined inputs count as NaN, exactly as during sampling.
        try:
            return agg.fn(tuple(t)) if t else agg.empty_value
        except (AggregatorDomainError, ValueError, ZeroDivisionError):
            return math.nan

    p = v.postulate
    if p == "P1":
        return not abs(f(w["input"]) - w["expected"]) <= tol
    if p == "P2":
        return f(w["higher"]) < f(w["lower"]) - tol
    if p == "P3":
        jump = abs(f(w["perturbed"]) - f(w["point"]))
        return jump > 0.01
    if p == "P4":
        return not abs(f(w["permuted"]) - f(w["input"])) <= tol
    if p == "P5":
        return not abs(f(w["input"]) - w["input"][0]) <= tol
    if p == "P6":
        nested = f([f(w["left"]), f(w["right"])])
        return not abs(nested - f(w["left"] + w["right"])) <= tol
    if p == "P7":
        return f(w["input"]) > min(w["input"]) + tol
    if p == "P8":
        return f(w["input"]) < max(w["input"]) - tol
    if p in ("P9", "P10"):
        for r in w["candidates_refuted"].values():
            if p == "P9":
                a, b = f(r["without"]), f(r["with"])
                if abs(a - b) <= tol:
                    return False
            elif abs(f(r["input"]) - r["candidate"]) <= tol:
                return False
        return True
    x, y, z, pos = w["x"], w["y"], w["z"], w["position"]
    xz = x + [z] if not agg.ordered else x[:pos] + [z] + x[pos:]
    yz = y + [z] if not agg.ordered else y[:pos] + [z] + y[pos:]
    if p == "P11":
        return f(x) <= f(y) and f(xz) > f(yz) + tol
    return f(xz) < f(yz) - tol and f(x) > f(y) + tol


@dataclass
class PostulateMatrix:
    aggregators: list[str] = field(default_factory=list)
    verdicts: dict[str, dict[str, PostulateVerdict]] = field(default_factory=dict)

    def cells(self) -> dict[str, dict[str, str]]:
        return {a: {p: v.cell() for p, v in row.items()} for a, row in self.verdicts.items()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["aggregator", *POSTULATES])
        for name in self.aggregators:
            writer.writerow([name, *(self.verdicts[name][p].cell() for p in POSTULATES)])
        return buf.getvalue()


def postulate_matrix(aggs: Sequence[Aggregator], cfg: SamplingConfig | None = None) -> PostulateMatrix:
    """Run every postulate for every aggregator; rows keep the order of ``aggs``."""
    cfg = cfg or SamplingConfig()
    out = PostulateMatrix()
    for agg in aggs:
        sampler = _Sampler(agg, cfg)
        out.aggregators.append(agg.name)
        out.verdicts[agg.name] = {p: _check(sampler, p) for p in POSTULATES}
    return out
