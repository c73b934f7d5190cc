"""Falsification harness for argumentation principles.

For each principle the harness builds graphs that satisfy the premise by
construction (or scans random graphs for arguments where it holds),
evaluates a semantics on them and looks for a broken conclusion. A
``no-counterexample`` verdict is evidence, not proof.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .aggregators import (
    Aggregator,
    Combiner,
    SWEEP_NAMES,
    example_combiners,
    final_from,
    get_aggregator,
    monotone_on_grid,
)
from .engine import AggregativeSemantics, DegreeMap, as_aggregative, combine, evaluate
from .graph import Qbaf, descendants, read_document, relabel, to_document, union
from .postulates import SamplingConfig, check_postulate

PRINCIPLES = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A7s", "A8", "A8s",
    "A9", "A10", "A10s", "A11", "A12",
)  # fmt: skip

NO_COUNTEREXAMPLE = "no-counterexample"
VIOLATED = "violated"

TOL = 1e-9


@dataclass(frozen=True)
class GeneratorConfig:
    """Random-graph budget.

    Attributes:
        seed: Base seed; each principle derives its own stream from it.
        trials: Number of instances to build.
        max_args: Upper bound on arguments of each random base graph.
        max_edges: Upper bound on edges of each random base graph (default ``2 * max_args``).
        weight_grid: Spacing of sampled weights on [0, 1].
    """

    seed: int = 0
    trials: int = 200
    max_args: int = 8
    max_edges: int | None = None
    weight_grid: float = 0.1

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.max_args < 1:
            raise ValueError("max_args must be at least 1")

    @property
    def edge_cap(self) -> int:
        return self.max_edges if self.max_edges is not None else 2 * self.max_args


@dataclass
class PrincipleVerdict:
    principle: str
    status: str
    witness: dict[str, Any] | None = None
    trials_run: int = 0
    trials_requested: int = 0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    def to_json(self) -> dict[str, Any]:
        return {
            "principle": self.principle,
            "status": self.status,
            "trials": self.trials_requested,
            "trials_run": self.trials_run,
            "witness": self.witness,
            "notes": self.notes,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Random graphs


def _grid_weight(rng: random.Random, step: float) -> float:
    n = int(round(1.0 / step))
    return round(rng.randint(0, n) * step, 10)


def generate_random_acqbaf(cfg: GeneratorConfig, rng: random.Random | None = None, prefix: str = "x") -> Qbaf:
    """Random acyclic QBAF.

    Edges only go from earlier to later arguments of a random permutation, so
    the result is acyclic. Each edge is an attack or a support with equal
    probability. Weights come from the grid, endpoints included.
    """
    rng = rng or random.Random(f"{cfg.seed}")
    n = rng.randint(1, cfg.max_args)
    ids = [f"{prefix}{k}" for k in range(n)]
    weights = {a: _grid_weight(rng, cfg.weight_grid) for a in ids}
    perm = ids[:]
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)]
    m = rng.randint(0, min(cfg.edge_cap, len(pairs)))
    attacks, supports = [], []
    for e in rng.sample(pairs, m):
        (attacks if rng.random() < 0.5 else supports).append(e)
    return Qbaf.build(weights, attacks, supports)


# ---------------------------------------------------------------------------
# Instances


@dataclass
class Instance:
    """Graphs plus named roles that instantiate one principle's premise."""

    graphs: dict[str, Qbaf]
    roles: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"graphs": {k: to_document(g) for k, g in self.graphs.items()}, "roles": self.roles}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Instance:
        graphs = {k: read_document(doc)[0] for k, doc in data["graphs"].items()}
        return cls(graphs, data["roles"])


class _Twins:
    """Incrementally builds one graph with two target arguments ``ta`` and ``tb``."""

    def __init__(self, rng: random.Random, cfg: GeneratorConfig):
        self.rng, self.cfg = rng, cfg
        base = generate_random_acqbaf(cfg, rng)
        self.weights = dict(base.weights)
        self.attacks = set(base.attacks)
        self.supports = set(base.supports)
        self.pool = sorted(base.arguments)
        self._fresh = 0
        w = _grid_weight(rng, cfg.weight_grid)
        self.weights["ta"] = w
        self.weights["tb"] = w

    def leaf(self, weight: float | None = None) -> str:
        name = f"l{self._fresh}"
        self._fresh += 1
        self.weights[name] = _grid_weight(self.rng, self.cfg.weight_grid) if weight is None else weight
        return name

    def parents(self, k_max: int, taken: set[str]) -> list[str]:
        """Up to ``k_max`` parents, each an unused base argument or a fresh leaf."""
        out = []
        for _ in range(self.rng.randint(0, k_max)):
            free = [p for p in self.pool if p not in taken]
            if free and self.rng.random() < 0.5:
                p = self.rng.choice(free)
            else:
                p = self.leaf()
            taken.add(p)
            out.append(p)
        return out

    def attack(self, srcs: Iterable[str], dst: str) -> None:
        self.attacks.update((s, dst) for s in srcs)

    def support(self, srcs: Iterable[str], dst: str) -> None:
        self.supports.update((s, dst) for s in srcs)

    def graph(self) -> Qbaf:
        return Qbaf.build(self.weights, self.attacks, self.supports)


def _a1(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    g = generate_random_acqbaf(cfg, rng)
    images = [f"y{k}" for k in range(len(g))]
    rng.shuffle(images)
    mapping = dict(zip(sorted(g.arguments), images))
    return Instance({"original": g, "relabelled": relabel(g, mapping)}, {"mapping": mapping})


def _a2(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    g = generate_random_acqbaf(cfg, rng, "x")
    h = generate_random_acqbaf(cfg, rng, "z")
    return Instance({"left": g, "union": union(g, h)})


def _a3(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    g = generate_random_acqbaf(cfg, rng)
    edges = g.attacks | g.supports

    def fresh_edges(g: Qbaf) -> list[tuple[str, str]]:
        return [
            (a, b)
            for a in sorted(g.arguments)
            for b in sorted(g.arguments)
            if a != b and (a, b) not in edges and a not in descendants(g, b)
        ]

    candidates = fresh_edges(g)
    if not candidates:
        # Saturated or single-argument graph: an isolated extra source always fits.
        g = union(g, Qbaf.build({"n0": _grid_weight(rng, cfg.weight_grid)}))
        candidates = fresh_edges(g)
    a, b = rng.choice(candidates)
    kind = "attack" if rng.random() < 0.5 else "support"
    h = g.with_edges(attacks=[(a, b)] if kind == "attack" else [], supports=[(a, b)] if kind == "support" else [])
    return Instance({"before": g, "after": h}, {"source": a, "target": b, "kind": kind})


def _a4(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    t = _Twins(rng, cfg)
    shared_att = t.parents(2, set())
    shared_supp = t.parents(2, set(shared_att))
    t.attack(shared_att, "ta")
    t.attack(shared_att, "tb")
    t.support(shared_supp, "ta")
    t.support(shared_supp, "tb")
    for relate in (t.attack, t.support):
        ws = [_grid_weight(rng, cfg.weight_grid) for _ in range(rng.randint(0, 2))]
        mirrored = ws[:]
        rng.shuffle(mirrored)
        relate([t.leaf(w) for w in ws], "ta")
        relate([t.leaf(w) for w in mirrored], "tb")
    return Instance({"graph": t.graph()}, {"a": "ta", "b": "tb"})


def _a6(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    t = _Twins(rng, cfg)
    att = t.parents(2, set())
    supp = t.parents(2, set(att))
    for target in ("ta", "tb"):
        t.attack(att, target)
        t.support(supp, target)
    x = t.leaf(0.0)
    side = "attack" if rng.random() < 0.5 else "support"
    (t.attack if side == "attack" else t.support)([x], "tb")
    return Instance({"graph": t.graph()}, {"a": "ta", "b": "tb", "x": x, "side": side})


def _a7(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    t = _Twins(rng, cfg)
    taken: set[str] = set()
    common_att = t.parents(2, taken)
    extra_att = t.parents(2, taken)
    common_supp = t.parents(2, taken)
    extra_supp = t.parents(2, taken)
    t.attack(common_att, "ta")
    t.attack(common_att + extra_att, "tb")
    t.support(common_supp + extra_supp, "ta")
    t.support(common_supp, "tb")
    return Instance({"graph": t.graph()}, {"a": "ta", "b": "tb"})


def _a8(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    t = _Twins(rng, cfg)
    taken: set[str] = set()
    c_att = t.parents(2, taken)
    c_supp = t.parents(2, taken)
    lo, hi = sorted(_grid_weight(rng, cfg.weight_grid) for _ in range(2))
    x, y = t.leaf(lo), t.leaf(hi)
    lo2, hi2 = sorted(_grid_weight(rng, cfg.weight_grid) for _ in range(2))
    x2, y2 = t.leaf(hi2), t.leaf(lo2)
    t.attack(c_att + [x], "ta")
    t.attack(c_att + [y], "tb")
    t.support(c_supp + [x2], "ta")
    t.support(c_supp + [y2], "tb")
    roles = {"a": "ta", "b": "tb", "x": x, "y": y, "x_prime": x2, "y_prime": y2}
    return Instance({"graph": t.graph()}, roles)


def _a10(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    t = _Twins(rng, cfg)
    att = t.parents(2, set())
    supp = t.parents(2, set(att))
    w = _grid_weight(rng, cfg.weight_grid)
    x, y = t.leaf(w), t.leaf(w)
    t.attack(att, "tb")
    t.support(supp, "tb")
    t.attack(att + [x], "ta")
    t.support(supp + [y], "ta")
    return Instance({"graph": t.graph()}, {"a": "ta", "b": "tb", "x": x, "y": y})


def _random_graph(rng: random.Random, cfg: GeneratorConfig) -> Instance:
    return Instance({"graph": generate_random_acqbaf(cfg, rng)})


_BUILDERS: dict[str, Callable[[random.Random, GeneratorConfig], Instance | None]] = {
    "A1": _a1,
    "A2": _a2,
    "A3": _a3,
    "A4": _a4,
    "A5": _random_graph,
    "A6": _a6,
    "A7": _a7,
    "A8": _a8,
    "A9": _random_graph,
    "A10": _a10,
    "A11": _random_graph,
    "A12": _random_graph,
}


def _base(p: str) -> str:
    return p[:-1] if p.endswith("s") else p


@functools.lru_cache(maxsize=64)
def instances(p: str, cfg: GeneratorConfig) -> tuple[Instance | None, ...]:
    """Premise instances for principle ``p``; identical for every semantics (and for strict variants)."""
    base = _base(p)
    rng = random.Random(f"{cfg.seed}/{base}")
    return tuple(_BUILDERS[base](rng, cfg) for _ in range(cfg.trials))


# ---------------------------------------------------------------------------
# Judges


@dataclass
class Outcome:
    applicable: bool
    violated: bool = False
    detail: dict[str, Any] = field(default_factory=dict)


_NA = Outcome(False)


def _degs(d: DegreeMap, ids: Iterable[str]) -> list[float]:
    return [d.deg[i] for i in ids]


def _judge_a1(s, inst: Instance) -> Outcome:
    d0 = evaluate(s, inst.graphs["original"])
    d1 = evaluate(s, inst.graphs["relabelled"])
    for a, b in sorted(inst.roles["mapping"].items()):
        if abs(d0.deg[a] - d1.deg[b]) > TOL:
            return Outcome(True, True, {"argument": a, "image": b, "degrees": [d0.deg[a], d1.deg[b]]})
    return Outcome(True)


def _judge_a2(s, inst: Instance) -> Outcome:
    g = inst.graphs["left"]
    d0, d1 = evaluate(s, g), evaluate(s, inst.graphs["union"])
    for a in sorted(g.arguments):
        if abs(d0.deg[a] - d1.deg[a]) > TOL:
            return Outcome(True, True, {"argument": a, "degrees": [d0.deg[a], d1.deg[a]]})
    return Outcome(True)


def _judge_a3(s, inst: Instance) -> Outcome:
    g, h = inst.graphs["before"], inst.graphs["after"]
    b = inst.roles["target"]
    reach = descendants(h, b) | {b}
    d0, d1 = evaluate(s, g), evaluate(s, h)
    for x in sorted(g.arguments - reach):
        if abs(d0.deg[x] - d1.deg[x]) > TOL:
            return Outcome(True, True, {"argument": x, "degrees": [d0.deg[x], d1.deg[x]]})
    return Outcome(True)


def _judge_a4(s, inst: Instance) -> Outcome:
    g = inst.graphs["graph"]
    a, b = inst.roles["a"], inst.roles["b"]
    d = evaluate(s, g)
    premise = (
        g.weights[a] == g.weights[b]
        and sorted(_degs(d, g.attackers_of(a))) == sorted(_degs(d, g.attackers_of(b)))
        and sorted(_degs(d, g.supporters_of(a))) == sorted(_degs(d, g.supporters_of(b)))
    )
    if not premise:
        return _NA
    da, db = d.deg[a], d.deg[b]
    return Outcome(True, abs(da - db) > TOL, {"degrees": [da, db]})


def _judge_a5(s, inst: Instance) -> Outcome:
    g = inst.graphs["graph"]
    d = evaluate(s, g)
    leaves = g.leaves
    if not leaves:
        return _NA
    for a in leaves:
        if d.deg[a] != g.weights[a]:
            return Outcome(True, True, {"argument": a, "degree": d.deg[a], "weight": g.weights[a]})
    return Outcome(True)


def _judge_a6(s, inst: Instance) -> Outcome:
    g = inst.graphs["graph"]
    a, b, x = inst.roles["a"], inst.roles["b"], inst.roles["x"]
    d = evaluate(s, g)
    if d.deg[x] != 0.0 or g.weights[a] != g.weights[b]:
        return _NA
    da, db = d.deg[a], d.deg[b]
    return Outcome(True, abs(da - db) > TOL, {"degrees": [da, db]})


def _a7_premise(g: Qbaf, a: str, b: str) -> bool:
    return (
        g.weights[a] == g.weights[b]
        and set(g.attackers_of(a)) <= set(g.attackers_of(b))
        and set(g.supporters_of(b)) <= set(g.supporters_of(a))
    )


def _strong(d: DegreeMap, ids: Iterable[str]) -> set[str]:
    return {i for i in ids if d.deg[i] != 0.0}


def _judge_a7(s, inst: Instance, strict: bool) -> Outcome:
    g = inst.graphs["graph"]
    a, b = inst.roles["a"], inst.roles["b"]
    if not _a7_premise(g, a, b):
        return _NA
    d = evaluate(s, g)
    da, db = d.deg[a], d.deg[b]
    detail = {"degrees": [da, db]}
    if not strict:
        return Outcome(True, da < db - TOL, detail)
    s_att_a, s_att_b = _strong(d, g.attackers_of(a)), _strong(d, g.attackers_of(b))
    s_supp_a, s_supp_b = _strong(d, g.supporters_of(a)), _strong(d, g.supporters_of(b))
    if not ((da > 0 and s_att_a < s_att_b) or (db < 1 and s_supp_b < s_supp_a)):
        return _NA
    return Outcome(True, not da > db, detail)


def _judge_a8(s, inst: Instance, strict: bool) -> Outcome:
    g = inst.graphs["graph"]
    r = inst.roles
    a, b = r["a"], r["b"]
    d = evaluate(s, g)
    dx, dy, dx2, dy2 = (d.deg[r[k]] for k in ("x", "y", "x_prime", "y_prime"))
    if not (g.weights[a] == g.weights[b] and dx <= dy and dx2 >= dy2):
        return _NA
    da, db = d.deg[a], d.deg[b]
    detail = {"degrees": [da, db], "x_y": [dx, dy], "x_prime_y_prime": [dx2, dy2]}
    if not strict:
        return Outcome(True, da < db - TOL, detail)
    if not ((da > 0 and dx < dy) or (db < 1 and dx2 > dy2)):
        return _NA
    return Outcome(True, not da > db, detail)


def _judge_a9(s, inst: Instance) -> Outcome:
    g = inst.graphs["graph"]
    d = evaluate(s, g)
    inner = [a for a in sorted(g.arguments) if 0.0 < g.weights[a] < 1.0]
    if not inner:
        return _NA
    for a in inner:
        if not 0.0 < d.deg[a] < 1.0:
            return Outcome(True, True, {"argument": a, "degree": d.deg[a], "weight": g.weights[a]})
    return Outcome(True)


def _judge_a10(s, inst: Instance, strict: bool) -> Outcome:
    g = inst.graphs["graph"]
    r = inst.roles
    a, b, x, y = r["a"], r["b"], r["x"], r["y"]
    premise = (
        g.weights[a] == g.weights[b]
        and set(g.attackers_of(a)) == set(g.attackers_of(b)) | {x}
        and set(g.supporters_of(a)) == set(g.supporters_of(b)) | {y}
    )
    d = evaluate(s, g)
    if not premise or d.deg[x] != d.deg[y]:
        return _NA
    da, db = d.deg[a], d.deg[b]
    # Same inequality written directly on the aggregation functions.
    att_b, supp_b = _degs(d, g.attackers_of(b)), _degs(d, g.supporters_of(b))
    with_pair = combine(s, _degs(d, g.attackers_of(a)), _degs(d, g.supporters_of(a)), g.weights[a])
    without = combine(s, att_b, supp_b, g.weights[b])
    violated = abs(da - db) > TOL if strict else da > db + TOL
    direct = abs(with_pair - without) > TOL if strict else with_pair > without + TOL
    return Outcome(True, violated, {"degrees": [da, db], "direct": [with_pair, without], "direct_violated": direct})


def find_injection(
    dominated: dict[str, float], dominating: dict[str, float], strong: Iterable[str]
) -> dict[str, str] | None:
    """Injection ``dominated -> dominating`` with ``deg(x) <= deg(f(x))`` plus the strictness side condition.

    Degrees on both sides are sorted in decreasing order and matched by
    position. This decides existence exactly: any dominating injection can be
    rearranged into the positional one, and the positional choice leaves the
    weakest candidates unmatched. Returns ``None`` when no suitable injection
    exists. ``strong`` lists the dominating arguments with non-zero degree.
    """
    if len(dominated) > len(dominating):
        return None
    lo = sorted(dominated, key=lambda k: (-dominated[k], k))
    hi = sorted(dominating, key=lambda k: (-dominating[k], k))
    if any(dominated[u] > dominating[v] for u, v in zip(lo, hi)):
        return None
    f = dict(zip(lo, hi))
    strong = set(strong)
    unmatched_strong = any(v in strong for v in hi[len(lo) :])
    some_strict = any(dominated[u] < dominating[v] for u, v in f.items())
    return f if unmatched_strong or some_strict else None


def _weakening_premise(g: Qbaf, d: DegreeMap, a: str, strengthening: bool) -> dict[str, str] | None:
    # Strengthening also needs w < 1, otherwise no degree in [0, 1] can exceed the weight.
    w = g.weights[a]
    if not w > 0 or (strengthening and not w < 1):
        return None
    att = {b: d.deg[b] for b in g.attackers_of(a)}
    supp = {c: d.deg[c] for c in g.supporters_of(a)}
    if strengthening:
        return find_injection(att, supp, _strong(d, supp))
    return find_injection(supp, att, _strong(d, att))


def weakening_scan(s: AggregativeSemantics, g: Qbaf, strengthening: bool) -> list[dict[str, Any]]:
    """Arguments of ``g`` where the weakening (or strengthening) premise holds, with the outcome at each."""
    d = evaluate(s, g)
    out = []
    for a in sorted(g.arguments):
        f = _weakening_premise(g, d, a, strengthening)
        if f is None:
            continue
        w = g.weights[a]
        broken = not (d.deg[a] > w) if strengthening else not (d.deg[a] < w)
        out.append({"argument": a, "injection": f, "degree": d.deg[a], "weight": w, "violated": broken})
    return out


def _judge_a11_a12(s, inst: Instance, strengthening: bool) -> Outcome:
    hits = weakening_scan(s, inst.graphs["graph"], strengthening)
    if not hits:
        return _NA
    for h in hits:
        if h["violated"]:
            return Outcome(True, True, h)
    return Outcome(True)


def judge(p: str, s: AggregativeSemantics, inst: Instance) -> Outcome:
    if p == "A1":
        return _judge_a1(s, inst)
    if p == "A2":
        return _judge_a2(s, inst)
    if p == "A3":
        return _judge_a3(s, inst)
    if p == "A4":
        return _judge_a4(s, inst)
    if p == "A5":
        return _judge_a5(s, inst)
    if p == "A6":
        return _judge_a6(s, inst)
    if p in ("A7", "A7s"):
        return _judge_a7(s, inst, p == "A7s")
    if p in ("A8", "A8s"):
        return _judge_a8(s, inst, p == "A8s")
    if p == "A9":
        return _judge_a9(s, inst)
    if p in ("A10", "A10s"):
        return _judge_a10(s, inst, p == "A10s")
    if p in ("A11", "A12"):
        return _judge_a11_a12(s, inst, p == "A12")
    raise ValueError(f"unknown principle {p!r}; expected one of {', '.join(PRINCIPLES)}")


# ---------------------------------------------------------------------------
# Public checks


def check_principle(s: AggregativeSemantics, p: str, cfg: GeneratorConfig | None = None) -> PrincipleVerdict:
    """Search for a counterexample to principle ``p`` under semantics ``s``.

    Instances whose premise does not hold (for example a strict variant whose
    extra condition fails on the computed degrees) are skipped and not counted
    in ``trials_run``. The first violation by trial index is reported.
    """
    if p not in PRINCIPLES:
        raise ValueError(f"unknown principle {p!r}; expected one of {', '.join(PRINCIPLES)}")
    cfg = cfg or GeneratorConfig()
    run = 0
    disagreements = 0
    for k, inst in enumerate(instances(p, cfg)):
        if inst is None:
            continue
        out = judge(p, s, inst)
        if not out.applicable:
            continue
        run += 1
        if p in ("A10", "A10s") and out.detail.get("direct_violated") != out.violated:
            disagreements += 1
        if out.violated:
            witness = {"trial": k, **inst.to_json(), "detail": out.detail}
            notes = {"reformulation_disagreements": disagreements} if p.startswith("A10") else {}
            return PrincipleVerdict(p, VIOLATED, witness, run, cfg.trials, notes)
    notes = {"reformulation_disagreements": disagreements} if p.startswith("A10") else {}
    return PrincipleVerdict(p, NO_COUNTEREXAMPLE, None, run, cfg.trials, notes)


def check_on_graph(s: AggregativeSemantics, p: str, g: Qbaf) -> PrincipleVerdict:
    """Check a graph-local principle (A5, A9, A11, A12) on one given graph."""
    if p not in ("A5", "A9", "A11", "A12"):
        raise ValueError(f"{p} needs constructed instances; use check_principle")
    inst = Instance({"graph": g})
    out = judge(p, s, inst)
    if out.violated:
        return PrincipleVerdict(p, VIOLATED, {**inst.to_json(), "detail": out.detail}, 1, 1)
    return PrincipleVerdict(p, NO_COUNTEREXAMPLE, None, int(out.applicable), 1)


def replay(s: AggregativeSemantics, v: PrincipleVerdict) -> bool:
    """True when the stored witness still satisfies the premise and breaks the conclusion."""
    if not v.violated or v.witness is None:
        return False
    out = judge(v.principle, s, Instance.from_json(v.witness))
    return out.applicable and out.violated


# ---------------------------------------------------------------------------
# Resilience as a property of the combiner alone


def resilience_scan(s: AggregativeSemantics | Combiner, step: float = 0.05) -> PrincipleVerdict:
    """Grid scan of ``0 < phi_f(x, y, z) < 1`` for ``z`` strictly inside (0, 1).

    ``x`` and ``y`` range over the combiner's domains, capped at 4 when unbounded.
    ``x`` is scanned from its top end down so the strongest attack is tried first.
    """
    c = s.phi_f if isinstance(s, AggregativeSemantics) else s
    n = int(round(1.0 / step))
    zs = [round(k * step, 12) for k in range(1, n)]
    xs = _axis(c.x_domain, step)[::-1]
    ys = _axis(c.y_domain, step)
    count = 0
    for z in zs:
        for x in xs:
            for y in ys:
                count += 1
                v = c(x, y, z)
                if not 0.0 < v < 1.0:
                    return PrincipleVerdict("A9", VIOLATED, {"x": x, "y": y, "z": z, "value": v}, count, count)
    return PrincipleVerdict("A9", NO_COUNTEREXAMPLE, None, count, count)


def _axis(interval: tuple[float, float], step: float) -> list[float]:
    hi = min(interval[1], 4.0)
    n = int(round((hi - interval[0]) / step))
    return [round(interval[0] + k * step, 12) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# Hypothesis tags and propositions


@functools.lru_cache(maxsize=None)
def _postulate_cell(agg: Aggregator, p: str) -> Any:
    return check_postulate(agg, p, SamplingConfig(random_tuples=1000))


def _zero_neutral(agg: Aggregator) -> bool:
    v = _postulate_cell(agg, "P9")
    return v.holds and v.element == 0.0 and agg.fn((0.0,)) == agg.empty_value


def _monotone_agg(agg: Aggregator) -> bool:
    return _postulate_cell(agg, "P2").holds


@functools.lru_cache(maxsize=None)
def _monotone_combiner(c: Combiner) -> bool:
    return monotone_on_grid(c, step=0.1)


@functools.lru_cache(maxsize=None)
def _stable_combiner(c: Combiner, e_r: float, e_s: float) -> bool:
    # Float combiners (ebs) may miss z by an ulp.
    return all(abs(c(e_r, e_s, z) - z) <= 1e-12 for z in (k / 20 for k in range(21)))


def hypothesis_tags(s: AggregativeSemantics) -> frozenset[str]:
    """Which sufficient conditions the semantics meets.

    ``boundary``: both aggregators map the empty multiset to the minimum of
    their codomain and the combiner returns ``z`` on those empty values.
    ``zero_neutral``: 0 is a neutral element of both aggregators.
    ``monotone``: both aggregators are non-decreasing and the combiner is
    non-increasing in x and non-decreasing in y and z.
    ``stable_combiner``: the combiner returns ``z`` on the empty values.
    """
    tags = set()
    stable = _stable_combiner(s.phi_f, s.phi_r.empty_value, s.phi_s.empty_value)
    if stable:
        tags.add("stable_combiner")
    if stable and s.phi_r.empty_value == s.phi_r.codomain[0] and s.phi_s.empty_value == s.phi_s.codomain[0]:
        tags.add("boundary")
    if _zero_neutral(s.phi_r) and _zero_neutral(s.phi_s):
        tags.add("zero_neutral")
    if _monotone_agg(s.phi_r) and _monotone_agg(s.phi_s) and _monotone_combiner(s.phi_f):
        tags.add("monotone")
    return frozenset(tags)


PROPOSITIONS: dict[int, tuple[tuple[str, ...], frozenset[str]]] = {
    2: (("A1", "A2", "A3", "A4"), frozenset()),
    3: (("A5",), frozenset({"boundary"})),
    4: (("A6",), frozenset({"zero_neutral", "stable_combiner"})),
    5: (("A8",), frozenset({"monotone"})),
    6: (("A7",), frozenset({"zero_neutral", "monotone", "stable_combiner"})),
}


def catalog_semantics() -> list[AggregativeSemantics]:
    """Every pairing of the sweep aggregators with each other and with every combiner, plus the literature triples."""
    names = sorted(SWEEP_NAMES)
    aggs = [get_aggregator(n) for n in names]
    combiners = [final_from(a) for a in aggs] + list(example_combiners().values())
    out = [as_aggregative(n) for n in ("dfquad", "ebs", "qe")]
    for r, s_, f in itertools.product(aggs, aggs, combiners):
        out.append(AggregativeSemantics(r, s_, f))
    return out


@dataclass
class PropositionReport:
    proposition: int
    principles: tuple[str, ...]
    hypotheses: frozenset[str]
    checked: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    failures: list[dict[str, Any]] = field(default_factory=list)
    min_trials_run: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_proposition(
    n: int, sample: Sequence[AggregativeSemantics] | None = None, cfg: GeneratorConfig | None = None
) -> PropositionReport:
    """Check the principles of proposition ``n`` on every sampled semantics meeting its hypotheses.

    Any violation among tagged semantics is a harness bug or a tagging error
    and is listed in ``failures`` with its witness.
    """
    if n not in PROPOSITIONS:
        raise ValueError(f"proposition must be one of {sorted(PROPOSITIONS)}")
    principles, needs = PROPOSITIONS[n]
    cfg = cfg or GeneratorConfig()
    sample = list(sample) if sample is not None else catalog_semantics()
    report = PropositionReport(n, principles, needs)
    for s in sample:
        if not needs <= hypothesis_tags(s):
            report.skipped.append(s.label)
            continue
        report.checked.append(s.label)
        for p in principles:
            v = check_principle(s, p, cfg)
            report.min_trials_run = v.trials_run if report.min_trials_run is None else min(report.min_trials_run, v.trials_run)
            if v.violated:
                report.failures.append({"semantics": s.label, "principle": p, "witness": v.witness})
    return report
