from __future__ import annotations

import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggsem.aggregators import AVG_AM, TNORM_PRODUCT, Combiner, final_from, get_aggregator
from aggsem.bench import paper_graph
from aggsem.engine import AggregativeSemantics, as_aggregative, evaluate
from aggsem.graph import Qbaf, is_acyclic, validate
from aggsem.principles import (
    NO_COUNTEREXAMPLE,
    PRINCIPLES,
    PROPOSITIONS,
    VIOLATED,
    GeneratorConfig,
    PrincipleVerdict,
    catalog_semantics,
    check_on_graph,
    check_principle,
    find_injection,
    generate_random_acqbaf,
    hypothesis_tags,
    replay,
    resilience_scan,
    verify_proposition,
    weakening_scan,
)

SMALL = GeneratorConfig(seed=7, trials=120)


def _sem(r: str, s: str, f: str) -> AggregativeSemantics:
    return AggregativeSemantics.from_names(r, s, f)


def test_generator_config_invariants():
    with pytest.raises(ValueError):
        GeneratorConfig(trials=0)
    with pytest.raises(ValueError):
        GeneratorConfig(max_args=0)
    assert GeneratorConfig(max_args=5).edge_cap == 10


def test_single_argument_generator():
    g = generate_random_acqbaf(GeneratorConfig(seed=1, max_args=1))
    assert len(g) == 1
    assert not g.attacks and not g.supports


def test_generator_deterministic():
    cfg = GeneratorConfig(seed=42)
    assert generate_random_acqbaf(cfg) == generate_random_acqbaf(cfg)


def test_generator_self_check():
    cfg = GeneratorConfig(seed=3, max_args=8)
    rng = random.Random(3)
    for _ in range(1000):
        g = generate_random_acqbaf(cfg, rng)
        assert validate(g).ok
        assert is_acyclic(g)
        assert all(abs(round(w * 10) - w * 10) < 1e-9 for w in g.weights.values())


@pytest.mark.parametrize("principle", ["A1", "A2", "A3", "A4", "A5"])
@pytest.mark.parametrize(
    "triple",
    [
        ("avg_am", "avg_am", "avg_am"),
        ("tnorm_product", "max", "fig8"),
        ("min", "tconorm_algebraic", "saturation"),
        ("tnorm_lukasiewicz", "avg_gm", "hybrid_minmax"),
    ],
)
def test_soundness_on_catalog_semantics(principle, triple):
    assert check_principle(_sem(*triple), principle, SMALL).status == NO_COUNTEREXAMPLE


@pytest.mark.parametrize(
    "name, extra",
    [("dfquad", ()), ("ebs", ("A9", "A10", "A12")), ("qe", ("A9", "A10", "A11", "A12"))],
)
def test_literature_satisfies_structural_principles(name, extra):
    s = as_aggregative(name)
    for p in ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", *extra):
        assert check_principle(s, p, SMALL).status == NO_COUNTEREXAMPLE, p


def test_dfquad_breaks_franklin():
    # An equal attacker/supporter pair shrinks both complement products,
    # pulling the degree back towards the weight from below.
    s = as_aggregative("dfquad")
    v = check_principle(s, "A10", SMALL)
    assert v.status == VIOLATED
    assert replay(s, v)
    deg_a, deg_b = v.witness["detail"]["degrees"]
    assert deg_a > deg_b


@pytest.mark.parametrize("name, principle", [("ebs", "A11"), ("qe", "A7s"), ("ebs", "A8s")])
def test_saturated_weight_defeats_strict_conclusions(name, principle):
    s = as_aggregative(name)
    v = check_principle(s, principle, SMALL)
    assert v.status == VIOLATED
    assert replay(s, v)
    assert 1.0 in v.witness["detail"].get("degrees", [v.witness["detail"].get("degree")])


def test_product_attack_breaks_neutrality():
    s = AggregativeSemantics(TNORM_PRODUCT, AVG_AM, final_from(AVG_AM))
    v = check_principle(s, "A6", SMALL)
    assert v.status == VIOLATED
    assert replay(s, v)
    x = v.witness["roles"]["x"]
    assert {"id": x, "weight": 0.0} in v.witness["graphs"]["graph"]["arguments"]


def test_three_node_neutrality_witness():
    # b attacks a with degree 0.5; adding a zero-degree attacker z zeroes the product.
    s = AggregativeSemantics(TNORM_PRODUCT, AVG_AM, final_from(AVG_AM))
    g1 = Qbaf.build({"a": 0.5, "b": 0.5}, attacks=[("b", "a")])
    g2 = Qbaf.build({"a": 0.5, "b": 0.5, "z": 0.0}, attacks=[("b", "a"), ("z", "a")])
    assert evaluate(s, g1)["a"] != evaluate(s, g2)["a"]


def test_increasing_attack_combiner_breaks_reinforcement():
    # Grows with the attack weight: the reinforcement check must catch it.
    wrong = Combiner("wrong", lambda x, y, z: (x + y + z) / 3)
    s = AggregativeSemantics(AVG_AM, AVG_AM, wrong)
    v = check_principle(s, "A8", SMALL)
    assert v.status == VIOLATED
    assert replay(s, v)


def test_every_violation_replays_and_is_deterministic():
    s = _sem("max", "max", "fig8")
    for p in PRINCIPLES:
        a, b = check_principle(s, p, SMALL), check_principle(s, p, SMALL)
        assert a.to_json() == b.to_json()
        if a.violated:
            assert replay(s, a), p


def test_replay_rejects_non_violations():
    assert not replay(_sem("max", "max", "fig8"), PrincipleVerdict("A5", NO_COUNTEREXAMPLE))


def test_unknown_principle():
    with pytest.raises(ValueError):
        check_principle(_sem("max", "max", "fig8"), "A13", SMALL)
    with pytest.raises(ValueError):
        check_on_graph(_sem("max", "max", "fig8"), "A1", paper_graph("fig1"))


def test_franklin_reformulation_agrees():
    for triple in [("avg_am", "avg_am", "avg_am"), ("max", "max", "fig8"), ("tnorm_product", "min", "example3")]:
        for p in ("A10", "A10s"):
            v = check_principle(_sem(*triple), p, SMALL)
            assert v.notes["reformulation_disagreements"] == 0


def test_weakening_example_graph():
    hits = weakening_scan(_sem("min", "min", "fig8"), paper_graph("fig8_weakening_axiom"), strengthening=False)
    at_a = [h for h in hits if h["argument"] == "a"]
    assert at_a and at_a[0]["injection"] == {"b": "c", "e": "d"}
    assert at_a[0]["degree"] == pytest.approx(0.28, abs=1e-12)
    assert not at_a[0]["violated"]


def test_final_graph_narrative():
    s4 = _sem("avg_am", "avg_am", "avg_am")
    g = paper_graph("fig6_final")
    v = check_on_graph(s4, "A12", g)
    assert v.status == VIOLATED
    assert v.witness["detail"]["argument"] == "e"
    assert v.witness["detail"]["degree"] == pytest.approx(0.475)
    weak = {h["argument"] for h in weakening_scan(s4, g, strengthening=False)}
    assert "i" in weak


@pytest.mark.parametrize(
    "dominated, dominating, strong, found",
    [
        ({"s": 0.5}, {"t": 0.6}, {"t"}, True),
        ({"s": 0.5}, {"t": 0.5}, {"t"}, False),
        ({"s": 0.5}, {"t": 0.5, "u": 0.2}, {"t", "u"}, True),
        ({"s": 0.5}, {"t": 0.5, "u": 0.0}, {"t"}, False),
        ({"s": 0.7, "r": 0.1}, {"t": 0.6, "u": 0.9}, {"t", "u"}, True),
        ({"s": 0.7, "r": 0.65}, {"t": 0.6, "u": 0.9}, {"t", "u"}, False),
        ({}, {}, set(), False),
        ({}, {"t": 0.3}, {"t"}, True),
    ],
)
def test_find_injection(dominated, dominating, strong, found):
    f = find_injection(dominated, dominating, strong)
    assert (f is not None) == found
    if f:
        assert len(set(f.values())) == len(f)
        assert all(dominated[k] <= dominating[v] for k, v in f.items())


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.sampled_from([0.0, 0.2, 0.5, 0.7, 1.0]), max_size=4),
    st.lists(st.sampled_from([0.0, 0.2, 0.5, 0.7, 1.0]), max_size=4),
)
def test_find_injection_matches_brute_force(lo, hi):
    dominated = {f"s{k}": v for k, v in enumerate(lo)}
    dominating = {f"t{k}": v for k, v in enumerate(hi)}
    strong = {k for k, v in dominating.items() if v != 0.0}
    exists = False
    for image in itertools.permutations(dominating, len(dominated)):
        f = dict(zip(dominated, image))
        if all(dominated[k] <= dominating[v] for k, v in f.items()):
            unmatched = set(dominating) - set(image)
            if any(dominated[k] < dominating[v] for k, v in f.items()) or unmatched & strong:
                exists = True
                break
    assert (find_injection(dominated, dominating, strong) is not None) == exists


def test_resilience_scan_examples():
    assert resilience_scan(as_aggregative("ebs")).status == NO_COUNTEREXAMPLE
    assert resilience_scan(final_from(AVG_AM)).status == NO_COUNTEREXAMPLE
    v = resilience_scan(final_from(TNORM_PRODUCT))
    assert v.status == VIOLATED
    assert v.witness["x"] == 1.0
    assert v.witness["value"] == 0.0


def test_hypothesis_tags():
    assert hypothesis_tags(as_aggregative("ebs")) >= {"zero_neutral", "monotone", "stable_combiner", "boundary"}
    assert "zero_neutral" not in hypothesis_tags(_sem("tnorm_product", "max", "fig8"))
    assert "stable_combiner" not in hypothesis_tags(_sem("max", "max", "avg_am"))
    assert "monotone" in hypothesis_tags(_sem("min", "max", "avg_am"))


def test_catalog_semantics_size():
    assert len(catalog_semantics()) == 8 * 8 * 14 + 3


def test_proposition_two_small():
    sample = [_sem("avg_am", "avg_am", "avg_am"), as_aggregative("qe")]
    r = verify_proposition(2, sample, GeneratorConfig(seed=1, trials=60))
    assert r.ok and r.checked == ["avg_am,avg_am,avg_am", "qe"]


def test_proposition_filters_product_attack():
    r = verify_proposition(4, [_sem("tnorm_product", "max", "fig8")], GeneratorConfig(seed=1, trials=50))
    assert r.skipped == ["tnorm_product,max,fig8"]
    assert r.ok
    with pytest.raises(ValueError):
        verify_proposition(7)
    assert set(PROPOSITIONS) == {2, 3, 4, 5, 6}


def test_verdict_json_embeds_graph_documents():
    s = AggregativeSemantics(get_aggregator("tnorm_product"), AVG_AM, final_from(AVG_AM))
    v = check_principle(s, "A6", SMALL)
    data = json.loads(v.dumps())
    assert data["principle"] == "A6"
    assert data["status"] == VIOLATED
    assert data["trials"] == SMALL.trials
    doc = data["witness"]["graphs"]["graph"]
    assert set(doc) == {"arguments", "attacks", "supports"}
    assert {"a", "b", "x", "side"} <= set(data["witness"]["roles"])
