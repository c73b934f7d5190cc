from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggsem.aggregators import Aggregator, catalog, get_aggregator
from aggsem.postulates import (
    HEURISTIC,
    HOLDS,
    POSTULATES,
    VIOLATED,
    SamplingConfig,
    check_postulate,
    postulate_matrix,
    replay,
)

FAST = SamplingConfig(random_tuples=500)


@pytest.mark.parametrize(
    "name, postulate, status",
    [
        ("min", "P5", HOLDS),
        ("tnorm_product", "P5", VIOLATED),
        ("avg_am", "P9", VIOLATED),
        ("tconorm_drastic", "P3", VIOLATED),
        ("tnorm_drastic", "P3", VIOLATED),
        ("avg_am", "P3", HEURISTIC),
        ("sum", "P1", VIOLATED),
        ("ordered_weighted_avg", "P4", VIOLATED),
    ],
)
def test_spot_verdicts(name, postulate, status):
    assert check_postulate(get_aggregator(name), postulate, FAST).status == status


def test_product_idempotence_witness():
    v = check_postulate(get_aggregator("tnorm_product"), "P5", FAST)
    assert v.witness is not None
    assert replay(get_aggregator("tnorm_product"), v)


def test_drastic_jump_sits_at_the_boundary():
    v = check_postulate(get_aggregator("tconorm_drastic"), "P3", FAST)
    assert v.witness is not None
    assert min(v.witness["point"]) == 0.0


@pytest.mark.parametrize(
    "name, postulate, cell",
    [
        ("tnorm_product", "P9", "e1=1"),
        ("tconorm_algebraic", "P10", "e0=1"),
        ("avg_gm", "P10", "e0=0"),
        ("avg_gm", "P9", "no"),
        ("symmetric_sum", "P9", "e1=0.5"),
    ],
)
def test_element_cells(name, postulate, cell):
    assert check_postulate(get_aggregator(name), postulate, FAST).cell() == cell


def test_empty_matrix():
    m = postulate_matrix([], FAST)
    assert m.cells() == {}
    assert m.to_csv().strip() == ",".join(["aggregator", *POSTULATES])


def test_unknown_postulate():
    with pytest.raises(ValueError):
        check_postulate(get_aggregator("min"), "P13")


def test_matrix_matches_single_checks():
    aggs = [get_aggregator("avg_am"), get_aggregator("max")]
    m = postulate_matrix(aggs, FAST)
    for agg in aggs:
        for p in POSTULATES:
            assert m.verdicts[agg.name][p].status == check_postulate(agg, p, FAST).status


def test_every_violation_replays():
    for agg in catalog():
        for p in POSTULATES:
            v = check_postulate(agg, p, FAST)
            if v.status == VIOLATED:
                assert v.witness is not None, (agg.name, p)
                assert replay(agg, v), (agg.name, p)


def test_custom_violations_are_found():
    # Decreasing and non-idempotent: P2, P5 must fail.
    flip = Aggregator("flip", lambda xs: 1.0 - max(xs))
    assert check_postulate(flip, "P2", FAST).status == VIOLATED
    assert check_postulate(flip, "P5", FAST).status == VIOLATED
    # Jump in the middle of the domain.
    step = Aggregator("step", lambda xs: 1.0 if max(xs) >= 0.5 else 0.0)
    assert check_postulate(step, "P3", FAST).status == VIOLATED


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10_000), p=st.sampled_from(POSTULATES))
def test_deterministic_by_seed(seed, p):
    cfg = SamplingConfig(seed=seed, random_tuples=200)
    agg = get_aggregator("tnorm_lukasiewicz")
    a, b = check_postulate(agg, p, cfg), check_postulate(agg, p, cfg)
    assert (a.status, a.witness, a.samples_used) == (b.status, b.witness, b.samples_used)
