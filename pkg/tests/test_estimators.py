import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from walkmix.estimators import (
    estimate_average_degree,
    ht_estimate,
    relative_error,
    visit_weight,
    walk_weights,
)
from walkmix.oracle import stationary_closed_form, true_average_degree
from walkmix.walkers import WalkerKind, run_walk

import graphgen


# -- visit weights ---------------------------------------------------------------


def test_srw_weight_is_inverse_degree(demo):
    assert visit_weight(demo, WalkerKind.srw(), 0) == 0.25
    assert visit_weight(demo, WalkerKind.nbrw(), 2) == pytest.approx(1 / 3)


def test_mhrw_weight_is_one(demo):
    assert all(visit_weight(demo, WalkerKind.mhrw(), i) == 1.0 for i in range(5))


def test_idrw_weight_on_demo_hub(demo):
    # escape mass of the hub is 5/12, so the weight is 12/5
    assert visit_weight(demo, WalkerKind.idrw(), 0) == pytest.approx(12 / 5, rel=1e-12)


def test_eidrw_alpha_zero_weight_matches_srw(demo):
    for i in range(5):
        assert visit_weight(demo, WalkerKind.eidrw(0.0), i) == visit_weight(
            demo, WalkerKind.srw(), i
        )


def test_weights_inverse_to_stationary_law(demo):
    # w_i must be proportional to 1/pi_i for the inverse-degree family
    for alpha in (0.3, 1.0, 2.0):
        pi = stationary_closed_form(demo, alpha)
        w = np.array([visit_weight(demo, WalkerKind.eidrw(alpha), i) for i in range(5)])
        products = pi * w
        assert np.max(products) / np.min(products) == pytest.approx(1.0, rel=1e-12)


# -- ht_estimate ------------------------------------------------------------------


def test_constant_function_estimates_exactly():
    est = ht_estimate([0, 3, 3, 1], lambda i: 5.5, [0.2, 0.4, 0.4, 1.0])
    assert est.value == pytest.approx(5.5, rel=1e-14)
    assert est.sample_size == 4


def test_hand_computed_ratio():
    # degrees (4, 2) with weights (1/4, 1/2): (1 + 1) / (3/4) = 8/3
    degree = {7: 4, 9: 2}
    est = ht_estimate([7, 9], lambda i: degree[i], [0.25, 0.5])
    assert est.value == pytest.approx(8 / 3, rel=1e-14)


def test_exact_frequencies_recover_true_mean(demo):
    # visits proportional to pi with weights 1/pi: the hub graph's pi has
    # denominator 124, so integer counts can realize it exactly
    counts = (30, 21, 26, 26, 21)
    nodes = [i for i, c in enumerate(counts) for _ in range(c)]
    weights = [visit_weight(demo, WalkerKind.idrw(), i) for i in nodes]
    est = ht_estimate(nodes, lambda i: demo.degree(i), weights)
    assert est.value == pytest.approx(2.8, abs=1e-13)


def test_exactness_oracle_on_random_graph():
    g = graphgen.gnp_lcc(40, 0.15, seed=9)
    alpha = 0.7
    pi = stationary_closed_form(g, alpha)
    w = np.array([visit_weight(g, WalkerKind.eidrw(alpha), i) for i in range(g.node_count)])
    est = ht_estimate(range(g.node_count), lambda i: g.degree(i), pi * w)
    assert est.value == pytest.approx(true_average_degree(g), rel=1e-12)


def test_empty_sample_errors():
    with pytest.raises(ValueError, match="empty"):
        ht_estimate([], lambda i: 1.0, [])


def test_misaligned_weights_error():
    with pytest.raises(ValueError, match="weights"):
        ht_estimate([0, 1], lambda i: 1.0, [1.0])


def test_nonpositive_weights_error():
    with pytest.raises(ValueError, match="positive"):
        ht_estimate([0, 1], lambda i: 1.0, [1.0, 0.0])


@given(
    st.lists(st.floats(min_value=0.01, max_value=100), min_size=1, max_size=30),
    st.floats(min_value=1e-6, max_value=1e6),
)
@settings(max_examples=80, deadline=None)
def test_weight_scale_invariance(weights, c):
    nodes = list(range(len(weights)))
    f = lambda i: float(i * i + 1)
    base = ht_estimate(nodes, f, weights)
    scaled = ht_estimate(nodes, f, [c * w for w in weights])
    assert scaled.value == pytest.approx(base.value, rel=1e-9)


def test_mhrw_estimate_is_plain_mean(demo):
    sample = run_walk(demo, WalkerKind.mhrw(), 0, steps=400, seed=6)
    est = estimate_average_degree(demo, sample)
    assert est.value == pytest.approx(np.mean(sample.degrees), rel=1e-12)


def test_walk_weights_align_with_sample(demo):
    sample = run_walk(demo, WalkerKind.idrw(), 0, steps=50, seed=3)
    w = walk_weights(demo, sample)
    assert w.shape == (51,)
    est_a = ht_estimate(sample, lambda i: demo.degree(i), w)
    est_b = estimate_average_degree(demo, sample)
    assert est_a.value == pytest.approx(est_b.value, rel=1e-12)


# -- relative error -----------------------------------------------------------------


def test_relative_error_examples():
    assert relative_error(2.8, 2.8) == 0
    assert relative_error(2.1, 2.8) == pytest.approx(0.25)
    assert relative_error(3.5, 2.8) == pytest.approx(0.25)


def test_relative_error_zero_truth():
    with pytest.raises(ValueError, match="truth"):
        relative_error(1.0, 0.0)


# -- long-run consistency ----------------------------------------------------------


WALKERS = [
    WalkerKind.srw(),
    WalkerKind.nbrw(),
    WalkerKind.mhrw(),
    WalkerKind.idrw(),
    WalkerKind.eidrw(0.5),
]


@pytest.mark.parametrize("kind", WALKERS, ids=lambda k: k.token())
def test_million_step_estimate_on_demo(demo, kind):
    sample = run_walk(demo, kind, 0, steps=10**6, seed=4242)
    est = estimate_average_degree(demo, sample)
    assert relative_error(est.value, 2.8) < 0.01


@pytest.mark.parametrize("kind", WALKERS, ids=lambda k: k.token())
def test_million_step_estimate_on_random_graph(kind):
    g = graphgen.gnp_lcc(50, 0.1, seed=14)
    truth = true_average_degree(g)
    sample = run_walk(g, kind, 0, steps=10**6, seed=777)
    est = estimate_average_degree(g, sample)
    assert relative_error(est.value, truth) < 0.01
