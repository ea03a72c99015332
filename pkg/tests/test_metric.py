"""Metric matrix, signature and chart-compatibility tests."""

import numpy as np
import pytest

from octoplane.plane import OP2, PARA_OP2, OP11, OH2, ALL_PLANES, ChartPoint, to_chart, origin
from octoplane.metric import (
    metric_matrix,
    origin_metric,
    coupling_block,
    signature,
    pullback_deviation,
    OutsideChartError,
)
from octoplane.sampling import make_rng, sample_chart1_point, sample_element

EXPECTED_SIGNATURE = {
    "op2": (16, 0, 0),
    "para": (8, 8, 0),
    "op11": (8, 8, 0),
    "oh2": (16, 0, 0),
}


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_origin_metric_value(kind):
    m = metric_matrix(kind, origin(kind))
    assert np.allclose(m, origin_metric(kind), atol=1e-14)
    assert signature(m) == EXPECTED_SIGNATURE[kind.name]


def test_origin_metric_diagonals():
    assert np.allclose(origin_metric(OP2), np.eye(16))
    assert np.allclose(origin_metric(OH2), np.eye(16))
    assert np.allclose(origin_metric(OP11), np.diag([1.0] * 8 + [-1.0] * 8))
    eps = PARA_OP2.algebra.eps
    assert np.allclose(origin_metric(PARA_OP2), np.diag(np.concatenate([eps, eps])))


def test_unit_point_metric_value():
    p = ChartPoint(OP2, 1, OP2.algebra.unit(), OP2.algebra.zero())
    m = metric_matrix(OP2, p)
    expect = np.diag([0.25] * 8 + [0.5] * 8)
    assert np.allclose(m, expect, atol=1e-14)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_symmetry_and_signature_on_samples(kind):
    rng = make_rng(21)
    for _ in range(30):
        p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.1)
        m = metric_matrix(kind, p)
        assert np.allclose(m, m.T, atol=1e-13)
        assert signature(m) == EXPECTED_SIGNATURE[kind.name]


@pytest.mark.parametrize("kind", [OP2, OH2])
def test_definite_planes_positive(kind):
    rng = make_rng(22)
    for _ in range(20):
        p = sample_chart1_point(rng, kind)
        assert np.min(np.linalg.eigvalsh(metric_matrix(kind, p))) > 0


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_coupling_block_norm_identity(kind):
    rng = make_rng(23)
    g8 = np.diag(kind.algebra.eps) if kind is PARA_OP2 else np.eye(8)
    for _ in range(30):
        u = sample_element(rng, kind.algebra, 1.0)
        v = sample_element(rng, kind.algebra, 1.0)
        a = coupling_block(kind, u, v)
        target = u.norm_sq() * v.norm_sq() * g8
        assert np.allclose(a @ g8 @ a.T, target, atol=1e-10)
        assert np.allclose(a.T @ g8 @ a, target, atol=1e-10)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_transition_pullback(kind):
    rng = make_rng(24)
    checked = 0
    while checked < 8:
        p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.15)
        tri = p.triple()
        cs = {c: to_chart(kind, tri, c) for c in kind.charts}
        for i in kind.charts:
            if cs[i] is None:
                continue
            q = ChartPoint(kind, i, *cs[i])
            for j in kind.charts:
                if i != j and cs[j] is not None:
                    assert pullback_deviation(kind, i, j, q) < 1e-7
                    checked += 1


def test_metric_outside_chart_raises():
    alg = OH2.algebra
    p = ChartPoint(OH2, 1, alg.unit(), alg.unit())  # |u|^2 + |v|^2 = 2 > 1
    with pytest.raises(OutsideChartError):
        metric_matrix(OH2, p)


def test_signature_counts_zeros():
    m = np.diag([1.0, -2.0, 0.0, 3.0])
    assert signature(m) == (2, 1, 1)
