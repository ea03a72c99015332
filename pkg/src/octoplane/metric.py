"""Closed-form 16x16 metric tensors for the four planes, per chart.

Every metric is conformal-rational: two 8x8 diagonal blocks scaled by
norm factors, an 8x8 coupling block built from the product u * conj(v),
and a squared conformal denominator.  The frame is e_i = d/du_i,
f_i = d/dv_i with respect to the chart coordinates (u, v).
"""

from __future__ import annotations

import numpy as np

from .algebra import mul_coeffs, conj_coeffs
from .plane import (
    OP2,
    PARA_OP2,
    OP11,
    OH2,
    ChartPoint,
    chart_contains,
)

__all__ = [
    "coupling_block",
    "metric_matrix",
    "origin_metric",
    "signature",
    "pullback_deviation",
    "OutsideChartError",
]


class OutsideChartError(ValueError):
    """The point violates its chart's domain inequality."""


def _left_mult_table(alg, w):
    """Matrix T with T[i, j] = <w x_j, x_i> in the algebra's inner product."""
    prods = mul_coeffs(alg, w[None, :], np.eye(8))
    return (prods * alg.eps[None, :]).T


def coupling_block(kind, u, v):
    """The 8x8 coupling block A of the chart-1 metric, without denominator.

    A[i, j] = -<(u conj(v)) x_j, x_i> for all kinds except the hyperbolic
    plane, where the sign is positive.
    """
    alg = kind.algebra
    w = mul_coeffs(alg, u.coeffs, conj_coeffs(v.coeffs))
    t = _left_mult_table(alg, w)
    return t if kind is OH2 else -t


def _blocks(kind, chart, u, v):
    """Diagonal factors, coupling block and denominator base for a chart."""
    alg = kind.algebra
    su, sv = u.norm_sq(), v.norm_sq()
    w = mul_coeffs(alg, u.coeffs, conj_coeffs(v.coeffs))
    t = _left_mult_table(alg, w)
    eye = np.eye(8)
    g8 = np.diag(alg.eps)
    if kind is OP2:
        return (1.0 + sv) * eye, (1.0 + su) * eye, -t, 1.0 + su + sv
    if kind is PARA_OP2:
        return (1.0 + sv) * g8, (1.0 + su) * g8, -t, 1.0 + su + sv
    if kind is OP11:
        if chart in (1, 2):
            return (1.0 - sv) * eye, -(1.0 + su) * eye, t, 1.0 + su - sv
        return (sv - 1.0) * eye, (su - 1.0) * eye, -t, su + sv - 1.0
    if kind is OH2:
        if chart == 1:
            return (1.0 - sv) * eye, (1.0 - su) * eye, t, 1.0 - su - sv
        if chart == 2:
            return (1.0 + sv) * eye, (su - 1.0) * eye, -t, su - 1.0 - sv
        return (1.0 + sv) * eye, (su - 1.0) * eye, -t, su - sv - 1.0
    raise ValueError(f"unknown plane kind {kind!r}")


def metric_matrix(kind, point):
    """Metric tensor of the plane at a chart point, as a 16x16 matrix."""
    if not chart_contains(kind, point.chart, point.u, point.v):
        raise OutsideChartError(
            f"point outside chart {point.chart} of plane {kind.name}"
        )
    top, bottom, a, denom = _blocks(kind, point.chart, point.u, point.v)
    m = np.empty((16, 16))
    m[:8, :8] = top
    m[8:, 8:] = bottom
    m[:8, 8:] = a
    m[8:, :8] = a.T
    return m / denom**2


def origin_metric(kind):
    """Metric at the chart-1 origin: a signature-revealing diagonal matrix."""
    if kind is PARA_OP2:
        return np.diag(np.concatenate([kind.algebra.eps, kind.algebra.eps]))
    if kind is OP11:
        return np.diag(np.concatenate([np.ones(8), -np.ones(8)]))
    return np.eye(16)


def signature(m, zero_tol=1e-9):
    """Counts of (positive, negative, zero) eigenvalues of a symmetric matrix."""
    w = np.linalg.eigvalsh(np.asarray(m, dtype=float))
    thr = zero_tol * max(1.0, np.max(np.abs(w)))
    pos = int(np.sum(w > thr))
    neg = int(np.sum(w < -thr))
    return pos, neg, len(w) - pos - neg


def _transition_map16(kind, from_chart, to_chart_index):
    from .plane import transition, chart_point_from_coords16

    def phi(x):
        p = chart_point_from_coords16(kind, from_chart, x)
        u, v = transition(kind, from_chart, to_chart_index, p.u, p.v)
        return np.concatenate([u.coeffs, v.coeffs])

    return phi


def pullback_deviation(kind, from_chart, to_chart_index, point, step=1e-5):
    """Max-norm defect of the transition map as a metric isometry.

    Computes the central finite-difference Jacobian J of the transition
    and returns max |J^T M(T(p)) J - M(p)|.
    """
    if from_chart == to_chart_index:
        return 0.0
    phi = _transition_map16(kind, from_chart, to_chart_index)
    x0 = point.coords16()
    jac = np.empty((16, 16))
    for i in range(16):
        xp, xm = x0.copy(), x0.copy()
        xp[i] += step
        xm[i] -= step
        jac[:, i] = (phi(xp) - phi(xm)) / (2.0 * step)
    from .plane import chart_point_from_coords16

    image = chart_point_from_coords16(kind, to_chart_index, phi(x0))
    m_src = metric_matrix(kind, point)
    m_img = metric_matrix(kind, image)
    return float(np.max(np.abs(jac.T @ m_img @ jac - m_src)))
