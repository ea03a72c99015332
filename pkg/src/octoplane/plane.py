"""Reduced homogeneous coordinates and chart atlases for the four planes.

A point is a class of triples [a, b, c] of algebra elements under the
right scaling (a, b, c) -> (a * lam, b * lam, c * lam) by admissible
scalars lam.  Each plane carries up to three affine charts obtained by
scaling one slot to 1:

    chart 1:  [1, u, v]      chart 2:  [x, 1, z]      chart 3:  [x, y, 1]

and a chart-specific domain inequality cutting out the actual manifold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .algebra import (
    OCTONION,
    PARA_OCTONION,
    HyperNumber,
    NULL_TOLERANCE,
)

__all__ = [
    "PlaneKind",
    "OP2",
    "PARA_OP2",
    "OP11",
    "OH2",
    "ALL_PLANES",
    "ChartPoint",
    "NotRepresentableError",
    "OverlapError",
    "chart_contains",
    "admissible_scalar",
    "triple_from_chart",
    "to_chart",
    "normalize",
    "transition",
    "points_equal",
    "triple_to_json",
    "triple_from_json",
]


class NotRepresentableError(ValueError):
    """The triple cannot be scaled into any chart of the plane."""


class OverlapError(ValueError):
    """A chart transition was requested outside the chart overlap."""


@dataclass(frozen=True)
class PlaneKind:
    """One of the four plane geometries over an eight-dimensional algebra."""

    name: str
    algebra: "object"
    charts: tuple

    def __repr__(self):
        return f"PlaneKind({self.name!r})"


OP2 = PlaneKind("op2", OCTONION, (1, 2, 3))
PARA_OP2 = PlaneKind("para", PARA_OCTONION, (1, 2, 3))
OP11 = PlaneKind("op11", OCTONION, (1, 2, 3))
OH2 = PlaneKind("oh2", OCTONION, (1, 2, 3))

ALL_PLANES = (OP2, PARA_OP2, OP11, OH2)

# Slot scaled to 1 in each chart, and the two coordinate slots (0-based).
_PIVOT_SLOT = {1: 0, 2: 1, 3: 2}
_COORD_SLOTS = {1: (1, 2), 2: (0, 2), 3: (0, 1)}


def chart_contains(kind, chart, u, v):
    """Whether chart coordinates (u, v) satisfy the chart's domain inequality."""
    su, sv = u.norm_sq(), v.norm_sq()
    if kind is OP2:
        return True
    if kind is PARA_OP2:
        return 1.0 + su + sv > 0.0
    if kind is OP11:
        if chart == 1:
            return 1.0 + su - sv > 0.0
        if chart == 2:
            return su + 1.0 - sv > 0.0
        return su + sv - 1.0 > 0.0
    if kind is OH2:
        if chart == 1:
            return su + sv < 1.0
        if chart == 2:
            return su - 1.0 - sv > 0.0
        return su - sv - 1.0 > 0.0
    raise ValueError(f"unknown plane kind {kind!r}")


def admissible_scalar(kind, lam, tol=NULL_TOLERANCE):
    """Whether lam may be used to rescale triples of this plane.

    For the definite algebra any invertible element works; in the split
    algebra the scalar must have strictly positive norm.
    """
    n = lam.norm_sq()
    if kind.algebra.is_definite:
        return abs(n) > tol
    return n > tol


@dataclass(frozen=True)
class ChartPoint:
    """A point presented in a specific chart of a specific plane."""

    kind: PlaneKind
    chart: int
    u: HyperNumber
    v: HyperNumber

    def triple(self):
        return triple_from_chart(self.kind, self.chart, self.u, self.v)

    def coords16(self):
        """Chart coordinates flattened to a 16-vector."""
        return np.concatenate([self.u.coeffs, self.v.coeffs])

    def __repr__(self):
        return f"ChartPoint({self.kind.name}, chart={self.chart}, u={self.u}, v={self.v})"


def chart_point_from_coords16(kind, chart, x):
    alg = kind.algebra
    x = np.asarray(x, dtype=float)
    return ChartPoint(kind, chart, alg.element(x[:8]), alg.element(x[8:]))


def triple_from_chart(kind, chart, u, v):
    one = kind.algebra.unit()
    slots = [None, None, None]
    slots[_PIVOT_SLOT[chart]] = one
    cu, cv = _COORD_SLOTS[chart]
    slots[cu] = u
    slots[cv] = v
    return tuple(slots)


def to_chart(kind, triple, chart, tol=NULL_TOLERANCE):
    """Coordinates of the triple in the requested chart, or None.

    Returns None when the pivot slot is not admissible for rescaling or
    when the rescaled coordinates violate the chart's domain inequality.
    """
    pivot = triple[_PIVOT_SLOT[chart]]
    if not admissible_scalar(kind, pivot, tol=tol):
        return None
    piv_inv = pivot.inverse(tol=tol)
    cu, cv = _COORD_SLOTS[chart]
    u = triple[cu] * piv_inv
    v = triple[cv] * piv_inv
    if not chart_contains(kind, chart, u, v):
        return None
    return u, v


def normalize(kind, triple, tol=NULL_TOLERANCE):
    """Canonical chart presentation: the lowest-index chart that works."""
    for chart in kind.charts:
        uv = to_chart(kind, triple, chart, tol=tol)
        if uv is not None:
            return ChartPoint(kind, chart, uv[0], uv[1])
    raise NotRepresentableError(
        f"triple does not lie in any chart of plane {kind.name}"
    )


def transition(kind, from_chart, to_chart_index, u, v, tol=NULL_TOLERANCE):
    """Chart transition map; raises OverlapError outside the overlap."""
    if not chart_contains(kind, from_chart, u, v):
        raise OverlapError("source coordinates are outside their chart domain")
    triple = triple_from_chart(kind, from_chart, u, v)
    uv = to_chart(kind, triple, to_chart_index, tol=tol)
    if uv is None:
        raise OverlapError(
            f"point is not in the overlap of charts {from_chart} and {to_chart_index}"
        )
    return uv


def points_equal(kind, p, q, tol=1e-9):
    """Whether two chart presentations name the same projective point."""
    tp, tq = p.triple(), q.triple()
    for chart in kind.charts:
        cp = to_chart(kind, tp, chart)
        cq = to_chart(kind, tq, chart)
        if cp is None or cq is None:
            continue
        du = np.max(np.abs(cp[0].coeffs - cq[0].coeffs))
        dv = np.max(np.abs(cp[1].coeffs - cq[1].coeffs))
        scale = 1.0 + max(
            np.max(np.abs(cp[0].coeffs)), np.max(np.abs(cp[1].coeffs))
        )
        return bool(max(du, dv) <= tol * scale)
    return False


def origin(kind):
    """The chart-1 origin [1, 0, 0]."""
    z = kind.algebra.zero()
    return ChartPoint(kind, 1, z, z)


def triple_to_json(triple):
    """Serialise a triple as three JSON arrays of eight reals."""
    return json.dumps([[float(c) for c in h.coeffs] for h in triple])


def triple_from_json(kind, text):
    data = json.loads(text)
    if len(data) != 3 or any(len(slot) != 8 for slot in data):
        raise ValueError("expected three slots of eight coefficients")
    alg = kind.algebra
    return tuple(alg.element(slot) for slot in data)
