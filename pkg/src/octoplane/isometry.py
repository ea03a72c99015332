"""Reflections, rotations and constructive point-to-point isometries.

Three step types generate every isometry used here:

* Euclidean reflections  (u, v) -> (r u + lam v,  conj(lam) u - r v)
  with r^2 + |lam|^2 = 1,
* indefinite reflections (u, v) -> (-r u + lam v, -conj(lam) u + r v)
  with r^2 - |lam|^2 = 1,
* rotations mixing two homogeneous slots with real sine/cosine weights.

A reflection is defined locally on one chart and extends to the whole
plane by explicit rational formulas with a region-dependent branch.  The
engine below implements the chart-1 forms; reflections attached to chart
2 or 3 are conjugated into chart-1 form by slot permutations, which is
valid because the rational extensions depend only on the algebra, not on
the chart domain inequalities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import HyperNumber
from .plane import (
    OP2,
    PARA_OP2,
    OP11,
    OH2,
    ChartPoint,
    normalize,
    to_chart,
    points_equal,
    origin,
)
from .metric import metric_matrix

__all__ = [
    "EuclideanReflection",
    "IndefiniteReflection",
    "Rotation",
    "IsometryComposition",
    "apply_step",
    "apply_composition",
    "invert_step",
    "isometry_to",
    "verify_isometry",
    "steps_to_json",
    "steps_from_json",
    "ExtensionError",
]

_CONSTRAINT_TOL = 1e-12
_PIVOT_TOL = 1e-9


class ExtensionError(RuntimeError):
    """No rational extension branch applies; indicates inconsistent input."""


@dataclass(frozen=True)
class EuclideanReflection:
    chart: int
    r: float
    lam: HyperNumber

    def __post_init__(self):
        resid = abs(self.r**2 + self.lam.norm_sq() - 1.0)
        if resid > _CONSTRAINT_TOL:
            raise ValueError(f"r^2 + |lam|^2 = 1 violated by {resid:.2e}")


@dataclass(frozen=True)
class IndefiniteReflection:
    chart: int
    r: float
    lam: HyperNumber

    def __post_init__(self):
        resid = abs(self.r**2 - self.lam.norm_sq() - 1.0)
        if resid > _CONSTRAINT_TOL:
            raise ValueError(f"r^2 - |lam|^2 = 1 violated by {resid:.2e}")


@dataclass(frozen=True)
class Rotation:
    """Real rotation of two homogeneous slots: axis 'u' mixes slots 1 and 2,
    axis 'v' mixes slots 1 and 3."""

    t: float
    axis: str = "u"

    def __post_init__(self):
        if self.axis not in ("u", "v"):
            raise ValueError("axis must be 'u' or 'v'")


Step = Union[EuclideanReflection, IndefiniteReflection, Rotation]


@dataclass(frozen=True)
class IsometryComposition:
    steps: tuple

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


def invert_step(step):
    if isinstance(step, Rotation):
        return Rotation(-step.t, step.axis)
    return step  # reflections are involutions


# ---------------------------------------------------------------------------
# raw chart coordinates (algebraic admissibility only)

_PIVOT_SLOT = {1: 0, 2: 1, 3: 2}
_COORD_SLOTS = {1: (1, 2), 2: (0, 2), 3: (0, 1)}


def _raw_admissible(kind, h, tol=_PIVOT_TOL):
    n = h.norm_sq()
    if kind.algebra.is_definite:
        return abs(n) > tol
    return n > tol


def _raw_coords(kind, triple, chart, tol=_PIVOT_TOL):
    pivot = triple[_PIVOT_SLOT[chart]]
    if not _raw_admissible(kind, pivot, tol):
        return None
    piv_inv = pivot.inverse(tol=tol)
    cu, cv = _COORD_SLOTS[chart]
    return triple[cu] * piv_inv, triple[cv] * piv_inv


def _permute(triple, i, j):
    t = list(triple)
    t[i], t[j] = t[j], t[i]
    return tuple(t)


def _branch_weight(kind, h):
    """Branch selector: the squared norm of a region denominator."""
    return h.norm_sq()


def _reflect_chart1_triple(kind, triple, r, lam, indefinite):
    """Apply a chart-1-defined reflection to a raw triple.

    Uses the local formula when the triple admits chart-1 coordinates and
    the rational extension branches otherwise.  Returns a raw triple.
    """
    one = kind.algebra.unit()
    lamc = lam.conj()

    c1 = _raw_coords(kind, triple, 1)
    if c1 is not None:
        u, v = c1
        if indefinite:
            return (one, -r * u + lam * v, -lamc * u + r * v)
        return (one, r * u + lam * v, lamc * u - r * v)

    c2 = _raw_coords(kind, triple, 2)
    if c2 is not None:
        x, z = c2
        zc = z.conj()
        sz = z.norm_sq()
        if indefinite:
            den = one * r - lam * z
            w = _branch_weight(kind, den)
            if w <= _PIVOT_TOL:
                raise ExtensionError("indefinite extension undefined at this point")
            return (
                ((-r) * x + (x * zc) * lamc) / w,
                one,
                (r * lamc - (lamc * zc) * lamc - (r * r) * z + (r * sz) * lamc) / w,
            )
        w1 = _branch_weight(kind, one * r + lam * z)
        w2 = _branch_weight(kind, lamc - r * z)
        if max(w1, w2) <= _PIVOT_TOL:
            raise ExtensionError("no reflection extension branch applies")
        if w1 >= w2:
            return (
                (r * x + (x * zc) * lamc) / w1,
                one,
                (r * lamc + (lamc * zc) * lamc - (r * r) * z - (r * sz) * lamc) / w1,
            )
        return (
            (x * lam - r * (x * zc)) / w2,
            (r * lam + (lam * z) * lam - (r * r) * zc - (r * sz) * lam) / w2,
            one,
        )

    c3 = _raw_coords(kind, triple, 3)
    if c3 is not None:
        x, y = c3
        yc = y.conj()
        sy = y.norm_sq()
        if indefinite:
            raise ExtensionError("indefinite reflection has no chart-3 extension")
        w1 = _branch_weight(kind, r * y + lam)
        w2 = _branch_weight(kind, lamc * y - one * r)
        if max(w1, w2) <= _PIVOT_TOL:
            raise ExtensionError("no reflection extension branch applies")
        if w1 >= w2:
            return (
                (r * (x * yc) + x * lamc) / w1,
                one,
                ((r * sy) * lamc + (lamc * y) * lamc - (r * r) * yc - r * lamc) / w1,
            )
        return (
            ((x * yc) * lam - r * x) / w2,
            ((r * sy) * lam + (lam * yc) * lam - (r * r) * y - r * lam) / w2,
            one,
        )

    raise ExtensionError("triple admits no admissible pivot")


def _apply_reflection(kind, triple, step):
    indefinite = isinstance(step, IndefiniteReflection)
    if step.chart == 1:
        return _reflect_chart1_triple(kind, triple, step.r, step.lam, indefinite)
    if step.chart == 2:
        t = _permute(triple, 0, 1)
        t = _reflect_chart1_triple(kind, t, step.r, step.lam, indefinite)
        return _permute(t, 0, 1)
    # chart 3: conjugating by the (1,3) slot swap turns the chart-3 map with
    # parameters (r, lam) into the chart-1 map with parameters (-r, conj lam)
    # for Euclidean reflections and (-r, -conj lam) for indefinite ones.
    t = _permute(triple, 0, 2)
    if indefinite:
        t = _reflect_chart1_triple(kind, t, -step.r, -step.lam.conj(), True)
    else:
        t = _reflect_chart1_triple(kind, t, -step.r, step.lam.conj(), False)
    return _permute(t, 0, 2)


def _apply_rotation(triple, step):
    c, s = math.cos(step.t), math.sin(step.t)
    i, j = (0, 1) if step.axis == "u" else (0, 2)
    t = list(triple)
    t[i], t[j] = c * triple[i] + s * triple[j], (-s) * triple[i] + c * triple[j]
    return tuple(t)


def apply_step(kind, step, point):
    """Image of a chart point under one isometry step, renormalised."""
    triple = point.triple()
    if isinstance(step, Rotation):
        triple = _apply_rotation(triple, step)
    else:
        triple = _apply_reflection(kind, triple, step)
    return normalize(kind, triple)


def apply_composition(kind, comp, point):
    for step in comp:
        point = apply_step(kind, step, point)
    return point


# ---------------------------------------------------------------------------
# constructive homogeneity


def _unit(kind):
    return kind.algebra.unit()


def _euclid(kind, r, lam):
    return EuclideanReflection(1, r, lam)


def _norm(h):
    return math.sqrt(abs(h.norm_sq()))


def _core_positive(kind, x, y):
    """Steps taking the origin to [1, x, y], assuming |y|^2 > 0 and
    |x|^2 + |y|^2 > 0 (automatic for the definite algebra when y != 0)."""
    sx, sy = x.norm_sq(), y.norm_sq()
    k = math.sqrt(sx + sy)
    el = math.sqrt(sy)
    steps = [Rotation(-math.atan(k), "u")]
    steps.append(_euclid(kind, 0.0, y.conj() / el))
    steps.append(_euclid(kind, -el / k, (x * y.conj()) / (el * k)))
    return steps


def _iso_op2(kind, a, b, tol=1e-12):
    sa, sb = a.norm_sq(), b.norm_sq()
    if sa <= tol and sb <= tol:
        return []
    if sb <= tol:
        na = _norm(a)
        return [
            Rotation(-math.atan(na), "u"),
            _euclid(kind, 0.0, a.conj() / na),
            _euclid(kind, 0.0, _unit(kind)),
        ]
    return _core_positive(kind, a, b)


def _para_prefix_bases(kind):
    one = _unit(kind)
    bases = [[], [_euclid(kind, 0.0, one)]]
    for s in np.linspace(0.0, math.pi, 9, endpoint=False)[1:]:
        bases.append([_euclid(kind, math.cos(s), math.sin(s) * one)])
    return bases


def _scan_rotation(a1, b1, margin):
    """Best rotation angle/axis putting (a1, b1) into strictly positive
    position; returns (axis, t, score) or None."""
    sa, sb = a1.norm_sq(), b1.norm_sq()
    ts = np.linspace(0.0, math.pi, 512, endpoint=False)
    c, s = np.cos(ts), np.sin(ts)
    best = None
    for axis, re_part, ns_other, ns_own in (
        ("v", b1.re(), sa, sb),
        ("u", a1.re(), sb, sa),
    ):
        w = c * c + 2.0 * s * c * re_part + s * s * ns_own
        wq = s * s - 2.0 * s * c * re_part + c * c * ns_own
        if axis == "v":
            score = np.minimum(w, np.minimum(wq / np.maximum(w, 1e-300),
                                             (ns_other + wq) / np.maximum(w, 1e-300)))
        else:
            score = np.minimum(w, np.minimum(ns_other / np.maximum(w, 1e-300),
                                             (wq + ns_other) / np.maximum(w, 1e-300)))
        score = np.where(w > margin, score, -np.inf)
        i = int(np.argmax(score))
        if score[i] > margin and (best is None or score[i] > best[2]):
            best = (axis, float(ts[i]), float(score[i]))
    return best


def _iso_para(kind, a, b, tol=1e-12):
    if max(np.max(np.abs(a.coeffs)), np.max(np.abs(b.coeffs))) <= 1e-12:
        return []
    target = ChartPoint(kind, 1, a, b)
    for margin in (0.05, 1e-3):
        for base in _para_prefix_bases(kind):
            pt = target
            ok = True
            for st in base:
                try:
                    pt = apply_step(kind, st, pt)
                except Exception:
                    ok = False
                    break
            if not ok or pt.chart != 1:
                continue
            a1, b1 = pt.u, pt.v
            prefix = list(base)
            if not (b1.norm_sq() > margin
                    and a1.norm_sq() + b1.norm_sq() > margin):
                found = _scan_rotation(a1, b1, margin)
                if found is None:
                    continue
                axis, t, _ = found
                rot = Rotation(t, axis)
                try:
                    pt2 = apply_step(kind, rot, pt)
                except Exception:
                    continue
                if pt2.chart != 1:
                    continue
                prefix.append(rot)
                pt = pt2
            x, y = pt.u, pt.v
            if not (y.norm_sq() > 0 and x.norm_sq() + y.norm_sq() > 0):
                continue
            steps = _core_positive(kind, x, y)
            steps.extend(invert_step(st) for st in reversed(prefix))
            comp = IsometryComposition(tuple(steps))
            try:
                image = apply_composition(kind, comp, origin(kind))
            except Exception:
                continue
            if points_equal(kind, image, target, tol=1e-8):
                return steps
    raise RuntimeError("no valid positive-position prefix found for target")


def _iso_op11(kind, a, b, allow_pre=True):
    sa, sb = a.norm_sq(), b.norm_sq()
    if sb >= 0.9 and allow_pre:
        r0 = 1.0 / math.sqrt(1.0 + sa)
        pre = EuclideanReflection(3, r0, a.conj() * r0)
        img = apply_step(kind, pre, ChartPoint(kind, 1, a, b))
        uv = to_chart(kind, img.triple(), 1)
        steps = _iso_op11(kind, uv[0], uv[1], allow_pre=False)
        steps.append(pre)
        return steps
    root = math.sqrt(1.0 - sb)
    na = math.sqrt(sa)
    t0 = math.atan(-na / root)
    if na > 1e-12:
        a0 = a.conj() / na
    else:
        a0 = _unit(kind)
    steps = [EuclideanReflection(3, math.cos(t0), math.sin(t0) * a0)]
    rr = 1.0 / root
    steps.append(IndefiniteReflection(2, rr, b.conj() * rr))
    return steps


def _iso_oh2(kind, a, b, tol=1e-12):
    sa, sb = a.norm_sq(), b.norm_sq()
    if sa <= tol and sb <= tol:
        return []
    big_r = math.sqrt(sa + sb)
    t = math.atanh(big_r)
    one = _unit(kind)
    steps = [IndefiniteReflection(2, math.cosh(t), math.sinh(t) * one)]
    if sa <= tol:
        nb = _norm(b)
        steps.append(_euclid(kind, 0.0, one))
        steps.append(_euclid(kind, 0.0, b.conj() / nb))
    else:
        na = _norm(a)
        steps.append(_euclid(kind, 0.0, one))
        steps.append(_euclid(kind, 0.0, -(a.conj()) / na))
        steps.append(_euclid(kind, na / big_r, -(b * a.conj()) / (big_r * na)))
        steps.append(_euclid(kind, 0.0, one))
    return steps


def isometry_to(kind, target):
    """A composition of steps taking the chart-1 origin to the target."""
    if target.chart != 1:
        uv = to_chart(kind, target.triple(), 1)
        if uv is None:
            raise ValueError("target must be representable in chart 1")
        target = ChartPoint(kind, 1, uv[0], uv[1])
    a, b = target.u, target.v
    if kind is OP2:
        steps = _iso_op2(kind, a, b)
    elif kind is PARA_OP2:
        steps = _iso_para(kind, a, b)
    elif kind is OP11:
        steps = _iso_op11(kind, a, b)
    elif kind is OH2:
        steps = _iso_oh2(kind, a, b)
    else:
        raise ValueError(f"unknown plane kind {kind!r}")
    return IsometryComposition(tuple(steps))


# ---------------------------------------------------------------------------
# numerical isometry verification


def verify_isometry(kind, comp, sample_points, fd_step=1e-5):
    """Metric-pullback defect of a composition at chart-1 sample points.

    For each sample p computes the finite-difference Jacobian J of the
    composition (expressed between chart coordinates) and the max-norm of
    J^T M(F(p)) J - M(p).  Returns per-sample deviations and their max.
    """
    from .plane import chart_point_from_coords16

    deviations = []
    for p in sample_points:
        image = apply_composition(kind, comp, p)
        chart_out = image.chart

        def phi(x16):
            q = apply_composition(
                kind, comp, chart_point_from_coords16(kind, p.chart, x16)
            )
            uv = to_chart(kind, q.triple(), chart_out)
            if uv is None:
                raise ExtensionError("perturbed image left the output chart")
            return np.concatenate([uv[0].coeffs, uv[1].coeffs])

        x0 = p.coords16()

        def jac_at(h):
            j = np.empty((16, 16))
            for i in range(16):
                xp, xm = x0.copy(), x0.copy()
                xp[i] += h
                xm[i] -= h
                j[:, i] = (phi(xp) - phi(xm)) / (2.0 * h)
            return j

        # one extrapolation step knocks the truncation error down to O(h^4)
        jac = (4.0 * jac_at(fd_step / 2.0) - jac_at(fd_step)) / 3.0
        m_src = metric_matrix(kind, p)
        uv = to_chart(kind, image.triple(), chart_out)
        m_img = metric_matrix(kind, ChartPoint(kind, chart_out, uv[0], uv[1]))
        deviations.append(float(np.max(np.abs(jac.T @ m_img @ jac - m_src))))
    return {
        "deviations": deviations,
        "max_deviation": max(deviations) if deviations else 0.0,
    }


# ---------------------------------------------------------------------------
# step (de)serialisation


def step_to_dict(step):
    if isinstance(step, Rotation):
        return {"type": "rotation", "t": step.t, "axis": step.axis}
    kind = "euclidean" if isinstance(step, EuclideanReflection) else "indefinite"
    return {
        "type": kind,
        "chart": step.chart,
        "r": step.r,
        "lam": [float(c) for c in step.lam.coeffs],
    }


def steps_to_json(comp):
    return json.dumps([step_to_dict(s) for s in comp])


def steps_from_json(plane_kind, text):
    alg = plane_kind.algebra
    steps = []
    for d in json.loads(text):
        if d["type"] == "rotation":
            steps.append(Rotation(float(d["t"]), d.get("axis", "u")))
        elif d["type"] == "euclidean":
            steps.append(
                EuclideanReflection(int(d["chart"]), float(d["r"]), alg.element(d["lam"]))
            )
        elif d["type"] == "indefinite":
            steps.append(
                IndefiniteReflection(int(d["chart"]), float(d["r"]), alg.element(d["lam"]))
            )
        else:
            raise ValueError(f"unknown step type {d['type']!r}")
    return IsometryComposition(tuple(steps))
