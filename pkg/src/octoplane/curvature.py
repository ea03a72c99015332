"""Curvature tensors: finite-difference jets, closed forms, Jacobi spectra.

At the chart-1 origin every plane has vanishing first metric jets, so the
full (0,4) curvature tensor is assembled directly from second jets:

    R_{abcd} = (g_{bc;ad} + g_{ad;bc} - g_{ac;bd} - g_{bd;ac}) / 2.

The same tensors admit closed forms built from the algebra product; both
routes are implemented and cross-checked.  Away from the origin the full
Christoffel pipeline from first/second metric jets is used.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import HyperNumber, mul_coeffs, conj_coeffs
from .plane import OP2, PARA_OP2, OP11, OH2, chart_point_from_coords16
from .metric import metric_matrix

__all__ = [
    "TangentVector",
    "second_jets_origin",
    "first_jets_origin",
    "riemann_origin_numeric",
    "riemann_closed_form",
    "closed_form_tensor",
    "riemann_at_point",
    "jacobi_matrix_from_tensor",
    "jacobi_spectrum_at_point",
]


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector at the chart-1 origin as an algebra-element pair."""

    a: HyperNumber
    b: HyperNumber

    def coeffs16(self):
        return np.concatenate([self.a.coeffs, self.b.coeffs])


def tangent_from_coeffs16(kind, x):
    x = np.asarray(x, dtype=float)
    alg = kind.algebra
    return TangentVector(alg.element(x[:8]), alg.element(x[8:]))


def _metric_func(kind, chart):
    def f(x16):
        return metric_matrix(kind, chart_point_from_coords16(kind, chart, x16))

    return f


def _second_jets(kind, chart, x0, step=1e-3, richardson=True):
    """d2[i, j] = second partial of the metric matrix in directions i, j."""
    f = _metric_func(kind, chart)

    def jets_at(h):
        g0 = f(x0)
        out = np.empty((16, 16, 16, 16))
        plus = []
        minus = []
        for i in range(16):
            e = np.zeros(16)
            e[i] = h
            plus.append(f(x0 + e))
            minus.append(f(x0 - e))
            out[i, i] = (plus[i] - 2.0 * g0 + minus[i]) / h**2
        for i in range(16):
            for j in range(i + 1, 16):
                ei, ej = np.zeros(16), np.zeros(16)
                ei[i] = h
                ej[j] = h
                mixed = (
                    f(x0 + ei + ej)
                    + f(x0 - ei - ej)
                    - f(x0 + ei - ej)
                    - f(x0 - ei + ej)
                ) / (4.0 * h**2)
                out[i, j] = mixed
                out[j, i] = mixed
        return out

    if not richardson:
        return jets_at(step)
    coarse = jets_at(step)
    fine = jets_at(step / 2.0)
    return (4.0 * fine - coarse) / 3.0


def _first_jets(kind, chart, x0, step=1e-5):
    """dg[i] = first partial of the metric matrix in direction i."""
    f = _metric_func(kind, chart)
    out = np.empty((16, 16, 16))
    for i in range(16):
        e = np.zeros(16)
        e[i] = step
        out[i] = (f(x0 + e) - f(x0 - e)) / (2.0 * step)
    return out


def second_jets_origin(kind, step=1e-3, richardson=True):
    return _second_jets(kind, 1, np.zeros(16), step=step, richardson=richardson)


def first_jets_origin(kind, step=1e-5):
    return _first_jets(kind, 1, np.zeros(16), step=step)


def riemann_origin_numeric(kind, step=1e-3, richardson=True):
    """(0,4) curvature tensor at the origin from finite-difference jets."""
    j = second_jets_origin(kind, step=step, richardson=richardson)
    # R[a,b,c,d] with g_{bc;ad} = j[a,d,b,c]
    r = np.einsum("adbc->abcd", j) + np.einsum("bcad->abcd", j)
    r -= np.einsum("bdac->abcd", j) + np.einsum("acbd->abcd", j)
    return 0.5 * r


# ---------------------------------------------------------------------------
# closed forms at the origin


def _product_sign(kind):
    """Sign on the five algebra-product terms relative to the base form."""
    return -1.0 if kind is OP11 else 1.0


def _overall_sign(kind):
    return -1.0 if kind is OH2 else 1.0


def riemann_closed_form(kind, t1, t2, t3, t4):
    """Closed-form curvature at the origin on four tangent vectors."""
    a, b = t1.a, t1.b
    c, d = t2.a, t2.b
    e, f = t3.a, t3.b
    g, h = t4.a, t4.b
    p4 = 4.0 * (
        a.inner(e) * c.inner(g)
        - c.inner(e) * a.inner(g)
        + b.inner(f) * d.inner(h)
        - d.inner(f) * b.inner(h)
    )
    q = (
        -(e * d.conj()).inner(g * b.conj())
        + (e * b.conj()).inner(g * d.conj())
        - (c * f.conj()).inner(a * h.conj())
        + (a * f.conj()).inner(c * h.conj())
        - (a * d.conj() - c * b.conj()).inner(g * f.conj() - e * h.conj())
    )
    return _overall_sign(kind) * (p4 + _product_sign(kind) * q)


def closed_form_tensor(kind):
    """The full 16^4 closed-form curvature tensor at the origin."""
    alg = kind.algebra
    eps = alg.eps
    eye = np.eye(8)
    zero = np.zeros((8, 8))
    f1 = np.vstack([eye, zero])  # first-slot parts of the 16 frame vectors
    f2 = np.vstack([zero, eye])
    ip1 = f1 @ np.diag(eps) @ f1.T
    ip2 = f2 @ np.diag(eps) @ f2.T
    x = mul_coeffs(alg, f1[:, None, :], conj_coeffs(f2)[None, :, :])
    dx = x - np.swapaxes(x, 0, 1)
    p4 = 4.0 * (
        np.einsum("pr,qs->pqrs", ip1, ip1)
        - np.einsum("qr,ps->pqrs", ip1, ip1)
        + np.einsum("pr,qs->pqrs", ip2, ip2)
        - np.einsum("qr,ps->pqrs", ip2, ip2)
    )
    q = (
        -np.einsum("rqk,spk,k->pqrs", x, x, eps)
        + np.einsum("rpk,sqk,k->pqrs", x, x, eps)
        - np.einsum("qrk,psk,k->pqrs", x, x, eps)
        + np.einsum("prk,qsk,k->pqrs", x, x, eps)
        - np.einsum("pqk,srk,k->pqrs", dx, dx, eps)
    )
    return _overall_sign(kind) * (p4 + _product_sign(kind) * q)


# ---------------------------------------------------------------------------
# general points: Christoffel pipeline


def riemann_at_point(kind, point, step=1e-3, first_step=1e-5):
    """(0,4) curvature tensor at an arbitrary chart point.

    Index convention matches the origin tensor: the last index is lowered
    against the derivative of the second slot, i.e. R[a,b,c,d] agrees
    with riemann_origin_numeric at the origin.
    """
    x0 = point.coords16()
    chart = point.chart
    g = metric_matrix(kind, point)
    gi = np.linalg.inv(g)
    dg = _first_jets(kind, chart, x0, step=first_step)
    d2 = _second_jets(kind, chart, x0, step=step, richardson=True)
    # lowered Christoffel symbols Gamma_{ab,m}
    gamma_l = 0.5 * (
        np.einsum("amb->abm", dg) + np.einsum("bma->abm", dg) - np.einsum("mab->abm", dg)
    )
    gamma = np.einsum("lm,abm->lab", gi, gamma_l)
    # d/dx_q of Gamma_{pr,s}
    dgamma_l = 0.5 * (
        np.einsum("qpsr->pqrs", d2) + np.einsum("qrsp->pqrs", d2) - np.einsum("qspr->pqrs", d2)
    )
    term_a = dgamma_l - np.einsum("qsm,mpr->pqrs", dg, gamma)
    gg = np.einsum("qms,mpr->pqrs", gamma_l, gamma) - np.einsum(
        "pms,mqr->pqrs", gamma_l, gamma
    )
    return term_a - np.einsum("qprs->pqrs", term_a) + gg


def jacobi_matrix_from_tensor(g, r4, v16):
    """Matrix of x -> R(v, x)v contracted against the inverse metric."""
    gi = np.linalg.inv(g)
    return np.einsum("ls,pqrs,p,r->lq", gi, r4, v16, v16)


def jacobi_spectrum_at_point(kind, point, v16, step=1e-3, imag_tol=1e-6):
    """Sorted real Jacobi eigenvalues for a non-null unit direction v.

    v is normalised so that |g(v, v)| = 1 before forming the operator.
    """
    g = metric_matrix(kind, point)
    v16 = np.asarray(v16, dtype=float)
    eps_v = float(v16 @ g @ v16)
    if abs(eps_v) < 1e-8:
        raise ValueError("direction is numerically null")
    v16 = v16 / np.sqrt(abs(eps_v))
    r4 = riemann_at_point(kind, point, step=step)
    m = jacobi_matrix_from_tensor(g, r4, v16)
    w = np.linalg.eigvals(m)
    if np.max(np.abs(w.imag)) > imag_tol:
        raise RuntimeError("Jacobi spectrum has unexpectedly complex eigenvalues")
    return np.sort(w.real)
