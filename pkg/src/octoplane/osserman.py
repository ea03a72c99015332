"""Jacobi operators at the origin, their eigenspaces, and spectral checks.

At the chart-1 origin the Jacobi operator of a tangent vector v = (a, b)
has the closed form (c, d) -> (c', d') with

    c' = (4|a|^2 + |b|^2) c + 3 (a conj(b)) d - 4 g(v, x) a
    d' = (|a|^2 + 4|b|^2) d + 3 (b conj(a)) c - 4 g(v, x) b

for the definite and split projective planes (the indefinite plane flips
two signs; the hyperbolic plane negates the whole operator).  For every
non-null unit v the spectrum is {0} with multiplicity 1, lambda*eps_v
with multiplicity 7 and mu*eps_v with multiplicity 8, where eps_v is the
metric square of v and (lambda, mu) = (4, 1) up to the hyperbolic sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .algebra import HyperNumber
from .plane import OP2, PARA_OP2, OP11, OH2
from .metric import origin_metric
from .curvature import TangentVector, tangent_from_coeffs16

__all__ = [
    "JacobiOperator",
    "jacobi_map",
    "jacobi_operator",
    "jacobi_constants",
    "eigenspace_bases",
    "check_special_osserman",
    "non_isotropy_witness",
    "NullVectorError",
]


class NullVectorError(ValueError):
    """The tangent vector is numerically null where a non-null one is needed."""


@dataclass(frozen=True)
class JacobiOperator:
    v: TangentVector
    matrix: np.ndarray


def origin_g(kind, t1, t2):
    """Metric pairing of two origin tangent vectors."""
    g = origin_metric(kind)
    return float(t1.coeffs16() @ g @ t2.coeffs16())


def jacobi_constants(kind):
    """(lambda, mu): the two non-zero spectral constants of the plane."""
    if kind is OH2:
        return -4.0, -1.0
    return 4.0, 1.0


def jacobi_map(kind, v, x):
    """Closed-form image of the Jacobi operator of v applied to x."""
    a, b = v.a, v.b
    c, d = x.a, x.b
    sa, sb = a.norm_sq(), b.norm_sq()
    gvx = origin_g(kind, v, x)
    if kind is OP11:
        cp = (4.0 * sa - sb) * c - 3.0 * (a * b.conj()) * d - (4.0 * gvx) * a
        dp = (sa - 4.0 * sb) * d + 3.0 * (b * a.conj()) * c - (4.0 * gvx) * b
        return TangentVector(cp, dp)
    cp = (4.0 * sa + sb) * c + 3.0 * (a * b.conj()) * d - (4.0 * gvx) * a
    dp = (sa + 4.0 * sb) * d + 3.0 * (b * a.conj()) * c - (4.0 * gvx) * b
    if kind is OH2:
        return TangentVector(-cp, -dp)
    return TangentVector(cp, dp)


def jacobi_operator(kind, v):
    """The 16x16 matrix of the Jacobi operator of v at the origin."""
    cols = np.empty((16, 16))
    alg = kind.algebra
    for i in range(16):
        e = np.zeros(16)
        e[i] = 1.0
        cols[:, i] = jacobi_map(kind, v, tangent_from_coeffs16(kind, e)).coeffs16()
    return JacobiOperator(v, cols)


def _perp_basis(alg, h):
    """Columns spanning the inner-product orthocomplement of h in the algebra."""
    row = (alg.eps * h.coeffs)[None, :]
    return null_space(row)  # (8, 7)


def eigenspace_bases(kind, v):
    """Bases (7 and 8 vectors, as rows of 16) of the two non-zero eigenspaces.

    The construction pivots on whichever of |a|^2, |b|^2 has the larger
    magnitude; for a non-null unit vector at least one is >= 1/2.
    """
    a, b = v.a, v.b
    sa, sb = a.norm_sq(), b.norm_sq()
    eps_v = origin_g(kind, v, v)
    if abs(eps_v) < 1e-8:
        raise NullVectorError("eigenspace construction needs a non-null vector")
    alg = kind.algebra
    mu_sign = 1.0 if kind is OP11 else -1.0
    lam_vecs = np.empty((7, 16))
    mu_vecs = np.empty((8, 16))
    if abs(sa) >= abs(sb):
        ab = a * b.conj()
        ba = b * a.conj()
        perp = _perp_basis(alg, a)
        for i in range(7):
            c = alg.element(perp[:, i])
            lam_vecs[i] = TangentVector(c, (ba * c) / sa).coeffs16()
        for i in range(8):
            d = alg.basis(i + 1)
            mu_vecs[i] = TangentVector(mu_sign * (ab * d) / sa, d).coeffs16()
    else:
        ab = a * b.conj()
        ba = b * a.conj()
        perp = _perp_basis(alg, b)
        for i in range(7):
            d = alg.element(perp[:, i])
            lam_vecs[i] = TangentVector((ab * d) / sb, d).coeffs16()
        for i in range(8):
            c = alg.basis(i + 1)
            mu_vecs[i] = TangentVector(c, mu_sign * (ba * c) / sb).coeffs16()
    return lam_vecs, mu_vecs


# ---------------------------------------------------------------------------
# spectral verification


def _sample_nonnull_unit(kind, rng, min_eps=0.2):
    g = origin_metric(kind)
    while True:
        x = rng.uniform(-1.0, 1.0, 16)
        e = float(x @ g @ x)
        if abs(e) > min_eps * float(x @ x):
            return x / np.sqrt(abs(e)), np.sign(e)


def _expected_spectrum(kind, eps_v):
    lam, mu = jacobi_constants(kind)
    return np.sort(
        np.concatenate([[0.0], np.full(7, lam * eps_v), np.full(8, mu * eps_v)])
    )


def _projector(basis_rows):
    q, _ = np.linalg.qr(basis_rows.T)
    return q @ q.T


def _e_lambda_projector(kind, v16):
    v = tangent_from_coeffs16(kind, v16)
    lam_vecs, _ = eigenspace_bases(kind, v)
    return _projector(np.vstack([v16[None, :], lam_vecs]))


def _unit_in_span(kind, rng, rows):
    g = origin_metric(kind)
    q, _ = np.linalg.qr(rows.T)  # well-scaled basis of the span
    for min_eps in (0.2, 0.05, 0.01):
        for _ in range(200):
            y = rng.uniform(-1.0, 1.0, q.shape[1])
            w = q @ y
            e = float(w @ g @ w)
            if abs(e) > min_eps * float(w @ w):
                return w / np.sqrt(abs(e)), np.sign(e)
    raise RuntimeError("failed to sample a non-null vector in subspace")


def check_special_osserman(kind, samples=100, tol=1e-8, seed=42, rng=None):
    """Spectral-structure report over random non-null unit directions.

    Verifies, per sample: the {0, lambda*eps, mu*eps} spectrum with
    multiplicities (1, 7, 8); eigenspace membership of the closed-form
    bases; invariance of the extended lambda-space under change of the
    defining vector; and the two-way symmetry of mu- (and lambda-) space
    membership.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    lam, mu = jacobi_constants(kind)
    g = origin_metric(kind)
    worst = {
        "spectrum": 0.0,
        "eigvec_residual": 0.0,
        "lambda_space_match": 0.0,
        "mu_symmetry": 0.0,
        "lambda_symmetry": 0.0,
    }
    for _ in range(samples):
        v16, eps_v = _sample_nonnull_unit(kind, rng)
        v = tangent_from_coeffs16(kind, v16)
        j = jacobi_operator(kind, v).matrix
        w = np.linalg.eigvals(j)
        if np.max(np.abs(w.imag)) > tol:
            worst["spectrum"] = max(worst["spectrum"], float(np.max(np.abs(w.imag))))
        spec = np.sort(w.real)
        worst["spectrum"] = max(
            worst["spectrum"], float(np.max(np.abs(spec - _expected_spectrum(kind, eps_v))))
        )
        lam_vecs, mu_vecs = eigenspace_bases(kind, v)
        resid = np.max(np.abs(lam_vecs @ j.T - (lam * eps_v) * lam_vecs))
        resid = max(resid, np.max(np.abs(mu_vecs @ j.T - (mu * eps_v) * mu_vecs)))
        worst["eigvec_residual"] = max(worst["eigvec_residual"], float(resid))

        # lambda-space invariance: E(v) equals E(w) for unit w in E(v)
        rows = np.vstack([v16[None, :], lam_vecs])
        p_v = _projector(rows)
        w16, _ = _unit_in_span(kind, rng, rows)
        p_w = _e_lambda_projector(kind, w16)
        worst["lambda_space_match"] = max(
            worst["lambda_space_match"], float(np.linalg.norm(p_v - p_w))
        )

        # mu-space symmetry: w in mu-kernel of v implies v in mu-kernel of w
        w16, eps_w = _unit_in_span(kind, rng, mu_vecs)
        jw = jacobi_operator(kind, tangent_from_coeffs16(kind, w16)).matrix
        worst["mu_symmetry"] = max(
            worst["mu_symmetry"], float(np.max(np.abs(jw @ v16 - (mu * eps_w) * v16)))
        )

        # lambda analogue of the symmetry
        w16, eps_w = _unit_in_span(kind, rng, lam_vecs)
        jw = jacobi_operator(kind, tangent_from_coeffs16(kind, w16)).matrix
        worst["lambda_symmetry"] = max(
            worst["lambda_symmetry"], float(np.max(np.abs(jw @ v16 - (lam * eps_w) * v16)))
        )
    worst["samples"] = samples
    worst["passed"] = bool(max(v for k, v in worst.items() if k != "samples") <= tol)
    return worst


def non_isotropy_witness():
    """Spectral obstruction showing the split plane is not isotropic.

    Exhibits two null tangent vectors v, w at the split-plane origin and
    the rank-deficient operator whose kernel consists entirely of null
    vectors, so no isometry differential fixing the origin can take v to
    w while sending some unit spacelike vector into that kernel.
    """
    kind = PARA_OP2
    alg = kind.algebra
    ell = alg.basis(5)
    v = TangentVector(alg.basis(2) + ell, alg.zero())
    w = TangentVector(alg.unit(), ell)
    g = origin_metric(kind)
    v16, w16 = v.coeffs16(), w.coeffs16()
    null_norms = [float(v16 @ g @ v16), float(w16 @ g @ w16)]

    # the operator x = (x1, x2) -> (3 x1 - 3 l x2, -3 x2 + 3 l x1): the
    # Jacobi operator of w without its metric-pairing terms
    m = np.zeros((16, 16))
    for i in range(16):
        e = np.zeros(16)
        e[i] = 1.0
        x = tangent_from_coeffs16(kind, e)
        top = 3.0 * x.a - 3.0 * (ell * x.b)
        bot = -3.0 * x.b + 3.0 * (ell * x.a)
        m[:, i] = TangentVector(top, bot).coeffs16()
    kernel = null_space(m)  # (16, dim)
    kernel_dim = kernel.shape[1]
    kernel_norms = [float(k @ g @ k) for k in kernel.T]

    # the full Jacobi operator of w annihilates the same kernel
    jw = jacobi_operator(kind, w).matrix
    jacobi_kernel_residual = float(np.max(np.abs(jw @ kernel))) if kernel_dim else 0.0

    return {
        "v": [float(c) for c in v16],
        "w": [float(c) for c in w16],
        "null_norms": null_norms,
        "kernel_dim": kernel_dim,
        "kernel_max_null_defect": float(np.max(np.abs(kernel_norms))) if kernel_dim else 0.0,
        "jacobi_kernel_residual": jacobi_kernel_residual,
        "passed": bool(
            kernel_dim == 8
            and max(abs(n) for n in null_norms) < 1e-12
            and (not kernel_dim or np.max(np.abs(kernel_norms)) < 1e-10)
            and jacobi_kernel_residual < 1e-10
        ),
    }
