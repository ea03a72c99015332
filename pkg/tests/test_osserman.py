"""Jacobi operator spectral-structure tests."""

import numpy as np
import pytest

from octoplane.plane import OP2, PARA_OP2, OP11, OH2, ALL_PLANES
from octoplane.curvature import TangentVector, tangent_from_coeffs16, closed_form_tensor
from octoplane.metric import origin_metric
from octoplane.osserman import (
    NullVectorError,
    jacobi_map,
    jacobi_operator,
    jacobi_constants,
    eigenspace_bases,
    check_special_osserman,
    non_isotropy_witness,
)
from octoplane.sampling import make_rng


def _nonnull_unit(kind, rng):
    g = origin_metric(kind)
    while True:
        x = rng.uniform(-1, 1, 16)
        e = float(x @ g @ x)
        if abs(e) > 0.2 * float(x @ x):
            return x / np.sqrt(abs(e)), np.sign(e)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_operator_matches_tensor_contraction(kind):
    rng = make_rng(61)
    r = closed_form_tensor(kind)
    gi = np.linalg.inv(origin_metric(kind))
    for _ in range(10):
        v16 = rng.uniform(-1, 1, 16)
        j = jacobi_operator(kind, tangent_from_coeffs16(kind, v16)).matrix
        jt = np.einsum("ls,pqrs,p,r->lq", gi, r, v16, v16)
        assert np.allclose(j, jt, atol=1e-10)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_operator_annihilates_its_vector(kind):
    rng = make_rng(62)
    for _ in range(10):
        v16 = rng.uniform(-1, 1, 16)
        v = tangent_from_coeffs16(kind, v16)
        out = jacobi_map(kind, v, v)
        assert np.max(np.abs(out.coeffs16())) < 1e-10


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_spectrum_multiplicities(kind):
    rng = make_rng(63)
    lam, mu = jacobi_constants(kind)
    for _ in range(20):
        v16, eps_v = _nonnull_unit(kind, rng)
        j = jacobi_operator(kind, tangent_from_coeffs16(kind, v16)).matrix
        spec = np.sort(np.linalg.eigvals(j).real)
        expect = np.sort(np.concatenate([[0.0], np.full(7, lam * eps_v), np.full(8, mu * eps_v)]))
        assert np.max(np.abs(spec - expect)) < 1e-8


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_eigenspace_bases_are_eigenvectors(kind):
    rng = make_rng(64)
    lam, mu = jacobi_constants(kind)
    for _ in range(20):
        v16, eps_v = _nonnull_unit(kind, rng)
        v = tangent_from_coeffs16(kind, v16)
        j = jacobi_operator(kind, v).matrix
        lam_vecs, mu_vecs = eigenspace_bases(kind, v)
        assert np.linalg.matrix_rank(lam_vecs, tol=1e-8) == 7
        assert np.linalg.matrix_rank(mu_vecs, tol=1e-8) == 8
        assert np.max(np.abs(lam_vecs @ j.T - lam * eps_v * lam_vecs)) < 1e-8
        assert np.max(np.abs(mu_vecs @ j.T - mu * eps_v * mu_vecs)) < 1e-8


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_null_vector_rejected(kind):
    alg = kind.algebra
    if kind in (OP2, PARA_OP2, OH2):
        if alg.is_definite:
            pytest.skip("definite metric admits no null vectors")
        v = TangentVector(alg.basis(1) + alg.basis(5), alg.zero())
    else:
        v = TangentVector(alg.unit(), alg.unit())
    with pytest.raises(NullVectorError):
        eigenspace_bases(kind, v)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_special_spectral_conditions(kind):
    report = check_special_osserman(kind, samples=30, tol=1e-8, seed=65)
    assert report["passed"], report
    assert report["spectrum"] < 1e-8
    assert report["eigvec_residual"] < 1e-8
    assert report["lambda_space_match"] < 1e-8
    assert report["mu_symmetry"] < 1e-8
    assert report["lambda_symmetry"] < 1e-8


def test_non_isotropy_witness_structure():
    w = non_isotropy_witness()
    assert w["passed"]
    assert w["kernel_dim"] == 8
    assert max(abs(n) for n in w["null_norms"]) < 1e-12
    assert w["kernel_max_null_defect"] < 1e-10
    assert w["jacobi_kernel_residual"] < 1e-10


def test_witness_vectors_are_null_but_nonzero():
    w = non_isotropy_witness()
    assert np.max(np.abs(w["v"])) > 0.5
    assert np.max(np.abs(w["w"])) > 0.5
